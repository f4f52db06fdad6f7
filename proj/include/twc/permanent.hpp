#ifndef TWC_PERMANENT_HPP
#define TWC_PERMANENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "twc/graph.hpp"
#include "twc/matrix.hpp"

namespace twc {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultPermanentCap = 24;

// Exact permanent via Ryser inclusion-exclusion with Gray-code column-sum
// updates. Accumulates in checked 64-bit arithmetic and transparently
// escalates to arbitrary precision on overflow; never wraps.
BigInt permanent(const LabeledIntMatrix& m, int size_cap = kDefaultPermanentCap);
BigInt permanent(const std::vector<std::vector<std::int64_t>>& m,
                 int size_cap = kDefaultPermanentCap);

// Naive permutation-expansion permanent, kept as an independent oracle for
// the Ryser path. Exponential; intended for small matrices.
BigInt permanent_naive(const LabeledIntMatrix& m);
BigInt permanent_naive(const std::vector<std::vector<std::int64_t>>& m);

// Permanent parity via elimination over GF(2): the parity of the permanent
// equals the parity of the determinant.
int permanent_mod2(const LabeledIntMatrix& m);
int permanent_mod2(const std::vector<std::vector<std::int64_t>>& m);

// |sum over spanning subgraphs H whose components are single edges and
// cycles of 2^(number of cycle components)|; equals |per(adjacency(G))|.
// Brute-force enumeration, n <= 12.
BigInt sachs_permanent(const Graph& g);

}  // namespace twc

#endif
