#ifndef TWC_CHOOSABILITY_HPP
#define TWC_CHOOSABILITY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "twc/classify.hpp"
#include "twc/pind.hpp"

namespace twc {

using Rational = boost::rational<long long>;

// Accepts integers, p/q fractions, and finite decimals.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

// Per-element candidate lists: k values per vertex, k' per edge. Values
// within one list are distinct; list sizes are uniform per role.
struct TotalListAssignment {
    std::vector<std::vector<Rational>> vertex_lists;  // [1..n], slot 0 unused
    std::vector<std::vector<Rational>> edge_lists;    // by edge index

    void validate(const Graph& g) const;  // throws ValidationError
};

// Lines `V <id> w1 w2 ...` and `E <u> <v> w1 w2 ...`; every vertex and edge
// of g must be covered.
TotalListAssignment read_list_assignment(std::istream& in, const Graph& g,
                                         const std::string& source_name = "<input>");

struct TotalWeighting {
    std::vector<Rational> vertex_weight;  // [1..n], slot 0 unused
    std::vector<Rational> edge_weight;    // by edge index

    Rational s(const Graph& g, int v) const;
    bool proper(const Graph& g) const;  // all adjacent sums distinct
    nlohmann::ordered_json to_json(const Graph& g) const;
};

// (1,2)-choosability by the two certificate routes: per(B_G) != 0, else
// M(L(G)) odd (the permanent and the matching count agree mod 2).
Certificate check_12_certificate(const Graph& g, const OrientedGraph& d);
Certificate check_12_certificate(const Graph& g);

// (2,2)-choosability via pind(A_G) = 1, (1,3)-choosability via
// pind(B_G) <= 2.
Certificate check_22_certificate(const Graph& g);
Certificate check_13_certificate(const Graph& g);

// Family membership per the parity classification of unicyclic and bicyclic
// graphs. The verdict reports the defining quantities and every constraint
// violation; predicted_parity is the parity the classification asserts for
// M(L(G)) (1 = odd, 0 = even). The bicyclic predictions are reported as
// defined even where measurement disagrees; see the notes they carry.
struct FamilyVerdict {
    std::string tag;  // U1, U2, B1, B2, B3, B4, outside
    std::optional<int> predicted_parity;
    int s = 0;            // unicyclic: sum of even-tree counts over the cycle
    int s1_p = 0, s1_q = 0;  // bicyclic: the two per-cycle (or per-side) sums
    std::vector<std::string> notes;
    std::vector<std::string> violations;

    nlohmann::ordered_json to_json() const;
};

FamilyVerdict classify_family(const Graph& g);

// Exhaustive search for a proper weighting drawing each value from its
// list: edge weights outer, vertex weights inner, pruning as soon as two
// adjacent finished vertices collide. probe, when given, receives the
// number of candidate nodes examined.
std::optional<TotalWeighting> find_proper_weighting(const Graph& g,
                                                    const TotalListAssignment& lists,
                                                    long long* probe = nullptr,
                                                    long long product_cap = 10'000'000);

// G'' with K_{k-1} glued at attach (clique vertices: attach plus the last
// k-2 vertices), extended by a new vertex n+1 joined to the whole clique.
Graph clique_extended_graph(const Graph& gpp, int attach, int k);

// Given a proper weighting w of G'', extends it to the clique-extended
// graph: pick new-edge weights, re-pick clique vertex weights so the old
// sums survive (f'(v_i) = f(v_i) - w_i when that value is listed), then
// separate the new vertex; falls back to a local search over the clique's
// lists. Returns nothing when the local strategies fail (callers may then
// search the whole graph).
std::optional<TotalWeighting> extend_weighting_clique(const Graph& gpp, const TotalWeighting& w,
                                                      int attach, int k,
                                                      const TotalListAssignment& lists,
                                                      std::vector<std::string>* log = nullptr);

}  // namespace twc

#endif
