#include "twc/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace twc {

namespace {

using Row = std::vector<std::int64_t>;

void check_square(const std::vector<Row>& m) {
    for (const auto& r : m)
        if (r.size() != m.size())
            throw ValidationError("permanent requires a square matrix, got " +
                                  std::to_string(m.size()) + "x" + std::to_string(r.size()));
}

// Ryser over checked int64. Returns false on any overflow so the caller can
// restart in arbitrary precision.
bool ryser_i64(const std::vector<Row>& m, std::int64_t& out) {
    int n = static_cast<int>(m.size());
    std::vector<std::int64_t> sums(static_cast<size_t>(n), 0);
    std::int64_t total = 0;
    std::uint64_t gray = 0;
    std::uint64_t limit = (n == 64) ? 0 : (std::uint64_t{1} << n);
    for (std::uint64_t k = 1; k < limit; ++k) {
        std::uint64_t next = k ^ (k >> 1);
        std::uint64_t diff = gray ^ next;
        int col = std::countr_zero(diff);
        bool add = (next & diff) != 0;
        gray = next;
        for (int r = 0; r < n; ++r) {
            std::int64_t v = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (__builtin_add_overflow(sums[static_cast<size_t>(r)], add ? v : -v,
                                       &sums[static_cast<size_t>(r)]))
                return false;
        }
        std::int64_t prod = 1;
        for (int r = 0; r < n; ++r) {
            if (__builtin_mul_overflow(prod, sums[static_cast<size_t>(r)], &prod)) return false;
        }
        bool negate = ((n - std::popcount(gray)) & 1) != 0;
        if (__builtin_add_overflow(total, negate ? -prod : prod, &total)) return false;
    }
    out = total;
    return true;
}

BigInt ryser_big(const std::vector<Row>& m) {
    int n = static_cast<int>(m.size());
    std::vector<BigInt> sums(static_cast<size_t>(n), 0);
    BigInt total = 0;
    std::uint64_t gray = 0;
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < limit; ++k) {
        std::uint64_t next = k ^ (k >> 1);
        std::uint64_t diff = gray ^ next;
        int col = std::countr_zero(diff);
        bool add = (next & diff) != 0;
        gray = next;
        for (int r = 0; r < n; ++r) {
            std::int64_t v = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (add)
                sums[static_cast<size_t>(r)] += v;
            else
                sums[static_cast<size_t>(r)] -= v;
        }
        BigInt prod = 1;
        for (int r = 0; r < n && prod != 0; ++r) prod *= sums[static_cast<size_t>(r)];
        if (((n - std::popcount(gray)) & 1) != 0)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

}  // namespace

BigInt permanent(const std::vector<Row>& m, int size_cap) {
    check_square(m);
    int n = static_cast<int>(m.size());
    if (n > size_cap)
        throw ResourceError("permanent size " + std::to_string(n) + " exceeds cap " +
                            std::to_string(size_cap));
    if (n == 0) return 1;
    std::int64_t fast = 0;
    if (ryser_i64(m, fast)) return fast;
    return ryser_big(m);
}

BigInt permanent(const LabeledIntMatrix& m, int size_cap) {
    return permanent(m.entries(), size_cap);
}

BigInt permanent_naive(const std::vector<Row>& m) {
    check_square(m);
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    do {
        BigInt prod = 1;
        for (int r = 0; r < n && prod != 0; ++r)
            prod *= m[static_cast<size_t>(r)][static_cast<size_t>(perm[static_cast<size_t>(r)])];
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigInt permanent_naive(const LabeledIntMatrix& m) { return permanent_naive(m.entries()); }

int permanent_mod2(const std::vector<Row>& m) {
    check_square(m);
    int n = static_cast<int>(m.size());
    if (n > 64) throw ResourceError("permanent_mod2 supports at most 64 columns");
    // Row bitmasks; parity of per equals parity of det over GF(2).
    std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] & 1)
                rows[static_cast<size_t>(r)] |= std::uint64_t{1} << c;
    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (rows[static_cast<size_t>(r)] >> c & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int r = 0; r < n; ++r)
            if (r != rank && (rows[static_cast<size_t>(r)] >> c & 1))
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return 1;
}

int permanent_mod2(const LabeledIntMatrix& m) { return permanent_mod2(m.entries()); }

namespace {

// Enumerate spanning subgraphs of g whose components are single edges or
// cycles. Vertices are covered in increasing order; the lowest uncovered
// vertex is either matched to a neighbor or starts a cycle, and cycles are
// counted once by requiring the second vertex to be smaller than the last.
void sachs_walk(const Graph& g, std::uint32_t covered, BigInt& total) {
    int n = g.vertex_count();
    if (std::popcount(covered) == n) {
        total += 1;
        return;
    }
    int v = 0;
    for (int i = 1; i <= n; ++i)
        if (!(covered >> (i - 1) & 1)) {
            v = i;
            break;
        }
    for (int w : g.neighbors(v)) {
        if (covered >> (w - 1) & 1) continue;
        // single edge component
        sachs_walk(g, covered | (1u << (v - 1)) | (1u << (w - 1)), total);
    }
    // cycles through v: extend a path v, x1, x2, ... and close back to v
    auto extend = [&](auto&& self, int last, std::uint32_t mask, int first_step, int len) -> void {
        for (int w : g.neighbors(last)) {
            if (w == v) {
                if (len >= 3 && first_step < last) {
                    BigInt sub = 0;
                    sachs_walk(g, covered | mask, sub);
                    total += 2 * sub;
                }
                continue;
            }
            if (w < v || (mask >> (w - 1) & 1) || (covered >> (w - 1) & 1)) continue;
            self(self, w, mask | (1u << (w - 1)), first_step, len + 1);
        }
    };
    for (int w : g.neighbors(v)) {
        if (w < v || (covered >> (w - 1) & 1)) continue;
        extend(extend, w, (1u << (v - 1)) | (1u << (w - 1)), w, 2);
    }
}

}  // namespace

BigInt sachs_permanent(const Graph& g) {
    if (g.vertex_count() > 12)
        throw ResourceError("sachs_permanent supports at most 12 vertices");
    if (g.vertex_count() == 0) return 1;
    BigInt total = 0;
    sachs_walk(g, 0, total);
    return total;
}

}  // namespace twc
