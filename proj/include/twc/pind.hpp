#ifndef TWC_PIND_HPP
#define TWC_PIND_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twc/classify.hpp"
#include "twc/matrix.hpp"
#include "twc/permanent.hpp"

namespace twc {

// Outcome of an exhaustive permanent-index search.
struct PindResult {
    int bound_checked = 0;
    std::optional<int> achieved;     // empty: exceeds bound_checked
    std::vector<int> witness;        // multiplicity per column, canonical order
    BigInt witness_permanent = 0;
    long long evaluations = 0;

    nlohmann::ordered_json to_json(const std::vector<Label>& col_labels = {}) const;
};

// Data backing an orientation certificate: an acyclic orientation D of
// G - E[X] with every X vertex a sink, and a sub-digraph D' satisfying
// eta(v) + 2 d-_{D'}(v) - d-_D(v) >= d+_{D'}(v) at every vertex.
struct Lemma31Data {
    std::vector<int> X;
    std::vector<Edge> d_edges;                // oriented (tail, head), all of G - E[X]
    std::vector<int> dprime;                  // indices into d_edges
    std::vector<int> eta_vertex;              // size n+1, index 0 unused
    std::optional<PindResult> eta_prime_check;  // non-singularity witness on G[X]

    nlohmann::ordered_json to_json() const;
};

// Structured verdict emitted by every checker. Inconclusive is a first-class
// outcome: an upper-bound method that does not apply proves nothing.
struct Certificate {
    enum class Method { Exhaustive, Lemma31, Reduction, Parity, PermanentNonzero };
    enum class Status { Certified, Inconclusive, Rejected };

    std::string claim;
    Method method = Method::Exhaustive;
    Status status = Status::Inconclusive;
    std::string reason;              // set when not certified
    std::vector<std::string> trace;
    std::optional<PindResult> witness;
    std::optional<Lemma31Data> lemma31;
    std::optional<Graph> base;       // graph the witness applies to, when reduced
    std::optional<BigInt> permanent_value;

    bool certified() const { return status == Status::Certified; }
    nlohmann::ordered_json to_json() const;
};

std::string to_string(Certificate::Method m);
std::string to_string(Certificate::Status s);

// Smallest k <= k_max such that some column selection of m (each column used
// at most k times, total = row count) has nonzero permanent. Multiplicity
// vectors are tried in decreasing lexicographic order over the canonical
// column order; the first witness found is returned. All-zero columns are
// skipped.
PindResult pind_exhaustive(const LabeledIntMatrix& m, int k_max,
                           long long eval_cap = 2'000'000);

// The explicit orientation used to certify a bare core (cycle, two cycles
// sharing a vertex, two cycles joined by a path, or a theta).
struct ProofOrientation {
    std::vector<int> X;
    std::vector<int> heads;   // per edge of the core
    std::vector<int> dprime;  // edge indices forming D'
    std::string note;
};

ProofOrientation proof_orientation(const Graph& core);

// Checks the orientation certificate (D, D', eta, X) for G. d must orient
// exactly the edges of G - E[X], in G's edge order. dprime_edges index into
// d's edge list. eta must assign 1 to every edge. On success the certificate
// states that eta is non-singular for G; with eta identically 1 this gives
// pind(A_G) = 1. If eta_prime_check is supplied it is validated as the
// non-singularity witness for G[X], otherwise one is searched for.
Certificate verify_lemma31(const Graph& g, const std::vector<int>& X, const OrientedGraph& d,
                           const std::vector<int>& dprime_edges, const IndexFunction& eta,
                           const std::optional<PindResult>& eta_prime_check = std::nullopt);

// Certifies pind(A_G) = 1 for connected G with m <= n+1: strips hanging
// trees (a pendant vertex never raises pind(A)), then certifies the 2-core
// by an explicit orientation. Empty cores (trees) are certified by direct
// search on a single vertex.
Certificate certify_pindA(const Graph& g);

// Tries to certify pind(B_G) <= 2 by peeling reductions (hanging edge,
// pendant pair, twin pair, thread of length 4) down to a base small enough
// for exhaustive search. Inconclusive when no rule applies and the graph is
// too large, or when the reduced base fails: the reductions only transport
// upper bounds upward. Rejected only when the exhaustive search ran on G
// itself, which is a complete refutation.
Certificate reduce_for_pindB(const Graph& g, long long eval_cap = 2'000'000);

// Independent re-check of a certificate against the graph it talks about.
// Returns true when the stored evidence still proves the claim.
bool reverify_certificate(const Graph& g, const Certificate& c);

}  // namespace twc

#endif
