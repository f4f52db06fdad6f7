#ifndef TWC_MATRIX_HPP
#define TWC_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "twc/graph.hpp"

namespace twc {

// Column/row label: a vertex, an edge, or a difference of two edge columns
// (used by the clique extension).
struct Label {
    enum class Kind { Vertex, Edge, EdgeDiff };
    Kind kind = Kind::Vertex;
    int id = 0;   // vertex id or edge index
    int id2 = 0;  // subtrahend edge index for EdgeDiff

    static Label vertex(int v) { return {Kind::Vertex, v, 0}; }
    static Label edge(int e) { return {Kind::Edge, e, 0}; }
    static Label edge_diff(int e, int f) { return {Kind::EdgeDiff, e, f}; }
    std::string to_string() const;
    friend bool operator==(const Label&, const Label&) = default;
};

// Dense exact-integer matrix with labeled rows (edges) and columns
// (vertices or edges).
class LabeledIntMatrix {
public:
    LabeledIntMatrix() = default;
    LabeledIntMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels,
                     std::vector<std::vector<std::int64_t>> entries);

    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return static_cast<int>(col_labels_.size()); }
    std::int64_t at(int r, int c) const {
        return entries_.at(static_cast<size_t>(r)).at(static_cast<size_t>(c));
    }
    const std::vector<std::vector<std::int64_t>>& entries() const { return entries_; }
    const std::vector<Label>& row_labels() const { return row_labels_; }
    const std::vector<Label>& col_labels() const { return col_labels_; }
    std::vector<std::int64_t> column(int c) const;

    // Matrix built from a column-multiplicity vector (entry per column).
    LabeledIntMatrix select_columns(const std::vector<int>& multiplicity) const;

    std::string dump() const;  // text form with label header
    static LabeledIntMatrix parse(std::istream& in, const std::string& source_name = "<input>");

private:
    std::vector<Label> row_labels_, col_labels_;
    std::vector<std::vector<std::int64_t>> entries_;
};

// A_G: rows are edges, columns are all vertices then all edges. Row for
// e = (u -> v) holds +1 at column v and at every other edge incident to v,
// -1 at column u and at every other edge incident to u.
LabeledIntMatrix build_A(const OrientedGraph& d);

// B_G: the edge-columns submatrix of A_G.
LabeledIntMatrix build_B(const OrientedGraph& d);

// Multiplicity per vertex and edge; valid when the total equals |E|.
struct IndexFunction {
    std::vector<int> vertex_mult;  // size n+1, index 0 unused
    std::vector<int> edge_mult;    // size m

    static IndexFunction zero(const Graph& g);
    static IndexFunction all_ones(const Graph& g);
    long long total() const;
    bool valid(const Graph& g) const { return total() == g.edge_count(); }
};

// A_(eta): eta(z) copies of column A(z), in canonical column-label order.
// Requires a valid eta so the result is square.
LabeledIntMatrix assemble(const LabeledIntMatrix& a, const IndexFunction& eta, const Graph& g);

// For G' = G with a K3 glued at attach_vertex (new vertices n+1, n+2; new
// edges e21 = (n+1, attach), e32 = (n+2, n+1), e31 = (n+2, attach), each
// oriented from the larger clique vertex): extends a column selection Bp of
// A_G with rows e32, e31, e21 and columns A_{v2}, A_{v3}, A_{e31} - A_{e21}.
// The lower-right 3x3 block is [[1,-1,-2],[0,-1,-1],[-1,0,1]].
LabeledIntMatrix clique_block_extend(const LabeledIntMatrix& bp, const Graph& g,
                                     int attach_vertex);

// G with a K3 glued at attach (vertices n+1, n+2), matching
// clique_block_extend's edge order e21, e32, e31.
Graph glue_triangle(const Graph& g, int attach_vertex);

// Test assets from the worked 6x6 example: the base matrix and the
// column-selected matrix with permanent -8.
LabeledIntMatrix remark_fixture_matrix();
LabeledIntMatrix remark_fixture_selection();

}  // namespace twc

#endif
