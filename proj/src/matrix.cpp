#include "twc/matrix.hpp"

#include <istream>
#include <numeric>
#include <sstream>

namespace twc {

std::string Label::to_string() const {
    switch (kind) {
        case Kind::Vertex: return "v" + std::to_string(id);
        case Kind::Edge: return "e" + std::to_string(id + 1);
        case Kind::EdgeDiff:
            return "e" + std::to_string(id + 1) + "-e" + std::to_string(id2 + 1);
    }
    return "?";
}

LabeledIntMatrix::LabeledIntMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels,
                                   std::vector<std::vector<std::int64_t>> entries)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(entries)) {
    if (entries_.size() != row_labels_.size())
        throw ValidationError("row label count does not match matrix");
    for (const auto& row : entries_)
        if (row.size() != col_labels_.size())
            throw ValidationError("column label count does not match matrix");
}

std::vector<std::int64_t> LabeledIntMatrix::column(int c) const {
    std::vector<std::int64_t> out;
    out.reserve(entries_.size());
    for (const auto& row : entries_) out.push_back(row.at(static_cast<size_t>(c)));
    return out;
}

LabeledIntMatrix LabeledIntMatrix::select_columns(const std::vector<int>& multiplicity) const {
    if (static_cast<int>(multiplicity.size()) != cols())
        throw ValidationError("multiplicity vector size mismatch");
    std::vector<Label> labels;
    std::vector<std::vector<std::int64_t>> out(entries_.size());
    for (int c = 0; c < cols(); ++c) {
        for (int t = 0; t < multiplicity[static_cast<size_t>(c)]; ++t) {
            labels.push_back(col_labels_[static_cast<size_t>(c)]);
            for (size_t r = 0; r < entries_.size(); ++r)
                out[r].push_back(entries_[r][static_cast<size_t>(c)]);
        }
    }
    return LabeledIntMatrix(row_labels_, std::move(labels), std::move(out));
}

std::string LabeledIntMatrix::dump() const {
    std::ostringstream out;
    out << rows() << ' ' << cols() << '\n';
    out << "rows";
    for (const auto& l : row_labels_) out << ' ' << l.to_string();
    out << "\ncols";
    for (const auto& l : col_labels_) out << ' ' << l.to_string();
    out << '\n';
    for (const auto& row : entries_) {
        for (size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
        out << '\n';
    }
    return out.str();
}

namespace {

Label parse_label(const std::string& tok) {
    auto parse_one = [](const std::string& t) -> Label {
        if (t.size() >= 2 && t[0] == 'v') return Label::vertex(std::stoi(t.substr(1)));
        if (t.size() >= 2 && t[0] == 'e') return Label::edge(std::stoi(t.substr(1)) - 1);
        throw ValidationError("bad matrix label: " + t);
    };
    auto dash = tok.find('-');
    if (dash != std::string::npos) {
        Label a = parse_one(tok.substr(0, dash));
        Label b = parse_one(tok.substr(dash + 1));
        return Label::edge_diff(a.id, b.id);
    }
    return parse_one(tok);
}

}  // namespace

LabeledIntMatrix LabeledIntMatrix::parse(std::istream& in, const std::string& source_name) {
    int r = 0, c = 0;
    if (!(in >> r >> c) || r < 0 || c < 0)
        throw ValidationError(source_name + ": expected matrix header \"rows cols\"");
    std::string tag;
    std::vector<Label> row_labels, col_labels;
    in >> tag;
    if (tag != "rows") throw ValidationError(source_name + ": expected \"rows\" label line");
    for (int i = 0; i < r; ++i) {
        std::string tok;
        in >> tok;
        row_labels.push_back(parse_label(tok));
    }
    in >> tag;
    if (tag != "cols") throw ValidationError(source_name + ": expected \"cols\" label line");
    for (int i = 0; i < c; ++i) {
        std::string tok;
        in >> tok;
        col_labels.push_back(parse_label(tok));
    }
    std::vector<std::vector<std::int64_t>> entries(static_cast<size_t>(r),
                                                   std::vector<std::int64_t>(static_cast<size_t>(c)));
    for (auto& row : entries)
        for (auto& x : row)
            if (!(in >> x)) throw ValidationError(source_name + ": truncated matrix body");
    return LabeledIntMatrix(std::move(row_labels), std::move(col_labels), std::move(entries));
}

LabeledIntMatrix build_A(const OrientedGraph& d) {
    const Graph& g = d.graph();
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<Label> rows, cols;
    for (int e = 0; e < m; ++e) rows.push_back(Label::edge(e));
    for (int v = 1; v <= n; ++v) cols.push_back(Label::vertex(v));
    for (int e = 0; e < m; ++e) cols.push_back(Label::edge(e));
    std::vector<std::vector<std::int64_t>> a(static_cast<size_t>(m),
                                             std::vector<std::int64_t>(static_cast<size_t>(n + m), 0));
    for (int e = 0; e < m; ++e) {
        int v = d.head(e), u = d.tail(e);
        auto& row = a[static_cast<size_t>(e)];
        row[static_cast<size_t>(v - 1)] = 1;
        row[static_cast<size_t>(u - 1)] = -1;
        for (int f : g.incident_edges(v))
            if (f != e) row[static_cast<size_t>(n + f)] = 1;
        for (int f : g.incident_edges(u))
            if (f != e) row[static_cast<size_t>(n + f)] = -1;
    }
    return LabeledIntMatrix(std::move(rows), std::move(cols), std::move(a));
}

LabeledIntMatrix build_B(const OrientedGraph& d) {
    const Graph& g = d.graph();
    int n = g.vertex_count(), m = g.edge_count();
    LabeledIntMatrix a = build_A(d);
    std::vector<Label> rows = a.row_labels();
    std::vector<Label> cols(a.col_labels().begin() + n, a.col_labels().end());
    std::vector<std::vector<std::int64_t>> b;
    b.reserve(static_cast<size_t>(m));
    for (const auto& row : a.entries())
        b.emplace_back(row.begin() + n, row.end());
    return LabeledIntMatrix(std::move(rows), std::move(cols), std::move(b));
}

IndexFunction IndexFunction::zero(const Graph& g) {
    IndexFunction eta;
    eta.vertex_mult.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
    eta.edge_mult.assign(static_cast<size_t>(g.edge_count()), 0);
    return eta;
}

IndexFunction IndexFunction::all_ones(const Graph& g) {
    IndexFunction eta = zero(g);
    for (int v = 1; v <= g.vertex_count(); ++v) eta.vertex_mult[static_cast<size_t>(v)] = 1;
    for (auto& x : eta.edge_mult) x = 1;
    return eta;
}

long long IndexFunction::total() const {
    long long t = 0;
    for (size_t v = 1; v < vertex_mult.size(); ++v) t += vertex_mult[v];
    for (int x : edge_mult) t += x;
    return t;
}

LabeledIntMatrix assemble(const LabeledIntMatrix& a, const IndexFunction& eta, const Graph& g) {
    if (!eta.valid(g)) throw ValidationError("index function not valid");
    if (a.cols() != g.vertex_count() + g.edge_count())
        throw ValidationError("matrix shape does not match graph");
    std::vector<int> multiplicity;
    multiplicity.reserve(static_cast<size_t>(a.cols()));
    for (int v = 1; v <= g.vertex_count(); ++v)
        multiplicity.push_back(eta.vertex_mult[static_cast<size_t>(v)]);
    for (int e = 0; e < g.edge_count(); ++e)
        multiplicity.push_back(eta.edge_mult[static_cast<size_t>(e)]);
    return a.select_columns(multiplicity);
}

Graph glue_triangle(const Graph& g, int attach_vertex) {
    if (attach_vertex < 1 || attach_vertex > g.vertex_count())
        throw ValidationError("attach vertex out of range");
    int v2 = g.vertex_count() + 1, v3 = g.vertex_count() + 2;
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(v2, attach_vertex);  // e21
    edges.emplace_back(v3, v2);             // e32
    edges.emplace_back(v3, attach_vertex);  // e31
    return Graph(v3, edges);
}

LabeledIntMatrix clique_block_extend(const LabeledIntMatrix& bp, const Graph& g,
                                     int attach_vertex) {
    int m = g.edge_count();
    if (bp.rows() != m || bp.cols() != m)
        throw ValidationError("B' must be an m x m selection for G");
    Graph gp = glue_triangle(g, attach_vertex);
    int v1 = attach_vertex, v2 = g.vertex_count() + 1, v3 = g.vertex_count() + 2;
    int e21 = m, e32 = m + 1, e31 = m + 2;
    // Orientation of G' agreeing with any orientation of G on old edges; the
    // new rows and columns only depend on the new edges' heads (the smaller
    // clique vertex) and on incidence at the attach vertex.
    std::vector<int> heads;
    for (const auto& [u, v] : g.edges()) heads.push_back(v);
    heads.push_back(v1);  // e21: v2 -> v1
    heads.push_back(v2);  // e32: v3 -> v2
    heads.push_back(v1);  // e31: v3 -> v1
    LabeledIntMatrix ap = build_A(OrientedGraph(gp, heads));
    int np = gp.vertex_count();
    auto col_of = [&](const Label& l) -> std::vector<std::int64_t> {
        if (l.kind == Label::Kind::Vertex) return ap.column(l.id - 1);
        if (l.kind == Label::Kind::Edge) return ap.column(np + l.id);
        throw ValidationError("B' columns must be plain vertex or edge columns");
    };

    std::vector<Label> rows = bp.row_labels();
    rows.push_back(Label::edge(e32));
    rows.push_back(Label::edge(e31));
    rows.push_back(Label::edge(e21));
    std::vector<Label> cols = bp.col_labels();
    cols.push_back(Label::vertex(v2));
    cols.push_back(Label::vertex(v3));
    cols.push_back(Label::edge_diff(e31, e21));

    // Row order of the appended rows in A_{G'}.
    std::vector<int> new_rows{e32, e31, e21};
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(static_cast<size_t>(m + 3));
    for (int r = 0; r < m; ++r) {
        std::vector<std::int64_t> row = bp.entries()[static_cast<size_t>(r)];
        // Top-right block: new-vertex columns are zero on old rows, and the
        // e31 - e21 difference cancels at the attach vertex.
        row.push_back(0);
        row.push_back(0);
        row.push_back(ap.at(r, np + e31) - ap.at(r, np + e21));
        out.push_back(std::move(row));
    }
    for (int r : new_rows) {
        std::vector<std::int64_t> row;
        row.reserve(static_cast<size_t>(m + 3));
        for (const auto& l : bp.col_labels()) row.push_back(col_of(l)[static_cast<size_t>(r)]);
        row.push_back(ap.at(r, v2 - 1));
        row.push_back(ap.at(r, v3 - 1));
        row.push_back(ap.at(r, np + e31) - ap.at(r, np + e21));
        out.push_back(std::move(row));
    }
    return LabeledIntMatrix(std::move(rows), std::move(cols), std::move(out));
}

namespace {

LabeledIntMatrix fixture_6x6(const std::vector<int>& col_ids,
                             const std::vector<std::vector<std::int64_t>>& entries) {
    std::vector<Label> rows, cols;
    for (int e = 0; e < 6; ++e) rows.push_back(Label::edge(e));
    for (int e : col_ids) cols.push_back(Label::edge(e));
    return LabeledIntMatrix(rows, cols, entries);
}

}  // namespace

LabeledIntMatrix remark_fixture_matrix() {
    return fixture_6x6({0, 1, 2, 3, 4, 5},
                       {{0, 1, -1, 0, 0, 0},
                        {-1, 0, 1, 1, 1, 0},
                        {1, -1, 0, -1, -1, 0},
                        {0, -1, -1, 0, -1, 1},
                        {0, 1, 1, 1, 0, -1},
                        {0, 0, 0, -1, 1, 0}});
}

// Columns 1, 2 and 4 of the base fixture, each taken twice.
LabeledIntMatrix remark_fixture_selection() {
    return fixture_6x6({0, 0, 1, 1, 3, 3},
                       {{0, 0, 1, 1, 0, 0},
                        {-1, -1, 0, 0, 1, 1},
                        {1, 1, -1, -1, -1, -1},
                        {0, 0, -1, -1, 0, 0},
                        {0, 0, 1, 1, 1, 1},
                        {0, 0, 0, 0, -1, -1}});
}

}  // namespace twc
