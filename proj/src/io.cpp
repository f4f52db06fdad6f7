#include "twc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace twc {

namespace {

bool data_line(const std::string& line, std::string& out) {
    auto pos = line.find('#');
    out = pos == std::string::npos ? line : line.substr(0, pos);
    for (char c : out)
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

[[noreturn]] void fail(const std::string& src, int lineno, const std::string& msg) {
    throw ParseError(src + ":" + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& source_name) {
    std::string line, data;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line, data)) continue;
        std::istringstream ls(data);
        if (n < 0) {
            if (!(ls >> n >> m) || n <= 0 || m < 0)
                fail(source_name, lineno, "expected header line \"n m\"");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) fail(source_name, lineno, "expected edge line \"u v\"");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(source_name + ": empty input, expected header line \"n m\"");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(source_name + ": header declares " + std::to_string(m) +
                         " edges but " + std::to_string(edges.size()) + " were given");
    return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_edge_list(in, path);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<int> read_orientation(const Graph& g, std::istream& in,
                                  const std::string& source_name) {
    std::vector<int> heads(static_cast<size_t>(g.edge_count()), 0);
    std::vector<char> assigned(static_cast<size_t>(g.edge_count()), 0);
    std::string line, data;
    int lineno = 0, count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line, data)) continue;
        std::istringstream ls(data);
        int u, v;
        if (!(ls >> u >> v)) fail(source_name, lineno, "expected orientation line \"u v\"");
        auto e = (u >= 1 && u <= g.vertex_count() && v >= 1 && v <= g.vertex_count())
                     ? g.find_edge(u, v)
                     : std::nullopt;
        if (!e)
            fail(source_name, lineno,
                 "no such edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (assigned[static_cast<size_t>(*e)])
            fail(source_name, lineno, "edge oriented twice");
        assigned[static_cast<size_t>(*e)] = 1;
        heads[static_cast<size_t>(*e)] = v;
        ++count;
    }
    if (count != g.edge_count())
        throw ParseError(source_name + ": orientation covers " + std::to_string(count) + " of " +
                         std::to_string(g.edge_count()) + " edges");
    return heads;
}

std::vector<int> read_orientation_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_orientation(g, in, path);
}

}  // namespace twc
