#ifndef TWC_IO_HPP
#define TWC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "twc/graph.hpp"

namespace twc {

// Thrown on malformed input files; carries file/line context when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Edge-list text format: optional '#' comment lines; first data line "n m";
// then m lines "u v" (1-based, whitespace-separated).
Graph read_edge_list(std::istream& in, const std::string& source_name = "<input>");
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

// Orientation file: m lines "u v" meaning tail u, head v. Lines are matched
// to the graph's edges independent of edge-list order; an unmatched line is a
// parse error.
std::vector<int> read_orientation(const Graph& g, std::istream& in,
                                  const std::string& source_name = "<input>");
std::vector<int> read_orientation_file(const Graph& g, const std::string& path);

}  // namespace twc

#endif
