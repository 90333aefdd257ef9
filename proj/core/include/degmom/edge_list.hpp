#pragma once

#include "degmom/graph.hpp"

#include <iosfwd>
#include <string>

namespace degmom {

// Text edge lists: one "u v" pair per line, whitespace separated, '#' lines
// ignored. An optional "n <count>" header fixes the vertex count (for
// trailing isolated vertices); otherwise n = max id + 1.
struct ParseReport {
    std::uint64_t lines = 0;
    std::uint64_t edge_lines = 0;
    std::uint64_t duplicates_dropped = 0;
    std::uint64_t isolated = 0;
};

Graph load_edge_list(const std::string& path, ParseReport* report = nullptr);
Graph read_edge_list(std::istream& in, const std::string& origin, ParseReport* report = nullptr);

void save_edge_list(const Graph& g, const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace degmom
