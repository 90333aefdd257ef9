#include "degmom/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace degmom {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, std::uint64_t line_no, const std::string& what) {
    throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + what);
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& origin, ParseReport* report) {
    std::vector<Edge> edges;
    std::uint64_t n_header = 0;
    bool have_header = false;
    std::uint64_t max_id = 0;
    bool any_vertex = false;

    ParseReport rep;
    std::string line;
    while (std::getline(in, line)) {
        ++rep.lines;
        std::string_view sv(line);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r')) sv.remove_prefix(1);
        while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r')) sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;

        std::istringstream fields{std::string(sv)};
        std::string a, b, extra;
        fields >> a >> b;
        if (fields >> extra) parse_fail(origin, rep.lines, "expected two fields, got more: '" + line + "'");

        if (a == "n") {
            std::uint64_t count;
            if (b.empty() || !parse_u64(b, count)) parse_fail(origin, rep.lines, "bad vertex count in header");
            n_header = count;
            have_header = true;
            continue;
        }
        std::uint64_t u, v;
        if (b.empty() || !parse_u64(a, u) || !parse_u64(b, v)) {
            parse_fail(origin, rep.lines, "malformed edge line: '" + line + "'");
        }
        if (u > 0xFFFFFFFFull || v > 0xFFFFFFFFull) parse_fail(origin, rep.lines, "vertex id exceeds 32 bits");
        ++rep.edge_lines;
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        max_id = std::max({max_id, u, v});
        any_vertex = true;
    }

    std::uint64_t n = any_vertex ? max_id + 1 : 0;
    if (have_header) {
        if (n_header < n) {
            throw std::runtime_error(origin + ": header n=" + std::to_string(n_header) +
                                     " smaller than max vertex id " + std::to_string(max_id));
        }
        n = n_header;
    }

    Graph g;
    try {
        g = build_graph(edges, n);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
    rep.duplicates_dropped = rep.edge_lines - g.edge_count();
    rep.isolated = g.isolated_count();
    if (report) *report = rep;
    return g;
}

Graph load_edge_list(const std::string& path, ParseReport* report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return read_edge_list(in, path, report);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << "\n";
    const std::uint64_t n = g.vertex_count();
    for (std::uint64_t v = 0; v < n; ++v) {
        for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
            if (v < u) out << v << " " << u << "\n";
        }
    }
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace degmom
