#include "curlgraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace curling {

namespace {

bool skippable(const std::string& line) {
    const std::size_t first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

} // namespace

IntString parse_degree_line(const std::string& line) {
    std::istringstream ss(line);
    IntString seq;
    std::int64_t v = 0;
    while (ss >> v) {
        if (v < 0) throw std::invalid_argument("negative degree");
        seq.push_back(v);
    }
    if (!ss.eof()) throw std::invalid_argument("malformed integer");
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    return seq;
}

std::vector<IntString> parse_degree_sequences(std::istream& in) {
    std::vector<IntString> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        try {
            out.push_back(parse_degree_line(line));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return out;
}

std::variant<SimpleGraph, DiGraph> parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::int64_t n = -1;
    std::vector<VertexPair> edges;
    std::vector<VertexPair> arcs;

    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream ss(line);
        std::string head;
        ss >> head;
        if (head == "n") {
            if (n >= 0) throw ParseError(lineno, "duplicate vertex-count line");
            if (!(ss >> n) || n < 0)
                throw ParseError(lineno, "bad vertex count");
        } else if (head == "arc") {
            std::int64_t u = 0, v = 0;
            if (!(ss >> u >> v)) throw ParseError(lineno, "bad arc line");
            arcs.push_back({u, v});
        } else {
            std::int64_t u = 0, v = 0;
            ss.clear();
            ss.str(line);
            if (!(ss >> u >> v)) throw ParseError(lineno, "bad edge line");
            edges.push_back({u, v});
        }
        std::string trailing;
        if (ss >> trailing) throw ParseError(lineno, "trailing tokens");
    }
    if (n < 0) throw ParseError(lineno, "missing \"n <vertex_count>\" line");
    if (!arcs.empty() && !edges.empty())
        throw ParseError(lineno, "mixed edge and arc lines");

    if (!arcs.empty()) {
        DiGraph g(n);
        for (const auto& [u, v] : arcs) g.add_arc(u, v);
        return g;
    }
    SimpleGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void write_edge_list(const SimpleGraph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list(const DiGraph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.arcs()) out << "arc " << u << " " << v << "\n";
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace curling
