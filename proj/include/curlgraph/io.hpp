#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "curlgraph/graph.hpp"
#include "curlgraph/seqcore.hpp"

namespace curling {

/// Parse failure carrying the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Degree-sequence text: one sequence per line, base-10 entries separated by
// spaces; blank lines and '#' lines are skipped.
std::vector<IntString> parse_degree_sequences(std::istream& in);
IntString parse_degree_line(const std::string& line); // single sequence

// Edge-list format: "n <vertex_count>" first, then "u v" per edge or
// "arc u v" per arc; '#' comments allowed. A file is directed iff it
// contains any arc line.
std::variant<SimpleGraph, DiGraph> parse_edge_list(std::istream& in);

void write_edge_list(const SimpleGraph& g, std::ostream& out);
void write_edge_list(const DiGraph& g, std::ostream& out);

// Write-to-temp, atomic rename. Nothing is left behind on failure.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

} // namespace curling
