#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curlgraph/degseq.hpp"
#include "curlgraph/seqcore.hpp"

namespace curling {

/// Invariant report for one input (graph family, file, or inline sequence).
struct Report {
    std::string input;  // descriptor, e.g. "jaco 5" or a file path
    std::int64_t n = 0; // entry count of the degree sequence
    IdentityString degree_string;
    std::int64_t cn = 0;
    std::int64_t ic = 0;
    std::int64_t curling_index = 0;
    std::uint64_t compound_cn = 0;
    std::optional<CurlingTrace> conjecture;
    std::vector<std::string> warnings;
};

Report make_report(std::string input, const IntString& degrees);

// Stable key order, stable run order.
nlohmann::ordered_json report_to_json(const Report& r);

std::string report_csv_header();
std::string report_to_csv_row(const Report& r);

// "(v1)^m1 (v2)^m2 ..." rendering of an identity string.
std::string degree_string_text(const IdentityString& d);

} // namespace curling
