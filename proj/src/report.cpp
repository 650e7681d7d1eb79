#include "curlgraph/report.hpp"

#include <sstream>

namespace curling {

Report make_report(std::string input, const IntString& degrees) {
    Report r;
    r.input = std::move(input);
    r.n = static_cast<std::int64_t>(degrees.size());
    r.degree_string = group_degrees(degrees);
    r.cn = cn_graph(r.degree_string);
    r.ic = ic_graph(r.degree_string);
    r.curling_index = curling_index(r.degree_string);
    r.compound_cn = compound_cn(r.degree_string);
    return r;
}

nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["input"] = r.input;
    j["n"] = r.n;
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const Run& run : r.degree_string.runs)
        runs.push_back({run.value, run.multiplicity});
    j["degree_string"] = runs;
    j["cn"] = r.cn;
    j["ic"] = r.ic;
    j["curling_index"] = r.curling_index;
    j["compound_cn"] = r.compound_cn;
    if (r.conjecture) {
        nlohmann::ordered_json c;
        c["appended"] = r.conjecture->appended;
        c["reached_one"] = r.conjecture->reached_one;
        c["steps"] = r.conjecture->steps;
        j["conjecture"] = c;
    }
    j["warnings"] = r.warnings;
    return j;
}

std::string degree_string_text(const IdentityString& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.runs.size(); ++i) {
        if (i > 0) out << " ";
        out << "(" << d.runs[i].value << ")^" << d.runs[i].multiplicity;
    }
    return out.str();
}

std::string report_csv_header() {
    return "input,n,degree_string,cn,ic,curling_index,compound_cn";
}

std::string report_to_csv_row(const Report& r) {
    std::ostringstream out;
    out << r.input << "," << r.n << "," << degree_string_text(r.degree_string)
        << "," << r.cn << "," << r.ic << "," << r.curling_index << ","
        << r.compound_cn;
    return out.str();
}

} // namespace curling
