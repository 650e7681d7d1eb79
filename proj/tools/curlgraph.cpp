#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "curlgraph/degseq.hpp"
#include "curlgraph/generators.hpp"
#include "curlgraph/io.hpp"
#include "curlgraph/jaco_table.hpp"
#include "curlgraph/report.hpp"
#include "curlgraph/seqcore.hpp"
#include "curlgraph/summand.hpp"

namespace {

using namespace curling;

std::int64_t max_vertices() {
    if (const char* env = std::getenv("CURLGRAPH_MAX_N")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("CURLGRAPH_MAX_N is not an integer");
        }
    }
    return 1000000;
}

void check_size(std::int64_t vertices) {
    if (vertices > max_vertices())
        throw std::invalid_argument("generator size exceeds CURLGRAPH_MAX_N");
}

struct Generated {
    std::variant<SimpleGraph, DiGraph> graph;
};

Generated generate(const std::string& family,
                   const std::vector<std::int64_t>& p) {
    auto arity = [&](std::size_t want) {
        if (p.size() != want)
            throw std::invalid_argument(family + " expects " +
                                        std::to_string(want) + " parameter(s)");
    };
    if (family == "path") { arity(1); check_size(p[0]); return {path(p[0])}; }
    if (family == "cycle") { arity(1); check_size(p[0]); return {cycle(p[0])}; }
    if (family == "complete") { arity(1); check_size(p[0]); return {complete(p[0])}; }
    if (family == "complete_bipartite") {
        arity(2);
        check_size(p[0] + p[1]);
        return {complete_bipartite(p[0], p[1])};
    }
    if (family == "wheel") { arity(1); check_size(p[0]); return {wheel(p[0])}; }
    if (family == "ladder") { arity(1); check_size(2 * p[0]); return {ladder(p[0])}; }
    if (family == "jaco") { arity(1); check_size(p[0]); return {jaco(p[0])}; }
    if (family == "setgraph") {
        arity(1);
        if (p[0] >= 1 && p[0] <= 20) check_size((std::int64_t{1} << p[0]) - 1);
        return {set_graph(p[0])};
    }
    if (family == "rasta") {
        const SummandSet s = make_summand_set(p);
        check_size(s.target);
        return {rasta(s)};
    }
    throw std::invalid_argument("unknown family: " + family);
}

IntString degrees_of(const Generated& g) {
    if (std::holds_alternative<SimpleGraph>(g.graph))
        return std::get<SimpleGraph>(g.graph).degree_sequence();
    return std::get<DiGraph>(g.graph).underlying().degree_sequence();
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

nlohmann::ordered_json graph_to_json(const Generated& g) {
    nlohmann::ordered_json j;
    if (std::holds_alternative<SimpleGraph>(g.graph)) {
        const SimpleGraph& s = std::get<SimpleGraph>(g.graph);
        j["directed"] = false;
        j["n"] = s.vertex_count();
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& [u, v] : s.edges()) edges.push_back({u, v});
        j["edges"] = edges;
    } else {
        const DiGraph& d = std::get<DiGraph>(g.graph);
        j["directed"] = true;
        j["n"] = d.vertex_count();
        nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
        for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
        j["arcs"] = arcs;
    }
    return j;
}

int cmd_gen(const std::string& family, const std::vector<std::int64_t>& params,
            const std::string& format, const std::string& out_path) {
    const Generated g = generate(family, params);
    std::string content;
    if (format == "json") {
        content = graph_to_json(g).dump(2) + "\n";
    } else {
        std::ostringstream ss;
        if (std::holds_alternative<SimpleGraph>(g.graph))
            write_edge_list(std::get<SimpleGraph>(g.graph), ss);
        else
            write_edge_list(std::get<DiGraph>(g.graph), ss);
        content = ss.str();
    }
    emit(content, out_path);
    return 0;
}

IntString load_input_degrees(const std::string& file, const std::string& seq,
                             std::vector<std::string>& warnings) {
    if (!seq.empty()) {
        warnings.push_back("degree sequence taken as given; realizability not checked");
        return parse_degree_line(seq);
    }
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    // Peek the first meaningful line to decide between the two formats.
    std::string first;
    std::streampos pos = in.tellg();
    while (std::getline(in, first)) {
        const std::size_t c = first.find_first_not_of(" \t\r");
        if (c != std::string::npos && first[c] != '#') break;
        pos = in.tellg();
    }
    in.clear();
    in.seekg(0);
    if (first.rfind("n ", 0) == 0 || first == "n") {
        const auto parsed = parse_edge_list(in);
        if (std::holds_alternative<SimpleGraph>(parsed)) {
            warnings.push_back("connectivity not checked");
            return std::get<SimpleGraph>(parsed).degree_sequence();
        }
        warnings.push_back("connectivity not checked");
        return std::get<DiGraph>(parsed).underlying().degree_sequence();
    }
    const auto seqs = parse_degree_sequences(in);
    if (seqs.size() != 1)
        throw std::runtime_error("expected exactly one degree-sequence line");
    warnings.push_back("degree sequence taken as given; realizability not checked");
    return seqs.front();
}

int cmd_invariants(const std::string& file, const std::string& seq,
                   const std::string& format, const std::string& out_path) {
    std::vector<std::string> warnings;
    const IntString degrees =
        load_input_degrees(file, seq, warnings);
    Report r = make_report(seq.empty() ? file : seq, degrees);
    r.warnings = warnings;
    std::string content;
    if (format == "csv")
        content = report_csv_header() + "\n" + report_to_csv_row(r) + "\n";
    else
        content = report_to_json(r).dump(2) + "\n";
    emit(content, out_path);
    return 0;
}

IntString arrange(IntString s, const std::string& arrangement) {
    if (arrangement == "ascending")
        std::sort(s.begin(), s.end());
    else if (arrangement == "descending" || arrangement == "identity-string")
        std::sort(s.begin(), s.end(), std::greater<>());
    return s; // asis
}

int cmd_conjecture(const std::string& file, const std::string& seq,
                   const std::string& family,
                   const std::vector<std::int64_t>& params,
                   const std::string& arrangement, std::size_t max_steps,
                   bool stream, const std::string& out_path) {
    IntString degrees;
    std::vector<std::string> warnings;
    if (!family.empty())
        degrees = degrees_of(generate(family, params));
    else
        degrees = load_input_degrees(file, seq, warnings);
    degrees = arrange(std::move(degrees), arrangement);

    const CurlingTrace trace = verify_conjecture(degrees, max_steps, !stream);
    std::ostringstream ss;
    ss << "appended:";
    for (std::int64_t v : trace.appended) ss << " " << v;
    ss << "\nsteps: " << trace.steps
       << "\nreached_one: " << (trace.reached_one ? "true" : "false") << "\n";
    emit(ss.str(), out_path);
    return trace.reached_one ? 0 : 2;
}

int cmd_jaco_table(std::int64_t n_max, bool check,
                   const std::string& out_path) {
    if (n_max < 1 || n_max > 10000)
        throw std::invalid_argument("jaco-table requires 1 <= N <= 10000");
    const std::vector<IntString> rows = jaco_degree_table(n_max);
    std::ostringstream ss;
    bool ok = true;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const IntString& deg = rows[static_cast<std::size_t>(n - 1)];
        const IdentityString d = group_degrees(deg);
        const std::int64_t ic = ic_graph(d);
        const std::int64_t theta = curling_index(d);
        const std::int64_t cn = cn_graph(d);
        ss << n << " (";
        for (std::size_t i = 0; i < deg.size(); ++i)
            ss << (i ? "," : "") << deg[i];
        ss << ") " << ic << " " << theta << " " << cn << "\n";
        if (check && n <= 25) {
            const JacoRow& golden =
                jaco_golden_table()[static_cast<std::size_t>(n - 1)];
            if (deg != golden.degrees || ic != golden.ic ||
                theta != golden.curling_index || cn != golden.cn) {
                std::cerr << "golden table mismatch at n=" << n << "\n";
                ok = false;
            }
        }
    }
    emit(ss.str(), out_path);
    return ok ? 0 : 3;
}

int cmd_summand(std::int64_t n, const std::string& out_path) {
    if (n < 5) throw std::invalid_argument("summand requires n >= 5");
    nlohmann::ordered_json j;
    j["n"] = n;
    nlohmann::ordered_json chain = nlohmann::ordered_json::array();
    nlohmann::ordered_json comparison = nlohmann::ordered_json::array();
    for (const SummandSet& s : greedy_summand_chain(n)) {
        chain.push_back(s.parts);
        const std::int64_t l = static_cast<std::int64_t>(s.parts.size());
        std::int64_t greedy_product = 1;
        for (std::int64_t t : s.parts) greedy_product *= t;
        nlohmann::ordered_json cmp;
        cmp["l"] = l;
        cmp["chain_set"] = s.parts;
        cmp["chain_product"] = greedy_product;
        if (const auto best = max_product_summand(n, l)) {
            std::int64_t best_product = 1;
            for (std::int64_t t : best->parts) best_product *= t;
            cmp["max_product_set"] = best->parts;
            cmp["max_product"] = best_product;
        }
        comparison.push_back(cmp);
    }
    j["chain"] = chain;
    nlohmann::ordered_json series = nlohmann::ordered_json::array();
    for (const auto& [l, value] : rasta_compound_series(n))
        series.push_back({l, value});
    j["series"] = series;
    j["l_star"] = l_star(n);
    j["max_product_by_l"] = comparison;
    emit(j.dump(2) + "\n", out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curling numbers of integer sequences and graph degree sequences"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    std::size_t max_steps = 1000;
    std::string seed; // reserved
    auto* format_opt = app.add_option("--format", format, "json|csv|text|edgelist");
    format_opt->capture_default_str();
    app.add_option("--out", out_path, "write output to PATH (atomic)");
    app.add_option("--max-steps", max_steps, "extension budget")->capture_default_str();
    app.add_option("--seed", seed, "reserved");

    auto* gen = app.add_subcommand("gen", "generate a graph");
    std::string family;
    std::vector<std::int64_t> params;
    gen->add_option("family", family,
                    "path|cycle|complete|complete_bipartite|wheel|ladder|jaco|setgraph|rasta")
        ->required();
    gen->add_option("params", params, "family parameters")->required();

    auto* inv = app.add_subcommand("invariants", "compute the invariant report");
    std::string in_file, in_seq;
    inv->add_option("--file", in_file, "edge-list or degree-sequence file");
    inv->add_option("--seq", in_seq, "inline degree sequence, e.g. \"3 5 3\"");

    auto* conj = app.add_subcommand("conjecture", "run the append-and-extend check");
    std::string c_file, c_seq, c_family;
    std::vector<std::int64_t> c_params;
    std::string arrangement = "descending";
    bool stream = false;
    conj->add_option("--file", c_file, "edge-list or degree-sequence file");
    conj->add_option("--seq", c_seq, "inline sequence");
    conj->add_option("--family", c_family, "generate the input graph");
    conj->add_option("--params", c_params, "family parameters");
    conj->add_option("--arrangement", arrangement,
                     "asis|descending|ascending|identity-string")
        ->capture_default_str();
    conj->add_flag("--stream", stream, "continue past the first appended 1");

    auto* jt = app.add_subcommand("jaco-table", "print Jaco graph invariants");
    std::int64_t n_max = 25;
    bool check = false;
    jt->add_option("n_max", n_max, "largest n")->required();
    jt->add_flag("--check", check, "compare n <= 25 against the reference table");

    auto* sm = app.add_subcommand("summand", "summand chain and Rasta series");
    std::int64_t summand_n = 0;
    sm->add_option("n", summand_n, "target integer (>= 5)")->required();

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            // Edge-list output is the natural default for a graph file.
            const std::string gen_format =
                format_opt->count() > 0 ? format : std::string("edgelist");
            return cmd_gen(family, params, gen_format, out_path);
        }
        if (inv->parsed()) {
            if (in_file.empty() == in_seq.empty())
                throw std::invalid_argument("provide exactly one of --file / --seq");
            return cmd_invariants(in_file, in_seq, format, out_path);
        }
        if (conj->parsed()) {
            if (c_family.empty() && c_file.empty() == c_seq.empty())
                throw std::invalid_argument(
                    "provide exactly one of --file / --seq / --family");
            return cmd_conjecture(c_file, c_seq, c_family, c_params, arrangement,
                                  max_steps, stream, out_path);
        }
        if (jt->parsed()) return cmd_jaco_table(n_max, check, out_path);
        if (sm->parsed()) return cmd_summand(summand_n, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
