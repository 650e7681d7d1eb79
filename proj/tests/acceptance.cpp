// Acceptance suite: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. argv[1] must be the path to the curlgraph CLI binary.

#include <algorithm>
#include <array>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curlgraph/degseq.hpp"
#include "curlgraph/generators.hpp"
#include "curlgraph/jaco_table.hpp"
#include "curlgraph/seqcore.hpp"
#include "curlgraph/summand.hpp"

using namespace curling;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << "criterion " << id << " (" << name << "): "
              << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

// ---------------------------------------------------------------------------

void criterion1_jaco_golden_table() {
    std::string detail;
    bool ok = true;
    for (const JacoRow& row : jaco_golden_table()) {
        const IntString deg = jaco(row.n).underlying().degree_sequence();
        const IdentityString d = group_degrees(deg);
        if (deg != row.degrees || ic_graph(d) != row.ic ||
            curling_index(d) != row.curling_index || cn_graph(d) != row.cn) {
            ok = false;
            detail = "mismatch at n=" + std::to_string(row.n);
            break;
        }
    }
    report(1, "Jaco golden table n=1..25", ok, detail);
}

void criterion2_illustration() {
    const IdentityString d = group_degrees({3, 5, 3, 3, 5, 5, 6});
    const bool ok =
        cn_graph(d) == 3 && ic_graph(d) == 2 && curling_index(d) == 4;
    report(2, "Illustration 2.1 sequence", ok);
}

void criterion3_standard_graphs() {
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& d) {
        if (ok) detail = d;
        ok = false;
    };

    for (std::int64_t n = 1; n <= 50; ++n) {
        const IdentityString d = group_degrees(complete(n).degree_sequence());
        if (cn_graph(d) != n || compound_cn(d) != static_cast<std::uint64_t>(n))
            fail("K_" + std::to_string(n));
    }
    for (std::int64_t m = 1; m <= 20; ++m)
        for (std::int64_t n = 1; n <= 20; ++n) {
            if (m == n) continue;
            const IdentityString d =
                group_degrees(complete_bipartite(m, n).degree_sequence());
            if (cn_graph(d) != std::max(m, n) ||
                compound_cn(d) != static_cast<std::uint64_t>(m * n))
                fail("K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
        }
    for (std::int64_t n = 1; n <= 20; ++n) {
        const IdentityString d =
            group_degrees(complete_bipartite(n, n).degree_sequence());
        if (cn_graph(d) != 2 * n)
            fail("K_{" + std::to_string(n) + "," + std::to_string(n) + "}");
    }
    for (std::int64_t n = 2; n <= 50; ++n) {
        const IdentityString d = group_degrees(path(n).degree_sequence());
        const std::int64_t want_cn = (n <= 3) ? 2 : n - 2;
        if (cn_graph(d) != want_cn) fail("P_" + std::to_string(n) + " cn");
        if (n >= 4 && compound_cn(d) != static_cast<std::uint64_t>(2 * (n - 2)))
            fail("P_" + std::to_string(n) + " cn^c");
    }
    for (std::int64_t n = 3; n <= 50; ++n) {
        const IdentityString d = group_degrees(cycle(n).degree_sequence());
        if (cn_graph(d) != n || compound_cn(d) != static_cast<std::uint64_t>(n))
            fail("C_" + std::to_string(n));
    }
    // Wheel formula n-1: the hub degree merges with the rim at n = 4 (W_4 is
    // K_4), so the sweep starts where the two runs are distinct.
    for (std::int64_t n = 5; n <= 50; ++n) {
        const IdentityString d = group_degrees(wheel(n).degree_sequence());
        if (cn_graph(d) != n - 1 ||
            compound_cn(d) != static_cast<std::uint64_t>(n - 1))
            fail("W_" + std::to_string(n));
    }
    for (std::int64_t n = 3; n <= 50; ++n) {
        const IdentityString d = group_degrees(ladder(n).degree_sequence());
        if (cn_graph(d) != 2 * (n - 2))
            fail("L_" + std::to_string(n) + " cn: constructed " +
                 std::to_string(cn_graph(d)) + ", formula " +
                 std::to_string(2 * (n - 2)));
        if (compound_cn(d) != static_cast<std::uint64_t>(8 * (n - 2)))
            fail("L_" + std::to_string(n) + " cn^c");
    }
    report(3, "standard-graph closed forms", ok, detail);
}

void criterion4_set_graphs() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n = 1; n <= 6 && ok; ++n) {
        const SimpleGraph g = set_graph(n);
        const IntString deg = g.degree_sequence();
        const IdentityString d = group_degrees(deg);

        std::uint64_t binom = 1, max_binom = 1, product = 1;
        for (std::int64_t i = 1; i <= n; ++i) {
            binom = binom * static_cast<std::uint64_t>(n - i + 1) /
                    static_cast<std::uint64_t>(i);
            max_binom = std::max(max_binom, binom);
            product *= binom;
        }
        if (cn_graph(d) != static_cast<std::int64_t>(max_binom)) {
            ok = false;
            detail = "cn at n=" + std::to_string(n);
        }
        if (compound_cn(d) != product) {
            ok = false;
            detail = "cn^c at n=" + std::to_string(n);
        }
        if (g.vertex_count() % 2 != 1) {
            ok = false;
            detail = "even vertex count at n=" + std::to_string(n);
        }
        for (std::int64_t u = 0; u < g.vertex_count(); ++u)
            for (std::int64_t v = u + 1; v < g.vertex_count(); ++v)
                if (__builtin_popcountll(u + 1) == __builtin_popcountll(v + 1) &&
                    deg[static_cast<std::size_t>(u)] !=
                        deg[static_cast<std::size_t>(v)]) {
                    ok = false;
                    detail = "unequal degrees at n=" + std::to_string(n);
                }
        if (is_perfect_square(BigInt(product)) != (n % 2 == 1)) {
            ok = false;
            detail = "square test at n=" + std::to_string(n);
        }
    }
    report(4, "set-graphs n=1..6", ok, detail);
}

std::string run_cli(const std::string& cli, const std::string& args, int& code) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion5_summand_pipeline(const std::string& cli) {
    int code = -1;
    const std::string out = run_cli(cli, "summand 30", code);
    bool ok = code == 0;
    std::string detail = ok ? "" : "CLI exited " + std::to_string(code);
    if (ok) {
        const auto j = nlohmann::json::parse(out, nullptr, false);
        const nlohmann::json want_chain = {{16, 14},
                                           {14, 9, 7},
                                           {9, 8, 7, 6},
                                           {8, 7, 6, 5, 4},
                                           {8, 7, 6, 4, 3, 2}};
        const nlohmann::json want_series = {
            {2, 224}, {3, 189}, {4, 3024}, {5, 6720}, {6, 8064}};
        if (j.is_discarded() || j["chain"] != want_chain ||
            j["series"] != want_series) {
            ok = false;
            detail = "unexpected chain/series";
        }
    }
    report(5, "cmd_summand 30 chain and series", ok, detail);
}

void criterion6_series_minimum() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n = 12; n <= 40; ++n) {
        const auto series = rasta_compound_series(n);
        if (series.back().first < 4) continue;
        std::uint64_t at3 = 0, min_value = UINT64_MAX;
        for (const auto& [l, value] : series) {
            if (l == 3) at3 = value;
            min_value = std::min(min_value, value);
        }
        if (at3 == 0 || at3 != min_value) {
            ok = false;
            detail = "n=" + std::to_string(n);
            break;
        }
    }
    report(6, "l=3 series minimum for n=12..40", ok, detail);
}

// Independent scan used by criterion 7a.
std::int64_t naive_cn(const IntString& s) {
    const std::size_t n = s.size();
    std::size_t best = 1;
    for (std::size_t b = 1; b <= n; ++b) {
        std::size_t k = 1;
        while ((k + 1) * b <= n &&
               std::equal(s.end() - static_cast<std::ptrdiff_t>(b), s.end(),
                          s.end() - static_cast<std::ptrdiff_t>((k + 1) * b)))
            ++k;
        best = std::max(best, k);
    }
    return static_cast<std::int64_t>(best);
}

// Degree sequences of every graph generated by criteria 1..5.
std::vector<IntString> generated_degree_sequences() {
    std::vector<IntString> all;
    for (std::int64_t n = 1; n <= 25; ++n) all.push_back(jaco_degrees(n));
    for (std::int64_t n = 1; n <= 50; ++n)
        all.push_back(complete(n).degree_sequence());
    for (std::int64_t m = 1; m <= 20; ++m)
        for (std::int64_t n = m; n <= 20; ++n)
            all.push_back(complete_bipartite(m, n).degree_sequence());
    for (std::int64_t n = 2; n <= 50; ++n)
        all.push_back(path(n).degree_sequence());
    for (std::int64_t n = 3; n <= 50; ++n)
        all.push_back(cycle(n).degree_sequence());
    for (std::int64_t n = 4; n <= 50; ++n)
        all.push_back(wheel(n).degree_sequence());
    for (std::int64_t n = 2; n <= 50; ++n)
        all.push_back(ladder(n).degree_sequence());
    for (std::int64_t n = 1; n <= 6; ++n)
        all.push_back(set_graph(n).degree_sequence());
    for (const SummandSet& s : greedy_summand_chain(30))
        all.push_back(rasta(s).underlying().degree_sequence());
    return all;
}

void criterion7_oracles() {
    bool ok = true;
    std::string detail;

    // (a) every string of length <= 12 over {1,2,3}.
    for (std::size_t len = 1; len <= 12 && ok; ++len) {
        IntString s(len, 1);
        for (;;) {
            if (cn_string(s) != naive_cn(s)) {
                ok = false;
                detail = "cn_string oracle mismatch";
                break;
            }
            std::size_t i = len;
            while (i > 0 && s[i - 1] == 3) s[--i] = 1;
            if (i == 0) break;
            ++s[i - 1];
        }
    }

    // (b) every multiset of size <= 7 over {1..4}, against permutation
    // brute force.
    for (std::size_t len = 1; len <= 7 && ok; ++len) {
        IntString s(len, 1);
        for (;;) {
            IntString perm = s;
            std::int64_t best = 0;
            do {
                best = std::max(best, cn_string(perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (cn_rearranged(s) != best) {
                ok = false;
                detail = "cn_rearranged oracle mismatch";
                break;
            }
            std::size_t i = len;
            while (i > 0 && s[i - 1] == 4) --i;
            if (i == 0) break;
            ++s[i - 1];
            for (std::size_t j = i; j < len; ++j) s[j] = s[i - 1];
        }
    }

    // (c) the conjecture holds for every generated degree sequence under
    // all three arrangements.
    if (ok) {
        for (const IntString& deg : generated_degree_sequences()) {
            IntString asis = deg;
            IntString asc = deg;
            std::sort(asc.begin(), asc.end());
            IntString desc = asc;
            std::reverse(desc.begin(), desc.end());
            for (const IntString& s : {asis, asc, desc})
                if (!verify_conjecture(s, 1000).reached_one) {
                    ok = false;
                    detail = "conjecture not reached within 1000 steps";
                }
            if (!ok) break;
        }
    }
    report(7, "oracle suites", ok, detail);
}

SimpleGraph circulant(std::int64_t n, const std::vector<std::int64_t>& offsets) {
    SimpleGraph g(n);
    for (std::int64_t v = 0; v < n; ++v)
        for (std::int64_t o : offsets) g.add_edge(v, (v + o) % n);
    return g;
}

void criterion8_edge_deletion() {
    bool ok = true;
    std::string detail;
    std::int64_t mismatches = 0;

    std::mt19937 rng(20260826);
    std::uniform_int_distribution<std::int64_t> size(5, 14);
    std::uniform_real_distribution<double> prob(0.25, 0.7);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    int accepted = 0;
    std::string first_mismatch;
    while (accepted < 200) {
        const std::int64_t n = size(rng);
        const double p = prob(rng);
        SimpleGraph g(n);
        for (std::int64_t u = 0; u < n; ++u)
            for (std::int64_t v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);

        // First adjacent equal-degree pair; the decremented degree always
        // merges into the run of value d-1 or forms a new one (absent case).
        const IntString deg = g.degree_sequence();
        VertexPair pick{-1, -1};
        for (const auto& [u, v] : g.edges())
            if (deg[static_cast<std::size_t>(u)] ==
                deg[static_cast<std::size_t>(v)]) {
                pick = {u, v};
                break;
            }
        if (pick.first < 0) continue;
        ++accepted;

        const IdentityString d = group_degrees(deg);
        const std::int64_t dj = deg[static_cast<std::size_t>(pick.first)];
        const DeletionSign predicted = edge_deletion_prediction(d, dj);
        const std::uint64_t before = compound_cn(d);
        const std::uint64_t after = compound_cn(group_degrees(
            delete_edge(g, pick.first, pick.second).degree_sequence()));
        const bool non_decreasing = after >= before;
        if ((predicted == DeletionSign::non_decreasing) != non_decreasing) {
            ++mismatches;
            if (first_mismatch.empty()) {
                std::ostringstream ss;
                ss << "e.g. degree string ";
                for (const Run& r : d.runs)
                    ss << "(" << r.value << ")^" << r.multiplicity;
                ss << ", d_j=" << dj << ", predicted "
                   << (predicted == DeletionSign::non_decreasing ? ">=" : "<")
                   << ", cn^c " << before << " -> " << after;
                first_mismatch = ss.str();
            }
        }
    }
    if (mismatches > 0) {
        ok = false;
        detail = std::to_string(mismatches) +
                 "/200 sign mismatches; " + first_mismatch;
    }

    // Circulant k-regular graphs: cn^c(G - uv) = 2(n - 2) >= n.
    for (std::int64_t n = 4; n <= 30; ++n) {
        const SimpleGraph c = circulant(n, {1}); // cycle, 2-regular
        const std::uint64_t after = compound_cn(
            group_degrees(delete_edge(c, 0, 1).degree_sequence()));
        if (after != static_cast<std::uint64_t>(2 * (n - 2)) ||
            after < static_cast<std::uint64_t>(n)) {
            ok = false;
            detail = "circulant {1} n=" + std::to_string(n);
        }
    }
    for (std::int64_t n = 5; n <= 30; ++n) {
        const SimpleGraph c = circulant(n, {1, 2}); // 4-regular
        const std::uint64_t after = compound_cn(
            group_degrees(delete_edge(c, 0, 1).degree_sequence()));
        if (after != static_cast<std::uint64_t>(2 * (n - 2)) ||
            after < static_cast<std::uint64_t>(n)) {
            ok = false;
            detail = "circulant {1,2} n=" + std::to_string(n);
        }
    }
    report(8, "edge-deletion prediction", ok, detail);
}

void criterion9_hyperfactorial() {
    bool ok = true;
    std::string detail;
    for (std::int64_t n = 1; n <= 12; ++n)
        if (!hyperfactorial_identity_holds(n)) {
            ok = false;
            detail = "n=" + std::to_string(n);
        }
    report(9, "hyperfactorial identity n=1..12", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-curlgraph-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    criterion1_jaco_golden_table();
    criterion2_illustration();
    criterion3_standard_graphs();
    criterion4_set_graphs();
    criterion5_summand_pipeline(cli);
    criterion6_series_minimum();
    criterion7_oracles();
    criterion8_edge_deletion();
    criterion9_hyperfactorial();

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
