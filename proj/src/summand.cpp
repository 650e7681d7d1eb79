#include "curlgraph/summand.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "curlgraph/degseq.hpp"
#include "curlgraph/generators.hpp"

namespace curling {

SummandSet make_summand_set(std::vector<std::int64_t> parts) {
    if (parts.empty()) throw std::invalid_argument("summand set is empty");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 1)
            throw std::invalid_argument("summand parts must be > 1");
        if (i > 0 && parts[i] >= parts[i - 1])
            throw std::invalid_argument("summand parts must be strictly decreasing");
    }
    SummandSet s;
    s.target = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    s.parts = std::move(parts);
    return s;
}

namespace {

void enumerate_rec(std::int64_t remaining, std::int64_t l_left,
                   std::int64_t max_part, std::vector<std::int64_t>& acc,
                   std::vector<SummandSet>& out) {
    if (l_left == 0) {
        if (remaining == 0) out.push_back(make_summand_set(acc));
        return;
    }
    // l_left distinct parts below t need at least 2 + 3 + ... + (l_left) more
    // once t is chosen; prune on that bound.
    for (std::int64_t t = std::min(max_part, remaining); t >= 2; --t) {
        const std::int64_t rest = remaining - t;
        const std::int64_t min_rest = (l_left - 1) * l_left / 2 + (l_left - 1);
        const std::int64_t max_rest = (l_left - 1) * (t - 1) -
                                      (l_left - 1) * (l_left - 2) / 2;
        if (rest < min_rest || rest > max_rest) continue;
        acc.push_back(t);
        enumerate_rec(rest, l_left - 1, t - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<SummandSet> enumerate_summand_sets(std::int64_t n, std::int64_t l) {
    if (n < 3) throw std::invalid_argument("enumerate_summand_sets requires n >= 3");
    if (l < 2) throw std::invalid_argument("enumerate_summand_sets requires l >= 2");
    std::vector<SummandSet> out;
    std::vector<std::int64_t> acc;
    enumerate_rec(n, l, n, acc, out);
    return out;
}

std::optional<SummandSet> split2(std::int64_t m) {
    if (m < 3) throw std::invalid_argument("split2 requires m >= 3");
    const std::int64_t hi = (m % 2 != 0) ? (m + 1) / 2 : m / 2 + 1;
    const std::int64_t lo = m - hi;
    if (lo <= 1) return std::nullopt; // m = 3 or 4: a part would be 1
    return make_summand_set({hi, lo});
}

std::vector<SummandSet> greedy_summand_chain(std::int64_t n) {
    if (n < 5) throw std::invalid_argument("no 2-term summand set");
    std::vector<SummandSet> chain;
    chain.push_back(*split2(n));

    for (;;) {
        const std::vector<std::int64_t>& parts = chain.back().parts;
        bool advanced = false;
        for (std::size_t i = 0; i < parts.size() && !advanced; ++i) {
            if (parts[i] < 5) continue; // split2 has no valid result below 5
            const std::optional<SummandSet> halves = split2(parts[i]);
            if (!halves) continue;
            std::vector<std::int64_t> next;
            next.reserve(parts.size() + 1);
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (j != i) next.push_back(parts[j]);
            // Both halves must avoid every retained part.
            bool collides = false;
            for (std::int64_t h : halves->parts)
                if (std::find(next.begin(), next.end(), h) != next.end())
                    collides = true;
            if (collides) continue;
            next.insert(next.end(), halves->parts.begin(), halves->parts.end());
            std::sort(next.begin(), next.end(), std::greater<>());
            chain.push_back(make_summand_set(std::move(next)));
            advanced = true;
        }
        if (!advanced) break;
    }
    return chain;
}

std::optional<SummandSet> max_product_summand(std::int64_t n, std::int64_t l) {
    const std::vector<SummandSet> all = enumerate_summand_sets(n, l);
    if (all.empty()) return std::nullopt;
    const SummandSet* best = nullptr;
    std::int64_t best_product = 0;
    // Enumeration is lexicographically decreasing, so keeping strict maxima
    // resolves ties toward the lexicographically largest set.
    for (const SummandSet& s : all) {
        std::int64_t product = 1;
        for (std::int64_t t : s.parts) product *= t;
        if (product > best_product) {
            best_product = product;
            best = &s;
        }
    }
    return *best;
}

std::int64_t l_star(std::int64_t n) {
    if (n < 5) throw std::invalid_argument("l_star requires n >= 5");
    // Minimal sum of l distinct parts > 1 is 2 + 3 + ... + (l + 1).
    std::int64_t l = 2;
    while ((l + 1) * (l + 4) / 2 <= n) ++l;
    return l;
}

std::vector<std::pair<std::int64_t, std::uint64_t>>
rasta_compound_series(std::int64_t n) {
    std::vector<std::pair<std::int64_t, std::uint64_t>> series;
    for (const SummandSet& s : greedy_summand_chain(n)) {
        const IntString degrees = rasta(s).underlying().degree_sequence();
        series.emplace_back(static_cast<std::int64_t>(s.parts.size()),
                            compound_cn(group_degrees(degrees)));
    }
    return series;
}

} // namespace curling
