#include "curlgraph/degseq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace curling {

namespace {

void require_nonempty(const IdentityString& d) {
    if (d.runs.empty())
        throw std::invalid_argument("empty identity string");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("compound curling number overflow");
    return out;
}

std::uint64_t product_excluding(const IdentityString& d, std::int64_t skip_value) {
    std::uint64_t p = 1;
    for (const Run& r : d.runs)
        if (r.value != skip_value)
            p = checked_mul(p, static_cast<std::uint64_t>(r.multiplicity));
    return p;
}

} // namespace

IdentityString group_degrees(const IntString& s) {
    if (s.empty())
        throw std::invalid_argument("empty degree sequence");
    std::map<std::int64_t, std::int64_t, std::greater<>> mult;
    for (std::int64_t v : s) ++mult[v];
    IdentityString d;
    d.runs.reserve(mult.size());
    for (const auto& [value, count] : mult) d.runs.push_back({value, count});
    return d;
}

IntString expand(const IdentityString& d) {
    IntString s;
    for (const Run& r : d.runs)
        s.insert(s.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    return s;
}

std::int64_t cn_graph(const IdentityString& d) {
    require_nonempty(d);
    std::int64_t best = 0;
    for (const Run& r : d.runs) best = std::max(best, r.multiplicity);
    return best;
}

std::int64_t ic_graph(const IdentityString& d) {
    const std::int64_t cn = cn_graph(d);
    std::int64_t count = 0;
    for (const Run& r : d.runs)
        if (r.multiplicity == cn) ++count;
    return count;
}

std::int64_t curling_index(const IdentityString& d) {
    const std::int64_t ic = ic_graph(d);
    if (ic == 1) return 1;
    if (ic >= 21) throw std::overflow_error("curling index overflow");
    std::int64_t fact = 1;
    for (std::int64_t i = 2; i <= ic; ++i) fact *= i;
    return ic + fact;
}

std::uint64_t compound_cn(const IdentityString& d) {
    require_nonempty(d);
    std::uint64_t p = 1;
    for (const Run& r : d.runs)
        p = checked_mul(p, static_cast<std::uint64_t>(r.multiplicity));
    return p;
}

IdentityString merge_union(const std::vector<IdentityString>& ds) {
    if (ds.empty())
        throw std::invalid_argument("merge_union of an empty list");
    std::map<std::int64_t, std::int64_t, std::greater<>> mult;
    for (const IdentityString& d : ds)
        for (const Run& r : d.runs) mult[r.value] += r.multiplicity;
    IdentityString out;
    for (const auto& [value, count] : mult) out.runs.push_back({value, count});
    return out;
}

std::uint64_t union_compound_paper(const IdentityString& g,
                                   const IdentityString& h,
                                   std::int64_t shared_value) {
    require_nonempty(g);
    require_nonempty(h);
    std::vector<std::int64_t> shared;
    for (const Run& rg : g.runs)
        for (const Run& rh : h.runs)
            if (rg.value == rh.value) shared.push_back(rg.value);
    if (shared.size() != 1 || shared.front() != shared_value)
        throw std::invalid_argument("Prop 2.9 precondition violated");

    const std::uint64_t lhs =
        checked_mul(compound_cn(g), product_excluding(h, shared_value));
    const std::uint64_t rhs =
        checked_mul(compound_cn(h), product_excluding(g, shared_value));
    std::uint64_t out = 0;
    if (__builtin_add_overflow(lhs, rhs, &out))
        throw std::overflow_error("compound curling number overflow");
    return out;
}

DeletionSign edge_deletion_prediction(const IdentityString& d, std::int64_t d_j) {
    require_nonempty(d);
    std::int64_t t_j = -1;
    std::int64_t t_next = 0; // multiplicity of value d_j - 1, 0 if absent
    for (const Run& r : d.runs) {
        if (r.value == d_j) t_j = r.multiplicity;
        if (r.value == d_j - 1) t_next = r.multiplicity;
    }
    if (t_j < 2)
        throw std::invalid_argument(
            "edge deletion needs a run of the given degree with multiplicity >= 2");
    return t_j - 2 >= t_next ? DeletionSign::non_decreasing
                             : DeletionSign::decreasing;
}

} // namespace curling
