#include "curlgraph/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace curling {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error(what);
    return out;
}

} // namespace

SimpleGraph path(std::int64_t n) {
    require(n >= 1, "path requires n >= 1");
    SimpleGraph g(n);
    for (std::int64_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph cycle(std::int64_t n) {
    require(n >= 3, "cycle requires n >= 3");
    SimpleGraph g(n);
    for (std::int64_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph complete(std::int64_t n) {
    require(n >= 1, "complete requires n >= 1");
    SimpleGraph g(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph complete_bipartite(std::int64_t m, std::int64_t n) {
    require(m >= 1 && n >= 1, "complete_bipartite requires m, n >= 1");
    SimpleGraph g(m + n);
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

SimpleGraph wheel(std::int64_t n) {
    require(n >= 4, "wheel requires n >= 4");
    SimpleGraph g(n);
    const std::int64_t rim = n - 1; // hub is vertex n - 1
    for (std::int64_t i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    return g;
}

SimpleGraph ladder(std::int64_t n) {
    require(n >= 2, "ladder requires n >= 2");
    SimpleGraph g(2 * n); // top rail 0..n-1, bottom rail n..2n-1
    for (std::int64_t i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
        g.add_edge(n + i, n + i + 1);
    }
    for (std::int64_t i = 0; i < n; ++i) g.add_edge(i, n + i);
    return g;
}

std::uint64_t cage_order(std::int64_t m, std::int64_t n) {
    require(m >= 2, "cage_order requires m >= 2");
    require(n >= 3, "cage_order requires n >= 3");
    if (m == 2) return static_cast<std::uint64_t>(n); // the (2,n)-cage is C_n

    const std::int64_t r = (n % 2 != 0) ? (n - 1) / 2 : n / 2;
    const std::uint64_t lead =
        (n % 2 != 0) ? static_cast<std::uint64_t>(m) : 2;
    std::uint64_t pow = 1;
    for (std::int64_t i = 0; i < r; ++i)
        pow = checked_mul_u64(pow, static_cast<std::uint64_t>(m - 1),
                              "cage order overflow");
    const std::uint64_t num =
        checked_mul_u64(lead, pow, "cage order overflow") - 2;
    return num / static_cast<std::uint64_t>(m - 2);
}

namespace {

// In-degrees and raw out-range tops of the infinite Jaco prefix v_1..v_N.
// raw_top[i] = 2i - d^-(v_i) with 1-based indexing; arcs of J_n(1) are
// exactly (v_i, v_j) with i < j <= min(raw_top[i], n).
struct JacoPrefix {
    std::vector<std::int64_t> in_degree; // index 1..N
    std::vector<std::int64_t> raw_top;   // index 1..N
};

JacoPrefix jaco_prefix(std::int64_t n) {
    JacoPrefix p;
    p.in_degree.assign(static_cast<std::size_t>(n) + 1, 0);
    p.raw_top.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t top = 2 * i - p.in_degree[static_cast<std::size_t>(i)];
        p.raw_top[static_cast<std::size_t>(i)] = top;
        for (std::int64_t j = i + 1; j <= std::min(top, n); ++j)
            ++p.in_degree[static_cast<std::size_t>(j)];
    }
    return p;
}

} // namespace

DiGraph jaco(std::int64_t n) {
    require(n >= 1, "jaco requires n >= 1");
    const JacoPrefix p = jaco_prefix(n);
    DiGraph g(n);
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i + 1;
             j <= std::min(p.raw_top[static_cast<std::size_t>(i)], n); ++j)
            g.add_arc(i - 1, j - 1);
    return g;
}

IntString jaco_degrees(std::int64_t n) {
    require(n >= 1, "jaco requires n >= 1");
    const JacoPrefix p = jaco_prefix(n);
    IntString deg(static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k <= n; ++k) {
        const std::int64_t out =
            std::max<std::int64_t>(0,
                std::min(p.raw_top[static_cast<std::size_t>(k)], n) - k);
        deg[static_cast<std::size_t>(k - 1)] =
            p.in_degree[static_cast<std::size_t>(k)] + out;
    }
    return deg;
}

std::vector<IntString> jaco_degree_table(std::int64_t n_max) {
    require(n_max >= 1, "jaco requires n >= 1");
    const JacoPrefix p = jaco_prefix(n_max);
    std::vector<IntString> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) {
        IntString deg(static_cast<std::size_t>(n));
        for (std::int64_t k = 1; k <= n; ++k) {
            // In-degrees are truncation-invariant: tails precede heads.
            const std::int64_t out =
                std::max<std::int64_t>(0,
                    std::min(p.raw_top[static_cast<std::size_t>(k)], n) - k);
            deg[static_cast<std::size_t>(k - 1)] =
                p.in_degree[static_cast<std::size_t>(k)] + out;
        }
        rows.push_back(std::move(deg));
    }
    return rows;
}

SimpleGraph set_graph(std::int64_t n) {
    require(n >= 1, "set_graph requires n >= 1");
    if (n > 20) throw std::invalid_argument("set-graph too large");
    const std::int64_t count = (std::int64_t{1} << n) - 1;
    SimpleGraph g(count);
    for (std::int64_t a = 1; a <= count; ++a)
        for (std::int64_t b = a + 1; b <= count; ++b)
            if ((a & b) != 0) g.add_edge(a - 1, b - 1);
    return g;
}

BigInt binomial_product(std::int64_t n) {
    require(n >= 1, "binomial_product requires n >= 1");
    BigInt product = 1;
    BigInt binom = 1; // C(n, i) built incrementally
    for (std::int64_t i = 1; i <= n; ++i) {
        binom = binom * (n - i + 1) / i;
        product *= binom;
    }
    return product;
}

BigInt hyperfactorial(std::int64_t n) {
    require(n >= 1, "hyperfactorial requires n >= 1");
    BigInt h = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        BigInt p = 1;
        for (std::int64_t k = 0; k < i; ++k) p *= i;
        h *= p;
    }
    return h;
}

bool hyperfactorial_identity_holds(std::int64_t n) {
    BigInt fact = 1;
    for (std::int64_t i = 2; i <= n; ++i) fact *= i;
    BigInt denom = 1;
    for (std::int64_t i = 0; i <= n; ++i) denom *= fact;
    const BigInt h = hyperfactorial(n);
    if ((h * h) % denom != 0) return false;
    return binomial_product(n) == (h * h) / denom;
}

bool is_perfect_square(const BigInt& x) {
    if (x < 0) return false;
    const BigInt r = boost::multiprecision::sqrt(x);
    return r * r == x;
}

SetGraphCompound set_graph_compound_closed_form(std::int64_t n) {
    const BigInt value = binomial_product(n);
    if (value > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("set-graph compound curling number overflow");
    SetGraphCompound out;
    out.value = static_cast<std::uint64_t>(value);
    out.hyperfactorial_identity = hyperfactorial_identity_holds(n);
    return out;
}

DiGraph rasta(const SummandSet& ts) {
    // make_summand_set already validated construction-time sets; re-validate
    // in case the caller assembled the struct by hand.
    const SummandSet checked = make_summand_set(ts.parts);
    require(checked.parts.size() >= 2, "rasta requires at least 2 parts");

    DiGraph g(checked.target);
    std::int64_t offset = 0;
    for (std::size_t col = 0; col + 1 < checked.parts.size(); ++col) {
        const std::int64_t left = checked.parts[col];
        const std::int64_t right = checked.parts[col + 1];
        for (std::int64_t j = 0; j < left; ++j)
            for (std::int64_t m = 0; m < right; ++m)
                g.add_arc(offset + j, offset + left + m);
        offset += left;
    }
    return g;
}

} // namespace curling
