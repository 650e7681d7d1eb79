#include "curlgraph/seqcore.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace curling {

Factorization factorize_max(const IntString& s) {
    if (s.empty())
        throw std::invalid_argument("empty string has no curling number");
    const std::size_t n = s.size();

    std::size_t best_k = 0;
    std::size_t best_b = 0;
    for (std::size_t b = 1; b <= n; ++b) {
        // Trailing extent of period b: positions p counted down from n-b-1
        // while s[p] == s[p+b]. The suffix then holds 1 + matched/b copies
        // of the final block of length b.
        std::size_t matched = 0;
        for (std::size_t p = n - b; p-- > 0;) {
            if (s[p] != s[p + b]) break;
            ++matched;
        }
        const std::size_t k = 1 + matched / b;
        if (k > best_k) {
            best_k = k;
            best_b = b;
        }
    }

    Factorization f;
    f.count = static_cast<std::int64_t>(best_k);
    f.block.assign(s.end() - static_cast<std::ptrdiff_t>(best_b), s.end());
    f.prefix.assign(s.begin(),
                    s.end() - static_cast<std::ptrdiff_t>(best_k * best_b));
    return f;
}

std::int64_t cn_string(const IntString& s) { return factorize_max(s).count; }

std::int64_t cn_rearranged(const IntString& s) {
    if (s.empty())
        throw std::invalid_argument("empty string has no curling number");
    std::map<std::int64_t, std::int64_t> mult;
    for (std::int64_t v : s) ++mult[v];
    std::int64_t best = 0;
    for (const auto& [value, count] : mult) best = std::max(best, count);
    return best;
}

IntString extend_once(const IntString& s) {
    IntString out = s;
    out.push_back(cn_string(s));
    return out;
}

CurlingTrace verify_conjecture(const IntString& s, std::size_t max_steps,
                               bool stop_at_one) {
    if (s.empty())
        throw std::invalid_argument("empty string has no curling number");
    if (max_steps == 0)
        throw std::invalid_argument("max_steps must be at least 1");

    CurlingTrace trace;
    trace.start = s;
    IntString cur = s;
    for (std::size_t step = 0; step < max_steps; ++step) {
        const std::int64_t k = cn_string(cur);
        cur.push_back(k);
        trace.appended.push_back(k);
        ++trace.steps;
        if (k == 1) {
            trace.reached_one = true;
            if (stop_at_one) break;
        }
    }
    return trace;
}

} // namespace curling
