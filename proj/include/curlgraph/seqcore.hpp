#pragma once

#include <cstdint>
#include <vector>

namespace curling {

/// A finite sequence of nonnegative integers (degrees or plain counts).
using IntString = std::vector<std::int64_t>;

/// A suffix decomposition s = prefix ∘ block^count with count maximal.
struct Factorization {
    IntString prefix;       // may be empty
    IntString block;        // never empty
    std::int64_t count = 1; // maximal repetition count
};

/// Record of repeatedly extending a string by its curling number.
struct CurlingTrace {
    IntString start;
    std::vector<std::int64_t> appended; // appended[i] = cn after i extensions
    bool reached_one = false;
    std::size_t steps = 0;
};

// Maximal-repetition suffix factorization. Among block lengths tied on the
// repetition count, the shortest block wins.
Factorization factorize_max(const IntString& s);

// Curling number of the string as arranged: factorize_max(s).count.
std::int64_t cn_string(const IntString& s);

// Curling number maximized over all rearrangements of the entries. Equals
// the maximum multiplicity of any value.
std::int64_t cn_rearranged(const IntString& s);

// s followed by cn_string(s).
IntString extend_once(const IntString& s);

// Repeatedly extend s by its curling number. Stops at the first appended 1
// unless stop_at_one is false, in which case it always runs max_steps
// extensions (the extension stream view).
CurlingTrace verify_conjecture(const IntString& s, std::size_t max_steps,
                               bool stop_at_one = true);

} // namespace curling
