#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace curling {

/// Strictly decreasing distinct integer parts, each > 1, summing to target.
struct SummandSet {
    std::vector<std::int64_t> parts;
    std::int64_t target = 0;

    friend bool operator==(const SummandSet&, const SummandSet&) = default;
};

// Builds a SummandSet from parts, validating the type invariants.
SummandSet make_summand_set(std::vector<std::int64_t> parts);

// All partitions of n into exactly l distinct parts > 1, lexicographically
// decreasing. Empty when none exist.
std::vector<SummandSet> enumerate_summand_sets(std::int64_t n, std::int64_t l);

// Maximal-product 2-term split of m: odd m -> {(m+1)/2, (m-1)/2}, even m ->
// {m/2+1, m/2-1}. nullopt when a part would be <= 1 (m < 5).
std::optional<SummandSet> split2(std::int64_t m);

// The iterative splitting chain: start from split2(n), then repeatedly try
// the current parts in decreasing order and replace the first part whose
// split2 yields parts > 1 that collide with no retained part. Returns the
// chain [2-term, 3-term, ..., l*-term].
std::vector<SummandSet> greedy_summand_chain(std::int64_t n);

// The enumerated l-term set of n maximizing the product of parts; ties go to
// the lexicographically largest. nullopt when no set exists.
std::optional<SummandSet> max_product_summand(std::int64_t n, std::int64_t l);

// Largest l for which an l-term summand set of n exists.
std::int64_t l_star(std::int64_t n);

// For each set in greedy_summand_chain(n): build the Rasta graph and compute
// the compound curling number from its constructed degree sequence.
std::vector<std::pair<std::int64_t, std::uint64_t>>
rasta_compound_series(std::int64_t n);

} // namespace curling
