#pragma once

#include <cstdint>
#include <vector>

#include "curlgraph/seqcore.hpp"

namespace curling {

/// One maximal group of equal degrees.
struct Run {
    std::int64_t value = 0;        // the degree
    std::int64_t multiplicity = 0; // how many vertices carry it

    friend bool operator==(const Run&, const Run&) = default;
};

/// A degree sequence grouped by value, runs strictly decreasing by value.
struct IdentityString {
    std::vector<Run> runs;

    friend bool operator==(const IdentityString&, const IdentityString&) = default;
};

/// Predicted sign of cn^c(G - uv) - cn^c(G) for an equal-degree edge deletion.
enum class DeletionSign {
    non_decreasing, // cn^c(G - uv) >= cn^c(G)
    decreasing      // cn^c(G - uv) <  cn^c(G)
};

// Group a degree sequence into runs, sorted by value descending.
IdentityString group_degrees(const IntString& s);

// Inverse of group_degrees up to ordering: canonical descending expansion.
IntString expand(const IdentityString& d);

// Curling number of the graph: the maximum run multiplicity.
std::int64_t cn_graph(const IdentityString& d);

// Number of runs whose multiplicity attains cn_graph.
std::int64_t ic_graph(const IdentityString& d);

// Curling index: 1 when ic = 1, otherwise ic + ic!. Throws on factorial
// overflow (ic >= 21).
std::int64_t curling_index(const IdentityString& d);

// Compound curling number: product of all run multiplicities, checked.
std::uint64_t compound_cn(const IdentityString& d);

// Merger of identity strings: multiplicities of equal values are summed.
IdentityString merge_union(const std::vector<IdentityString>& ds);

// The union formula of two degree strings sharing exactly one value:
// cn^c(G) * prod(H's other multiplicities) + cn^c(H) * prod(G's others).
std::uint64_t union_compound_paper(const IdentityString& g,
                                   const IdentityString& h,
                                   std::int64_t shared_value);

// Sign prediction for deleting an edge between two degree-d_j vertices:
// non_decreasing iff t_j - 2 >= multiplicity of value d_j - 1 (0 if absent).
DeletionSign edge_deletion_prediction(const IdentityString& d, std::int64_t d_j);

} // namespace curling
