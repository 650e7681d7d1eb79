#pragma once

#include <cstdint>
#include <set>
#include <utility>

#include "curlgraph/seqcore.hpp"

namespace curling {

using VertexPair = std::pair<std::int64_t, std::int64_t>;

/// Undirected simple graph on vertex ids 0..n-1. Edges are stored normalized
/// (u < v); self-loops and duplicates are rejected.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::int64_t vertex_count);

    std::int64_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::set<VertexPair>& edges() const { return edges_; }

    void add_edge(std::int64_t u, std::int64_t v);
    bool has_edge(std::int64_t u, std::int64_t v) const;

    // Per-vertex degrees in vertex-id order.
    IntString degree_sequence() const;

private:
    std::int64_t n_ = 0;
    std::set<VertexPair> edges_;
};

/// Arc-list digraph on vertex ids 0..n-1.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(std::int64_t vertex_count);

    std::int64_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::set<VertexPair>& arcs() const { return arcs_; }

    void add_arc(std::int64_t from, std::int64_t to);
    bool has_arc(std::int64_t from, std::int64_t to) const;

    std::int64_t in_degree(std::int64_t v) const;
    std::int64_t out_degree(std::int64_t v) const;

    // Collapse arcs to undirected edges.
    SimpleGraph underlying() const;

private:
    std::int64_t n_ = 0;
    std::set<VertexPair> arcs_;
};

// Copy of g without the edge {u, v}. The edge must be present.
SimpleGraph delete_edge(const SimpleGraph& g, std::int64_t u, std::int64_t v);

} // namespace curling
