#include "curlgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace curling {

namespace {

void require_vertex(std::int64_t v, std::int64_t n) {
    if (v < 0 || v >= n)
        throw std::out_of_range("vertex id out of range");
}

} // namespace

SimpleGraph::SimpleGraph(std::int64_t vertex_count) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
}

void SimpleGraph::add_edge(std::int64_t u, std::int64_t v) {
    require_vertex(u, n_);
    require_vertex(v, n_);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    edges_.insert({std::min(u, v), std::max(u, v)});
}

bool SimpleGraph::has_edge(std::int64_t u, std::int64_t v) const {
    return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

IntString SimpleGraph::degree_sequence() const {
    if (n_ == 0) throw std::invalid_argument("empty graph has no degree sequence");
    IntString deg(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

DiGraph::DiGraph(std::int64_t vertex_count) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
}

void DiGraph::add_arc(std::int64_t from, std::int64_t to) {
    require_vertex(from, n_);
    require_vertex(to, n_);
    if (from == to) throw std::invalid_argument("self-arc rejected");
    arcs_.insert({from, to});
}

bool DiGraph::has_arc(std::int64_t from, std::int64_t to) const {
    return arcs_.count({from, to}) != 0;
}

std::int64_t DiGraph::in_degree(std::int64_t v) const {
    require_vertex(v, n_);
    std::int64_t d = 0;
    for (const auto& [from, to] : arcs_)
        if (to == v) ++d;
    return d;
}

std::int64_t DiGraph::out_degree(std::int64_t v) const {
    require_vertex(v, n_);
    std::int64_t d = 0;
    for (const auto& [from, to] : arcs_)
        if (from == v) ++d;
    return d;
}

SimpleGraph DiGraph::underlying() const {
    SimpleGraph g(n_);
    for (const auto& [from, to] : arcs_) g.add_edge(from, to);
    return g;
}

SimpleGraph delete_edge(const SimpleGraph& g, std::int64_t u, std::int64_t v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    SimpleGraph out(g.vertex_count());
    for (const auto& [a, b] : g.edges())
        if (!(a == std::min(u, v) && b == std::max(u, v))) out.add_edge(a, b);
    return out;
}

} // namespace curling
