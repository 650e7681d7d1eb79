#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "curlgraph/graph.hpp"
#include "curlgraph/summand.hpp"

namespace curling {

using BigInt = boost::multiprecision::cpp_int;

// Standard families. Vertex ids follow the construction order described at
// each generator.
SimpleGraph path(std::int64_t n);               // n >= 1
SimpleGraph cycle(std::int64_t n);              // n >= 3
SimpleGraph complete(std::int64_t n);           // n >= 1
SimpleGraph complete_bipartite(std::int64_t m, std::int64_t n); // m, n >= 1
SimpleGraph wheel(std::int64_t n);              // n >= 4, W_n = C_{n-1} + K_1
SimpleGraph ladder(std::int64_t n);             // n >= 2, L_n = P_n x P_2

// Vertex-count formula f(m, n) for an (m, n)-cage (the Moore bound). m = 2
// returns n; the paper asserts cn of the cage equals this value.
std::uint64_t cage_order(std::int64_t m, std::int64_t n);

// Finite Jaco graph J_n(1): vertices v_1..v_n as ids 0..n-1; processing i in
// index order, arcs run from v_i to every v_j with i < j <= 2i - d^-(v_i).
DiGraph jaco(std::int64_t n);

// Degree sequence of the underlying graph J*_n(1) without materializing arcs.
IntString jaco_degrees(std::int64_t n);

// Degree sequences of J*_1(1)..J*_n_max(1), sharing one pass over the prefix.
std::vector<IntString> jaco_degree_table(std::int64_t n_max);

// Set-graph on the 2^n - 1 non-empty subsets of an n-set, enumerated by
// bitmask in increasing numeric order; edges join intersecting subsets.
SimpleGraph set_graph(std::int64_t n); // 1 <= n <= 20

// Product of binomial coefficients C(n, i), i = 1..n.
BigInt binomial_product(std::int64_t n);

// Hyperfactorial H(n) = prod i^i.
BigInt hyperfactorial(std::int64_t n);

// Exact check of prod C(n, i) == H(n)^2 / (n!)^(n+1).
bool hyperfactorial_identity_holds(std::int64_t n);

bool is_perfect_square(const BigInt& x);

struct SetGraphCompound {
    std::uint64_t value = 0;             // prod C(n, i)
    bool hyperfactorial_identity = false; // agreement of the H(n) form
};

// Closed form for the set-graph compound curling number, with the
// hyperfactorial identity evaluated alongside. Throws on overflow.
SetGraphCompound set_graph_compound_closed_form(std::int64_t n);

// Rasta graph of a summand set: columns of sizes t_1..t_l, consecutive
// columns completely joined, arcs oriented left to right. Column i (0-based)
// starts at vertex id sum(t_1..t_i).
DiGraph rasta(const SummandSet& ts);

} // namespace curling
