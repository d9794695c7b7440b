#pragma once

#include "stpath/graph.hpp"

#include <cstdint>
#include <string_view>

namespace stpath {

/// Uniform random labelled spanning tree (Prüfer code) plus m - (n - 1) distinct
/// random extra edges; s and t are a uniformly random distinct pair. Pure in (n, m, seed).
Graph gen_random(int n, int m, std::uint64_t seed);

/// Theta graph: three internally vertex-disjoint s-t paths of length k (k >= 2).
/// s = 0, t = 1, n = 3k - 1.
Graph gen_gap(int k);

/// Small fixed instances: "p4", "star", "k3", "c5", "edge".
Graph gen_named(std::string_view name);

}  // namespace stpath
