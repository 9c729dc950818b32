#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "connenum/flow.hpp"
#include "connenum/mixed_graph.hpp"

namespace connenum {

using Rng = std::mt19937_64;

struct GraphShape {
  std::size_t min_n = 1;
  std::size_t max_n = 7;
  std::size_t max_m = 12;
  double arc_probability = 0.0;
};

// Random mixed graph: n uniform in [min_n, max_n], m uniform in
// [0, max_m], endpoints uniform over distinct pairs (parallel edges allowed).
MixedGraph random_graph(Rng& rng, const GraphShape& shape);

// Random item assignment over [1,q], each item kept with probability p.
std::vector<std::vector<std::size_t>> random_items(Rng& rng, std::size_t n, std::size_t q, double p);

// Item assignment for the edge ground set: the items of an edge are those
// shared by both of its ends.
std::vector<std::vector<std::size_t>> edge_items(const MixedGraph& g,
                                                 const std::vector<std::vector<std::size_t>>& vertex_items);

// Monotone system on g with weights in [0, max_weight], coefficients drawn
// from {0, 1/2, 1} subject to the monotonicity order, and a ground set that
// keeps each atom with probability ground_p.
MetaWeightSystem random_monotone_system(Rng& rng, const MixedGraph& g, Weight k, Weight max_weight = 3,
                                        double ground_p = 0.7);

}  // namespace connenum
