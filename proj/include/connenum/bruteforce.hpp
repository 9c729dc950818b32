#pragma once

// Exhaustive reference implementations. Everything here is exponential and
// guarded by hard size limits; nothing touches the flow or oracle code except
// brute_mu, which scores cuts with MetaWeightSystem::cut_weight.

#include <cstddef>
#include <functional>
#include <vector>

#include "connenum/core.hpp"
#include "connenum/enumerator.hpp"
#include "connenum/flow.hpp"
#include "connenum/graph_systems.hpp"
#include "connenum/mixed_graph.hpp"

namespace connenum::brute {

using MembershipPredicate = std::function<bool(const ElementSet&)>;

constexpr std::size_t kMaxComponentGround = 20;
constexpr std::size_t kMaxSolutionGround = 12;
constexpr std::size_t kMaxCutVertices = 7;
constexpr std::size_t kMaxCutEdges = 24;

// All non-empty X ⊆ [0,n) with pred(X), in canonical order.
std::vector<ElementSet> components(std::size_t n, const MembershipPredicate& pred);

// Maximal members of the family inside y, in canonical order.
std::vector<ElementSet> maximal_inside(const std::vector<ElementSet>& family, const ElementSet& y);

// Components X such that every strictly larger component has a strictly
// smaller common item set; rho-negative ones are dropped. Sorted by
// canonical order of the element sets.
std::vector<SolutionRecord> solutions(const Instance& inst, const MembershipPredicate& pred);

// Part of a graph that the connectivity questions are asked in.
struct Subgraph {
  VertexSet vertices;
  std::vector<char> edges;  // per edge id; both end-vertices must be present
};
Subgraph whole(const MixedGraph& g);
Subgraph induced(const MixedGraph& g, const VertexSet& x);
Subgraph edge_induced(const MixedGraph& g, const std::vector<std::size_t>& f);

// Whether t is reachable from s, arcs followed forward only.
bool reaches(const MixedGraph& g, const Subgraph& h, std::size_t s, std::size_t t);

// Fewest edges of h whose removal leaves no s->t path.
std::size_t lambda(const MixedGraph& g, std::size_t s, std::size_t t, const Subgraph& h);
// Fewest vertices (other than s,t) plus edges whose removal leaves no s->t path.
std::size_t kappa(const MixedGraph& g, std::size_t s, std::size_t t, const Subgraph& h);
std::size_t lambda(const MixedGraph& g, std::size_t s, std::size_t t);
std::size_t kappa(const MixedGraph& g, std::size_t s, std::size_t t);

// mu(s,t;X) as the minimum of cut_weight over every partition (S,R,T) of
// V(M) with s in S and t in T. Scaled like the system.
Weight mu(const MetaWeightSystem& sys, std::size_t s, std::size_t t, const AtomSet& x);

// Membership in the connectivity family of a mode, from lambda/kappa only.
// Elements are vertex ids, or edge ids for the edge-induced modes.
bool member(const MixedGraph& g, SystemMode mode, std::size_t k, const ElementSet& x);
MembershipPredicate predicate(const MixedGraph& g, SystemMode mode, std::size_t k);

}  // namespace connenum::brute
