#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "connenum/mixed_graph.hpp"

namespace connenum {

using Weight = std::int64_t;
using Coef = boost::rational<std::int64_t>;

// Coefficients (alpha, alpha_bar, alpha_plus, alpha_minus, beta) of one edge.
// alpha_bar applies to undirected edges, alpha_plus/alpha_minus to arcs.
struct EdgeCoefficients {
  Coef alpha{1};
  Coef alpha_bar{1};
  Coef alpha_plus{1};
  Coef alpha_minus{1};
  Coef beta{1};
};

// s,t-cut (S,T) together with the bypassed vertices R = V \ (S ∪ T).
struct CutCertificate {
  VertexSet source_side;
  VertexSet sink_side;
  VertexSet removed;
  Weight value = 0;  // scaled, see MetaWeightSystem::scale()
};

// Mixed graph with weights w, coefficient tuple gamma, threshold k and ground
// set Lambda. Rational coefficients are scaled by the lcm of their
// denominators, so every weight reported here is an integer in units of
// 1/scale().
class MetaWeightSystem {
 public:
  struct Params {
    std::vector<Weight> vertex_weight;        // size n
    std::vector<Weight> edge_weight;          // size m
    std::vector<EdgeCoefficients> edge_coef;  // size m
    std::vector<Coef> vertex_beta;            // size n
    Weight k = 0;
    AtomSet ground;  // Lambda, capacity n+m
  };

  MetaWeightSystem(MixedGraph graph, Params params);

  static MetaWeightSystem uniform(MixedGraph graph, Weight vertex_weight, Weight edge_weight,
                                  const EdgeCoefficients& coef, Coef vertex_beta, Weight k, AtomSet ground);

  const MixedGraph& graph() const { return graph_; }
  const AtomSet& ground() const { return ground_; }
  Weight k() const { return k_; }
  Weight scale() const { return scale_; }
  Weight threshold() const { return k_ * scale_; }

  // omega_X(a), scaled.
  Weight induced_weight(const AtomSet& x, std::size_t atom) const;
  std::vector<Weight> induced_weights(const AtomSet& x) const;
  // omega_X(V(X)), scaled.
  Weight vertex_mass(const AtomSet& x) const;
  // omega_X(eps(S,T)) for a given cut, scaled.
  Weight cut_weight(const AtomSet& x, const VertexSet& source_side, const VertexSet& sink_side) const;

  // mu(s,t;X), scaled. Throws when s == t.
  Weight min_cut_value(std::size_t s, std::size_t t, const AtomSet& x, CutCertificate* cert = nullptr) const;
  // mu(s,t;X) >= threshold, stopping the flow early.
  bool cut_at_least(std::size_t s, std::size_t t, const AtomSet& x, Weight threshold) const;

  // Whether some u in V(X) has mu(u,t;Y) or mu(t,u;Y) below threshold, using
  // one flow from a super source (and one into a super sink when the graph has
  // arcs). Preconditions (checked only in debug builds): X ⊆ Y,
  // omega_X(V(X)) >= threshold, pairwise mu >= threshold inside V(X).
  bool exists_weak_vertex(const AtomSet& x, std::size_t t, const AtomSet& y, Weight threshold) const;
  bool exists_weak_vertex(const AtomSet& x, std::size_t t, const AtomSet& y) const {
    return exists_weak_vertex(x, t, y, threshold());
  }

  // |V(X)| = 1 or mu(u,v;X) >= k for all ordered pairs of V(X).
  bool is_k_connected(const AtomSet& x) const;
  // Non-empty X ⊆ Lambda, k-connected, with omega_X(V(X)) >= k.
  bool is_member(const AtomSet& x) const;

 private:
  Weight edge_case_weight(const AtomSet& x, const VertexSet& vx, std::size_t e) const;
  Weight vertex_case_weight(const VertexSet& vx, std::size_t v) const;
  Weight max_flow(const std::vector<Weight>& w, std::size_t s, std::size_t t, Weight limit,
                  const std::vector<std::size_t>* super_sources, Weight super_cap,
                  std::vector<char>* reach, bool reverse) const;

  struct ScaledEdge {
    Weight alpha, alpha_bar, alpha_plus, alpha_minus, beta;
  };

  MixedGraph graph_;
  std::vector<Weight> vertex_weight_;
  std::vector<Weight> edge_weight_;
  std::vector<ScaledEdge> edge_coef_;
  std::vector<Weight> vertex_beta_;
  Weight k_ = 0;
  Weight scale_ = 1;
  AtomSet ground_;
};

bool is_monotone(const EdgeCoefficients& c, bool directed);

}  // namespace connenum
