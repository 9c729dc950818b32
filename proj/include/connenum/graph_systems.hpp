#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "connenum/core.hpp"
#include "connenum/flow.hpp"

namespace connenum {

enum class SystemMode {
  connected,
  global_k_edge,
  global_k_vertex,
  induced_k_edge,
  induced_k_vertex,
  edge_induced_k_edge,
  edge_induced_k_vertex,
};

enum class Connectivity { edge, vertex };

SystemMode parse_mode(std::string_view name);
std::string mode_name(SystemMode mode);
std::vector<SystemMode> all_modes();
// Ground set is E(G) rather than V(G).
bool is_edge_ground(SystemMode mode);
bool is_vertex_connectivity(SystemMode mode);

struct SystemOptions {
  std::size_t k = 1;
  // Guards for the k-subset core families of the vertex-connectivity modes.
  std::size_t max_vertex_k = 3;
  std::size_t core_budget = 1'000'000;
};

// Monotone systems behind the connectivity families. Vertex weight is k for
// edge connectivity and 1 for vertex connectivity.
MetaWeightSystem global_connectivity_system(const MixedGraph& g, std::size_t k, Connectivity c);
MetaWeightSystem induced_connectivity_system(const MixedGraph& g, std::size_t k, Connectivity c);
MetaWeightSystem edge_induced_system(const MixedGraph& g, std::size_t k, Connectivity c);

// Maximal member of the system containing x inside y, or an empty set.
// Requires non-empty x ⊆ y ⊆ Lambda and omega_x(V(x)) >= k.
AtomSet maximal_in(const MetaWeightSystem& sys, const AtomSet& x, const AtomSet& y);

std::size_t binomial(std::size_t n, std::size_t k);

// Connected induced subgraphs, connectivity taken on the underlying
// undirected graph.
class CisOracle final : public TransitiveSystemOracle {
 public:
  explicit CisOracle(const MixedGraph& g);
  std::size_t ground_size() const override { return adj_.size(); }
  ElementSet l1(const ElementSet& x, const ElementSet& y) const override;
  std::vector<ElementSet> l2(const ElementSet& y) const override;
  std::size_t delta_hint(const ElementSet& y) const override { return y.count(); }

 private:
  ElementSet component_of(std::size_t v, const ElementSet& y) const;
  std::vector<ElementSet> adj_;
};

// Simple undirected graph with adjacency rows.
struct AuxiliaryGraph {
  std::vector<ElementSet> adj;

  std::size_t size() const { return adj.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adj[u].test(v); }
  bool is_clique(const ElementSet& x) const;
  // Whether adjacency is an equivalence relation on its support.
  bool is_cluster_graph() const;
};

// Auxiliary graph on V(G): uv present iff lambda (kappa) >= k both ways.
AuxiliaryGraph build_auxiliary_graph(const MixedGraph& g, std::size_t k, Connectivity c);

// Vertex sets whose members are pairwise k-edge/k-vertex-connected in G.
class GlobalOracle final : public TransitiveSystemOracle {
 public:
  GlobalOracle(const MixedGraph& g, Connectivity c, const SystemOptions& opt);
  std::size_t ground_size() const override { return aux_.size(); }
  ElementSet l1(const ElementSet& x, const ElementSet& y) const override;
  std::vector<ElementSet> l2(const ElementSet& y) const override;
  std::size_t delta_hint(const ElementSet& y) const override;

  const AuxiliaryGraph& auxiliary() const { return aux_; }

 private:
  ElementSet clique_class(std::size_t v, const ElementSet& y) const;
  ElementSet grow_clique(const ElementSet& x, const ElementSet& y) const;

  Connectivity conn_;
  SystemOptions opt_;
  AuxiliaryGraph aux_;
};

// Oracles for a monotone meta-weight system: l1 peels weak vertices
// (maximal_in), l2 runs l1 from every k-core of y.
class MetaWeightOracle final : public TransitiveSystemOracle {
 public:
  enum class Cores { singletons, k_subsets };

  MetaWeightOracle(std::shared_ptr<const MetaWeightSystem> sys, Cores cores, const SystemOptions& opt);

  std::size_t ground_size() const override { return ground_atoms_.size(); }
  ElementSet l1(const ElementSet& x, const ElementSet& y) const override;
  std::vector<ElementSet> l2(const ElementSet& y) const override;
  std::size_t delta_hint(const ElementSet& y) const override;

  // Candidate seed sets for l2(y), before the omega >= k filter.
  std::vector<ElementSet> k_cores(const ElementSet& y) const;

  const MetaWeightSystem& system() const { return *sys_; }
  AtomSet to_atoms(const ElementSet& x) const;
  ElementSet from_atoms(const AtomSet& a) const;
  bool is_member(const ElementSet& x) const { return sys_->is_member(to_atoms(x)); }

 private:
  std::size_t core_size() const;

  std::shared_ptr<const MetaWeightSystem> sys_;
  Cores cores_;
  SystemOptions opt_;
  std::vector<std::size_t> ground_atoms_;
};

std::shared_ptr<const TransitiveSystemOracle> make_oracle(const MixedGraph& g, SystemMode mode,
                                                          const SystemOptions& opt);

// Connector instance over V(G), or over E(G) for the edge-ground modes where
// an edge carries the items shared by its two ends. Items lie in [1,q].
Instance connector_instance(const MixedGraph& g, const std::vector<std::vector<std::size_t>>& vertex_items,
                            std::size_t q, SystemMode mode, const SystemOptions& opt,
                            std::shared_ptr<const VolumeFunction> volume = nullptr);

// rho(F) = |V(F)| - |V(G)| + 1 over edge subsets; positive iff F spans G.
class SpanningVolume final : public VolumeFunction {
 public:
  explicit SpanningVolume(const MixedGraph& g) : g_(g) {}
  bool eval_positive(const ElementSet& f) const override;

 private:
  MixedGraph g_;
};

}  // namespace connenum
