#pragma once

#include <cstddef>
#include <vector>

#include "connenum/bitset.hpp"

namespace connenum {

struct VertexTag {};
struct AtomTag {};

using VertexSet = BitSet<VertexTag>;
// Subset of V(M) ∪ E(M): atoms 0..n-1 are vertices, n..n+m-1 are edges.
using AtomSet = BitSet<AtomTag>;

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  bool directed = false;  // arc u -> v when set
};

// Graph with undirected edges and arcs; parallel edges allowed, self-loops
// rejected. Edge ids are insertion indices.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(std::size_t n) : n_(n), incident_(n) {}

  std::size_t add_edge(std::size_t u, std::size_t v);
  std::size_t add_arc(std::size_t u, std::size_t v);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_atoms() const { return n_ + edges_.size(); }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
  bool has_arcs() const;

  std::size_t edge_atom(std::size_t e) const { return n_ + e; }
  bool is_vertex_atom(std::size_t a) const { return a < n_; }

  AtomSet empty_atoms() const { return AtomSet(num_atoms()); }
  AtomSet vertex_atoms(const VertexSet& vs) const;
  AtomSet all_vertex_atoms() const;
  AtomSet all_edge_atoms() const;
  // V(X): vertices in X plus end-vertices of edges in X.
  VertexSet vertices_of(const AtomSet& x) const;

 private:
  std::size_t add(std::size_t u, std::size_t v, bool directed);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

}  // namespace connenum
