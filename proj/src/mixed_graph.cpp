#include "connenum/mixed_graph.hpp"

#include <string>

#include "connenum/core.hpp"

namespace connenum {

std::size_t MixedGraph::add(std::size_t u, std::size_t v, bool directed) {
  if (u >= n_ || v >= n_) throw Error("edge endpoint out of range");
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  edges_.push_back(Edge{u, v, directed});
  auto id = edges_.size() - 1;
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

std::size_t MixedGraph::add_edge(std::size_t u, std::size_t v) { return add(u, v, false); }
std::size_t MixedGraph::add_arc(std::size_t u, std::size_t v) { return add(u, v, true); }

bool MixedGraph::has_arcs() const {
  for (const auto& e : edges_)
    if (e.directed) return true;
  return false;
}

AtomSet MixedGraph::vertex_atoms(const VertexSet& vs) const {
  AtomSet out(num_atoms());
  vs.for_each([&](std::size_t v) { out.set(v); });
  return out;
}

AtomSet MixedGraph::all_vertex_atoms() const {
  AtomSet out(num_atoms());
  for (std::size_t v = 0; v < n_; ++v) out.set(v);
  return out;
}

AtomSet MixedGraph::all_edge_atoms() const {
  AtomSet out(num_atoms());
  for (std::size_t e = 0; e < edges_.size(); ++e) out.set(n_ + e);
  return out;
}

VertexSet MixedGraph::vertices_of(const AtomSet& x) const {
  VertexSet out(n_);
  x.for_each([&](std::size_t a) {
    if (a < n_) {
      out.set(a);
    } else {
      const auto& e = edges_[a - n_];
      out.set(e.u);
      out.set(e.v);
    }
  });
  return out;
}

}  // namespace connenum
