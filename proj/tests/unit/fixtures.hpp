#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "connenum/bruteforce.hpp"
#include "connenum/enumerator.hpp"
#include "connenum/graph_systems.hpp"

namespace fixtures {

using namespace connenum;

// Triangle v1 v2 v3 with pendant v4 on v3; vertex vi has index i-1.
inline MixedGraph gadget_graph() {
  MixedGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

inline std::vector<std::vector<std::size_t>> gadget_items() { return {{1, 2, 3}, {1, 3}, {1, 2}, {3}}; }

inline Instance gadget_instance(SystemMode mode = SystemMode::connected, std::size_t k = 1) {
  SystemOptions opt;
  opt.k = k;
  return connector_instance(gadget_graph(), gadget_items(), 3, mode, opt);
}

inline ElementSet vs(std::size_t n, std::initializer_list<std::size_t> members) { return ElementSet(n, members); }
inline ItemSet items(std::size_t q, std::initializer_list<std::size_t> members) { return ItemSet(q + 1, members); }

inline MixedGraph path(std::size_t n) {
  MixedGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline MixedGraph cycle(std::size_t n) {
  auto g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline MixedGraph complete(std::size_t n) {
  MixedGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline void sort_sets(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
}

inline std::vector<ElementSet> elements_of(const std::vector<SolutionRecord>& sols) {
  std::vector<ElementSet> out;
  for (const auto& s : sols) out.push_back(s.elements);
  sort_sets(out);
  return out;
}

inline std::vector<std::string> strings(const std::vector<ElementSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

}  // namespace fixtures
