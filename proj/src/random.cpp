#include "connenum/random.hpp"

#include <algorithm>
#include <iterator>

namespace connenum {

MixedGraph random_graph(Rng& rng, const GraphShape& shape) {
  std::uniform_int_distribution<std::size_t> pick_n(shape.min_n, shape.max_n);
  const auto n = pick_n(rng);
  MixedGraph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<std::size_t> pick_m(0, shape.max_m);
  std::uniform_int_distribution<std::size_t> pick_v(0, n - 1);
  std::bernoulli_distribution arc(shape.arc_probability);
  const auto m = pick_m(rng);
  for (std::size_t i = 0; i < m; ++i) {
    auto u = pick_v(rng);
    auto v = pick_v(rng);
    while (v == u) v = pick_v(rng);
    if (arc(rng)) {
      g.add_arc(u, v);
    } else {
      g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> random_items(Rng& rng, std::size_t n, std::size_t q, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<std::vector<std::size_t>> out(n);
  for (auto& items : out)
    for (std::size_t i = 1; i <= q; ++i)
      if (keep(rng)) items.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> edge_items(const MixedGraph& g,
                                                 const std::vector<std::vector<std::size_t>>& vertex_items) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    std::vector<std::size_t> common;
    const auto& a = vertex_items[e.u];
    const auto& b = vertex_items[e.v];
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    out.push_back(std::move(common));
  }
  return out;
}

MetaWeightSystem random_monotone_system(Rng& rng, const MixedGraph& g, Weight k, Weight max_weight,
                                        double ground_p) {
  const Coef levels[] = {Coef(0), Coef(1, 2), Coef(1)};
  std::uniform_int_distribution<int> level(0, 2);
  std::uniform_int_distribution<Weight> weight(0, max_weight);
  std::bernoulli_distribution keep(ground_p);
  // A value between lo and hi on the level scale.
  auto between = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  MetaWeightSystem::Params p;
  p.k = k;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    p.vertex_weight.push_back(weight(rng));
    p.vertex_beta.push_back(levels[level(rng)]);
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    p.edge_weight.push_back(weight(rng));
    int beta = level(rng);
    int alpha = between(beta, 2);
    int side1 = between(beta, alpha);
    int side2 = between(beta, alpha);
    EdgeCoefficients c;
    c.alpha = levels[alpha];
    c.beta = levels[beta];
    c.alpha_bar = levels[side1];
    c.alpha_plus = levels[side1];
    c.alpha_minus = levels[side2];
    p.edge_coef.push_back(c);
  }
  p.ground = g.empty_atoms();
  for (std::size_t a = 0; a < g.num_atoms(); ++a)
    if (keep(rng)) p.ground.set(a);
  return MetaWeightSystem(g, std::move(p));
}

}  // namespace connenum
