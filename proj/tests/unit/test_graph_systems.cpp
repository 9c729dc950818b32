#include <set>

#include "connenum/random.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace connenum;
using fixtures::vs;

namespace {

std::shared_ptr<const TransitiveSystemOracle> oracle(const MixedGraph& g, SystemMode mode, std::size_t k) {
  SystemOptions opt;
  opt.k = k;
  return make_oracle(g, mode, opt);
}

std::shared_ptr<MetaWeightOracle> meta(const MixedGraph& g, SystemMode mode, std::size_t k) {
  auto o = std::const_pointer_cast<TransitiveSystemOracle>(oracle(g, mode, k));
  return std::dynamic_pointer_cast<MetaWeightOracle>(o);
}

std::vector<ElementSet> all_subsets(std::size_t n) {
  std::vector<ElementSet> out;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    ElementSet y(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) y.set(i);
    out.push_back(y);
  }
  return out;
}

const SystemMode kModes[] = {SystemMode::connected,          SystemMode::global_k_edge,
                             SystemMode::global_k_vertex,    SystemMode::induced_k_edge,
                             SystemMode::induced_k_vertex,   SystemMode::edge_induced_k_edge,
                             SystemMode::edge_induced_k_vertex};

}  // namespace

TEST_CASE("mode names round trip") {
  for (auto m : all_modes()) CHECK(parse_mode(mode_name(m)) == m);
  CHECK(mode_name(SystemMode::edge_induced_k_vertex) == "edge-induced-k-vertex");
  CHECK_THROWS_AS(parse_mode("k-edge"), Error);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("connected induced subgraph oracles") {
  auto o = oracle(fixtures::gadget_graph(), SystemMode::connected, 1);
  CHECK(o->l2(vs(4, {0, 1, 3})) == std::vector{vs(4, {0, 1}), vs(4, {3})});
  CHECK(o->l1(vs(4, {1}), vs(4, {0, 1, 2})) == vs(4, {0, 1, 2}));
  CHECK(o->l1(vs(4, {0, 3}), vs(4, {0, 1, 2, 3})) == vs(4, {0, 1, 2, 3}));
  CHECK(o->l1(vs(4, {0, 3}), vs(4, {0, 3})).empty());
  CHECK(o->delta_hint(vs(4, {0, 1})) == 2);
}

TEST_CASE("maximal_in on the worked example") {
  auto g = fixtures::gadget_graph();
  auto sys = induced_connectivity_system(g, 2, Connectivity::edge);
  auto all = g.all_vertex_atoms();
  auto tri = g.vertex_atoms(VertexSet(4, {0, 1, 2}));
  CHECK(maximal_in(sys, g.vertex_atoms(VertexSet(4, {0})), all) == tri);
  // A single vertex has weight w(v) = k and so is a member by itself.
  CHECK(maximal_in(sys, g.vertex_atoms(VertexSet(4, {3})), all) == g.vertex_atoms(VertexSet(4, {3})));
  CHECK(maximal_in(sys, tri, tri) == tri);
  CHECK(maximal_in(sys, g.vertex_atoms(VertexSet(4, {0, 3})), all).empty());
  CHECK_THROWS_AS(maximal_in(sys, g.empty_atoms(), all), Error);
  CHECK_THROWS_AS(maximal_in(sys, all, tri), Error);
}

TEST_CASE("k-core families") {
  auto g = fixtures::gadget_graph();
  CHECK(meta(g, SystemMode::induced_k_edge, 2)->k_cores(vs(4, {0, 1, 2})) ==
        std::vector{vs(4, {0}), vs(4, {1}), vs(4, {2})});
  CHECK(meta(g, SystemMode::induced_k_vertex, 2)->k_cores(vs(4, {0, 1, 2})) ==
        std::vector{vs(4, {0, 1}), vs(4, {0, 2}), vs(4, {1, 2})});
  CHECK(meta(g, SystemMode::induced_k_vertex, 0)->k_cores(vs(4, {0, 1})) == std::vector{vs(4, {0}), vs(4, {1})});
  CHECK(meta(g, SystemMode::edge_induced_k_edge, 0)->k_cores(vs(4, {2, 3})) == std::vector{vs(4, {2}), vs(4, {3})});
}

TEST_CASE("core based l2 on the worked example") {
  auto g = fixtures::gadget_graph();
  auto o = oracle(g, SystemMode::induced_k_edge, 2);
  CHECK(o->l2(vs(4, {0, 1, 2, 3})) == std::vector{vs(4, {0, 1, 2}), vs(4, {3})});
  CHECK(o->l2(vs(4, {2, 3})) == std::vector{vs(4, {2}), vs(4, {3})});
  CHECK(oracle(g, SystemMode::induced_k_edge, 0)->l2(vs(4, {3})) == std::vector{vs(4, {3})});
  CHECK(oracle(g, SystemMode::induced_k_vertex, 2)->l2(vs(4, {2, 3})).empty());
  CHECK(oracle(g, SystemMode::induced_k_vertex, 2)->l2(vs(4, {0, 1, 2, 3})) == std::vector{vs(4, {0, 1, 2})});
}

TEST_CASE("global edge oracle on the worked example") {
  auto g = fixtures::gadget_graph();
  GlobalOracle o(g, Connectivity::edge, SystemOptions{2});
  CHECK(o.l2(vs(4, {0, 1, 2, 3})) == std::vector{vs(4, {0, 1, 2}), vs(4, {3})});
  CHECK(o.l1(vs(4, {1}), vs(4, {0, 1, 2, 3})) == vs(4, {0, 1, 2}));
  CHECK(o.l1(vs(4, {3}), vs(4, {0, 1, 2, 3})) == vs(4, {3}));
  CHECK(o.l1(vs(4, {2, 3}), vs(4, {0, 1, 2, 3})).empty());
  CHECK(o.auxiliary().is_cluster_graph());
}

TEST_CASE("global vertex oracle grows the unique clique") {
  auto g = fixtures::complete(4);
  g.add_edge(3, 0);
  GlobalOracle o(g, Connectivity::vertex, SystemOptions{3});
  auto all = vs(4, {0, 1, 2, 3});
  CHECK(o.l1(vs(4, {0, 1, 2}), all) == all);
  CHECK(o.l2(all) == std::vector{all});
  CHECK(o.l2(vs(4, {0, 1})).empty());
  CHECK(o.delta_hint(all) == 4);
}

TEST_CASE("edge-induced membership and spanning volume") {
  auto c4 = fixtures::cycle(4);
  auto sys = edge_induced_system(c4, 2, Connectivity::edge);
  auto all = c4.all_edge_atoms();
  CHECK(sys.is_member(all));
  auto three = all;
  three.reset(c4.edge_atom(3));
  CHECK_FALSE(sys.is_member(three));
  MixedGraph one(2);
  one.add_edge(0, 1);
  CHECK(edge_induced_system(one, 1, Connectivity::edge).is_member(one.all_edge_atoms()));

  SpanningVolume span(c4);
  CHECK(span.eval_positive(vs(4, {0, 1, 2, 3})));
  CHECK(span.eval_positive(vs(4, {0, 1, 2})));
  CHECK_FALSE(span.eval_positive(vs(4, {0})));
}

TEST_CASE("spanning 2-edge-connected subgraphs of a 4-cycle") {
  auto c4 = fixtures::cycle(4);
  auto comps = collect_components(oracle(c4, SystemMode::edge_induced_k_edge, 2), std::make_shared<SpanningVolume>(c4));
  CHECK(comps == std::vector{vs(4, {0, 1, 2, 3})});
}

TEST_CASE("guards on the vertex-connectivity core families") {
  auto g = fixtures::complete(5);
  SystemOptions opt;
  opt.k = 4;
  CHECK_THROWS_AS(make_oracle(g, SystemMode::induced_k_vertex, opt), GuardError);
  CHECK_THROWS_AS(make_oracle(g, SystemMode::global_k_vertex, opt), GuardError);
  opt.k = 2;
  opt.core_budget = 5;
  auto o = make_oracle(g, SystemMode::induced_k_vertex, opt);
  CHECK_THROWS_AS(o->l2(ElementSet::full(5)), GuardError);
  CHECK_NOTHROW(o->l2(vs(5, {0, 1, 2})));
  CHECK_THROWS_AS(make_oracle(MixedGraph(3), SystemMode::edge_induced_k_edge, opt), Error);
}

TEST_CASE("oracles agree with brute force on random graphs") {
  Rng rng(2024);
  for (auto mode : kModes) {
    for (std::size_t k : {1, 2}) {
      const bool edges = is_edge_ground(mode);
      GraphShape shape{edges ? 2U : 1U, edges ? 5U : 6U, edges ? 7U : 9U, 0.25};
      for (int trial = 0; trial < 12; ++trial) {
        auto g = random_graph(rng, shape);
        if (edges && g.num_edges() == 0) continue;
        auto o = oracle(g, mode, k);
        const auto n = o->ground_size();
        auto family = brute::components(n, brute::predicate(g, mode, k));
        CAPTURE(mode_name(mode));
        CAPTURE(k);
        for (const auto& y : all_subsets(n)) {
          auto want = brute::maximal_inside(family, y);
          auto got = o->l2(y);
          CHECK(got == want);
          CHECK(got.size() <= o->delta_hint(y));
          if (mode == SystemMode::connected || mode == SystemMode::global_k_edge ||
              mode == SystemMode::induced_k_edge || mode == SystemMode::edge_induced_k_edge)
            CHECK(o->delta_hint(y) <= y.count());
          else
            CHECK(o->delta_hint(y) <= binomial(y.count(), k));
        }
        auto full = ElementSet::full(n);
        for (const auto& x : family) {
          std::vector<ElementSet> containing;
          for (const auto& c : brute::maximal_inside(family, full))
            if (x.is_subset_of(c)) containing.push_back(c);
          REQUIRE(containing.size() == 1);
          CHECK(o->l1(x, full) == containing[0]);
        }
      }
    }
  }
}

TEST_CASE("every mode yields a transitive family") {
  Rng rng(99);
  for (auto mode : kModes) {
    GraphShape shape{2, 5, 8, 0.3};
    for (int trial = 0; trial < 6; ++trial) {
      auto g = random_graph(rng, shape);
      if (g.num_edges() == 0) continue;
      auto pred = brute::predicate(g, mode, 2);
      const auto n = is_edge_ground(mode) ? g.num_edges() : g.num_vertices();
      auto family = brute::components(n, pred);
      std::set<std::string> members;
      for (const auto& f : family) members.insert(f.to_string());
      for (const auto& a : family)
        for (const auto& b : family)
          for (const auto& z : family)
            if (z.is_subset_of(a & b)) CHECK(members.count((a | b).to_string()) == 1);
    }
  }
}

TEST_CASE("auxiliary edge graph is a disjoint union of cliques") {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng, GraphShape{2, 7, 12, 0.3});
    for (std::size_t k : {1, 2, 3}) CHECK(build_auxiliary_graph(g, k, Connectivity::edge).is_cluster_graph());
  }
}

TEST_CASE("induced 1-edge-connected equals connected on undirected graphs") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng, GraphShape{1, 7, 10, 0.0});
    auto a = collect_components(oracle(g, SystemMode::induced_k_edge, 1));
    auto b = collect_components(oracle(g, SystemMode::connected, 1));
    fixtures::sort_sets(a);
    fixtures::sort_sets(b);
    CHECK(a == b);
  }
}
