#include <algorithm>
#include <set>

#include "connenum/random.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace connenum;
using fixtures::items;
using fixtures::vs;

namespace {

std::vector<ElementSet> bases_of(FamilyTree& tree, std::size_t k) {
  std::vector<ElementSet> out;
  for (const auto& b : tree.bases(k)) out.push_back(b.elements);
  return out;
}

std::vector<ElementSet> run_k(const Instance& inst, std::size_t k) {
  std::vector<ElementSet> out;
  enumerate_solutions_k(inst, k, [&](const SolutionRecord& s) { out.push_back(s.elements); });
  fixtures::sort_sets(out);
  return out;
}

struct RandomCase {
  MixedGraph graph;
  Instance inst;
  std::vector<SolutionRecord> brute;
};

RandomCase random_case(Rng& rng, SystemMode mode, std::size_t k, std::size_t max_n) {
  GraphShape shape;
  shape.max_n = max_n;
  shape.max_m = 12;
  shape.arc_probability = 0.2;
  auto g = random_graph(rng, shape);
  std::uniform_int_distribution<std::size_t> pick_q(1, 5);
  auto q = pick_q(rng);
  auto its = random_items(rng, g.num_vertices(), q, 0.6);
  SystemOptions opt;
  opt.k = k;
  auto inst = connector_instance(g, its, q, mode, opt);
  auto brute = brute::solutions(inst, brute::predicate(g, mode, k));
  return RandomCase{g, inst, brute};
}

}  // namespace

TEST_CASE("bases on the worked example") {
  auto inst = fixtures::gadget_instance();
  FamilyTree tree(inst);
  CHECK(bases_of(tree, 0) == std::vector{vs(4, {0, 1, 2, 3})});
  CHECK(bases_of(tree, 1) == std::vector{vs(4, {0, 1, 2})});
  CHECK(bases_of(tree, 2).empty());
  CHECK(bases_of(tree, 3) == std::vector{vs(4, {3})});
}

TEST_CASE("parent on the worked example") {
  auto inst = fixtures::gadget_instance();
  FamilyTree tree(inst);
  CHECK(tree.parent(tree.make_record(vs(4, {0, 1})), 1).elements == vs(4, {0, 1, 2}));
  auto p = tree.parent(tree.make_record(vs(4, {0})), 1);
  CHECK(p.elements == vs(4, {0, 2}));
  CHECK(p.items == items(3, {1, 2}));
  CHECK(tree.parent(tree.make_record(vs(4, {0, 2})), 1).elements == vs(4, {0, 1, 2}));

  CHECK_THROWS_AS(tree.parent(tree.make_record(vs(4, {0, 1, 2})), 1), Error);  // a base
  CHECK_THROWS_AS(tree.parent(tree.make_record(vs(4, {0, 1})), 2), Error);     // wrong k
  CHECK_THROWS_AS(tree.parent(tree.make_record(vs(4, {3})), 3), Error);        // k = q
}

TEST_CASE("children on the worked example") {
  auto inst = fixtures::gadget_instance();
  FamilyTree tree(inst);
  auto kids = tree.children(tree.make_record(vs(4, {0, 1, 2})), 1);
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].elements == vs(4, {0, 2}));
  CHECK(kids[1].elements == vs(4, {0, 1}));
  auto k2 = tree.children(tree.make_record(vs(4, {0, 2})), 1);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].elements == vs(4, {0}));
  CHECK(tree.children(tree.make_record(vs(4, {0, 1})), 1).empty());
}

TEST_CASE("per-k enumeration on the worked example") {
  auto inst = fixtures::gadget_instance();
  CHECK(run_k(inst, 1) == std::vector{vs(4, {0}), vs(4, {0, 1}), vs(4, {0, 1, 2}), vs(4, {0, 2})});
  CHECK(run_k(inst, 2).empty());
  CHECK(run_k(inst, 3) == std::vector{vs(4, {3})});
  CHECK(run_k(inst, 0) == std::vector{vs(4, {0, 1, 2, 3})});
}

TEST_CASE("all connectors of the worked example with their item sets") {
  auto sols = collect_solutions(fixtures::gadget_instance());
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& s : sols) got.emplace(s.elements.to_string(), s.items.to_string());
  std::set<std::pair<std::string, std::string>> want{
      {"{0}", "{1,2,3}"}, {"{3}", "{3}"}, {"{0,1}", "{1,3}"}, {"{0,2}", "{1,2}"}, {"{0,1,2}", "{1}"},
      {"{0,1,2,3}", "{}"}};
  CHECK(sols.size() == 6);
  CHECK(got == want);
}

TEST_CASE("single item on a complete graph gives only V") {
  auto g = fixtures::complete(4);
  auto inst = connector_instance(g, {{1}, {1}, {1}, {1}}, 1, SystemMode::connected, {});
  auto sols = collect_solutions(inst);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].elements == vs(4, {0, 1, 2, 3}));
  CHECK(sols[0].k == 1);
}

TEST_CASE("component enumeration counts") {
  auto cis = [](const MixedGraph& g) { return make_oracle(g, SystemMode::connected, {}); };
  auto p3 = collect_components(cis(fixtures::path(3)));
  fixtures::sort_sets(p3);
  CHECK(fixtures::strings(p3) == std::vector<std::string>{"{0}", "{0,1}", "{0,1,2}", "{1}", "{1,2}", "{2}"});
  CHECK(collect_components(cis(fixtures::complete(4))).size() == 15);
  CHECK(collect_components(cis(fixtures::path(5))).size() == 15);
}

TEST_CASE("component instance gives element i every item except i+1") {
  auto inst = component_instance(make_oracle(fixtures::path(3), SystemMode::connected, {}));
  CHECK(inst.q == 3);
  CHECK(inst.sigma[0] == items(3, {2, 3}));
  CHECK(inst.sigma[1] == items(3, {1, 3}));
  CHECK(inst.sigma[2] == items(3, {1, 2}));
}

TEST_CASE("size threshold prunes exactly the small solutions") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_case(rng, SystemMode::connected, 1, 7);
    for (long p : {1L, 2L, 3L}) {
      auto inst = c.inst;
      inst.volume = std::make_shared<SizeThreshold>(p);
      std::vector<ElementSet> want;
      for (const auto& s : c.brute)
        if (static_cast<long>(s.elements.count()) > p) want.push_back(s.elements);
      fixtures::sort_sets(want);
      CHECK(fixtures::elements_of(collect_solutions(inst)) == want);
    }
  }
}

TEST_CASE("family tree laws on random instances") {
  Rng rng(5);
  for (auto mode : {SystemMode::connected, SystemMode::induced_k_edge, SystemMode::global_k_edge}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto c = random_case(rng, mode, 2, 6);
      const auto q = c.inst.q;
      FamilyTree tree(c.inst);
      CAPTURE(trial);

      // Bases at the two ends coincide with all solutions there.
      for (std::size_t k : {std::size_t{0}, q}) {
        auto got = bases_of(tree, k);
        fixtures::sort_sets(got);
        std::vector<ElementSet> want;
        for (const auto& s : c.brute)
          if (s.k == k) want.push_back(s.elements);
        fixtures::sort_sets(want);
        CHECK(got == want);
      }

      for (std::size_t k = 1; k < q; ++k) {
        auto base_sets = bases_of(tree, k);
        auto is_base = [&](const ElementSet& x) {
          return std::find(base_sets.begin(), base_sets.end(), x) != base_sets.end();
        };
        for (const auto& s : c.brute) {
          if (s.k != k) continue;
          for (const auto& child : tree.children(s, k)) CHECK(tree.parent(child, k).elements == s.elements);
          if (is_base(s.elements)) continue;

          auto p = tree.parent(s, k);
          CHECK(s.elements.is_proper_subset_of(p.elements));
          CHECK(p.k == k);
          CHECK(std::any_of(c.brute.begin(), c.brute.end(), [&](const SolutionRecord& t) { return t == p; }));
          // Lex-min over the minimal strict superset solutions.
          for (const auto& t : c.brute) {
            if (!s.elements.is_proper_subset_of(t.elements)) continue;
            bool minimal = std::none_of(c.brute.begin(), c.brute.end(), [&](const SolutionRecord& u) {
              return s.elements.is_proper_subset_of(u.elements) && u.elements.is_proper_subset_of(t.elements);
            });
            if (minimal) CHECK_FALSE(itemset_lex_less(t.items, p.items));
          }
          // Walking up reaches a base in at most n steps.
          auto cur = s;
          std::size_t steps = 0;
          while (!is_base(cur.elements) && steps <= c.inst.n) {
            cur = tree.parent(cur, k);
            ++steps;
          }
          CHECK(is_base(cur.elements));
        }
      }
    }
  }
}

TEST_CASE("cursor statistics respect the delay and depth bounds") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = random_case(rng, SystemMode::connected, 1, 8);
    SolutionCursor cursor(c.inst);
    std::size_t count = 0;
    while (cursor.next()) ++count;
    CHECK(count == c.brute.size());
    CHECK(cursor.stats().outputs == count);
    CHECK(cursor.stats().max_descendants_gap <= 3);
    CHECK(cursor.stats().depth_bound_violations == 0);
  }
}

TEST_CASE("cursor yields the first solution before finishing") {
  auto inst = fixtures::gadget_instance();
  SolutionCursor cursor(inst);
  auto first = cursor.next();
  REQUIRE(first.has_value());
  CHECK(cursor.stats().outputs == 1);
  CHECK(first->elements == vs(4, {0, 1, 2, 3}));
}
