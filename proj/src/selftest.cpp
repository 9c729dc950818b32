#include <algorithm>

#include "connenum/bruteforce.hpp"
#include "connenum/cli.hpp"
#include "connenum/random.hpp"

namespace connenum::cli {
namespace {

bool by_elements(const SolutionRecord& a, const SolutionRecord& b) { return canonical_less(a.elements, b.elements); }

bool same_solutions(std::vector<SolutionRecord> got, std::vector<SolutionRecord> want) {
  std::sort(got.begin(), got.end(), by_elements);
  std::sort(want.begin(), want.end(), by_elements);
  return got == want;
}

bool check_solutions(const MixedGraph& g, const std::vector<std::vector<std::size_t>>& items, std::size_t q,
                     SystemMode mode, std::size_t k) {
  SystemOptions opt;
  opt.k = k;
  auto inst = connector_instance(g, items, q, mode, opt);
  EnumStats stats;
  auto got = collect_solutions(inst, &stats);
  auto want = brute::solutions(inst, brute::predicate(g, mode, k));
  return same_solutions(got, want) && stats.max_descendants_gap <= 3 && stats.depth_bound_violations == 0;
}

bool check_components(const MixedGraph& g, SystemMode mode, std::size_t k) {
  SystemOptions opt;
  opt.k = k;
  auto oracle = make_oracle(g, mode, opt);
  EnumStats stats;
  auto got = collect_components(oracle, nullptr, &stats);
  std::sort(got.begin(), got.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  auto want = brute::components(oracle->ground_size(), brute::predicate(g, mode, k));
  return got == want && stats.max_descendants_gap <= 3 && stats.depth_bound_violations == 0;
}

// mu under the global presets against removal-set counts. A vertex weight
// above m makes vertex removal useless, so the edge preset yields lambda.
bool check_flow(const MixedGraph& g) {
  const auto n = g.num_vertices();
  if (n < 2) return true;
  const auto big = static_cast<std::size_t>(g.num_edges() + 1);
  auto edge_sys = global_connectivity_system(g, big, Connectivity::edge);
  auto vertex_sys = global_connectivity_system(g, 1, Connectivity::vertex);
  const auto all = g.all_vertex_atoms();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      if (edge_sys.min_cut_value(s, t, all) != static_cast<Weight>(brute::lambda(g, s, t))) return false;
      if (vertex_sys.min_cut_value(s, t, all) != static_cast<Weight>(brute::kappa(g, s, t))) return false;
    }
  }
  return true;
}

struct Suite {
  const char* name;
  std::size_t passed = 0;
  std::size_t run = 0;
  void record(bool ok) {
    ++run;
    if (ok) ++passed;
  }
};

}  // namespace

bool selftest(const SelftestOptions& opt, std::ostream& out) {
  Rng rng(opt.seed);
  const bool edge_ground = is_edge_ground(opt.mode);
  const bool vertex_conn = is_vertex_connectivity(opt.mode);
  GraphShape shape;
  shape.min_n = edge_ground ? 2 : 1;
  shape.max_n = vertex_conn ? 6 : 7;
  shape.max_m = edge_ground ? 9 : 10;
  shape.arc_probability = 0.25;
  std::uniform_int_distribution<std::size_t> pick_q(1, 4);

  Suite sols{"solutions"}, comps{"components"}, flow{"flow"};
  auto check_graph = [&](const MixedGraph& g, const std::vector<std::vector<std::size_t>>& items, std::size_t q) {
    if (!edge_ground || g.num_edges() > 0) {
      sols.record(check_solutions(g, items, q, opt.mode, opt.k));
      comps.record(check_components(g, opt.mode, opt.k));
    }
    flow.record(check_flow(g));
  };

  if (opt.file) {
    auto file = read_graph_file(*opt.file);
    check_graph(file.graph, file.items, std::max<std::size_t>(file.max_item, 1));
  }
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    auto g = random_graph(rng, shape);
    auto q = pick_q(rng);
    auto items = random_items(rng, g.num_vertices(), q, 0.6);
    check_graph(g, items, q);
  }

  bool ok = true;
  out << "selftest mode=" << mode_name(opt.mode) << " k=" << opt.k << " seed=" << opt.seed << "\n";
  for (const auto* s : {&sols, &comps, &flow}) {
    bool pass = s->passed == s->run;
    ok = ok && pass;
    out << (pass ? "PASS " : "FAIL ") << s->name << " " << s->passed << "/" << s->run << "\n";
  }
  return ok;
}

}  // namespace connenum::cli
