#include "connenum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"

namespace connenum::cli {

RunReport RunReport::from(const EnumStats& s, double seconds) {
  RunReport r;
  r.solutions = s.outputs;
  r.max_oracle_gap = s.max_oracle_gap;
  r.mean_oracle_gap = s.mean_oracle_gap();
  r.max_descendants_gap = s.max_descendants_gap;
  r.oracle_calls = s.oracle_calls();
  r.descendants_calls = s.descendants_calls;
  r.max_depth = s.max_depth;
  r.depth_bound_violations = s.depth_bound_violations;
  r.wall_seconds = seconds;
  return r;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["solutions"] = solutions;
  j["max_oracle_gap"] = max_oracle_gap;
  j["mean_oracle_gap"] = mean_oracle_gap;
  j["max_descendants_gap"] = max_descendants_gap;
  j["oracle_calls"] = oracle_calls;
  j["descendants_calls"] = descendants_calls;
  j["max_depth"] = max_depth;
  j["depth_bound_violations"] = depth_bound_violations;
  j["wall_seconds"] = wall_seconds;
  return j.dump();
}

namespace {

struct Common {
  std::string mode = "connected";
  std::size_t k = 1;
  std::size_t min_size = 1;
  bool spanning = false;
  bool stats = false;
  std::size_t core_budget = SystemOptions{}.core_budget;
  std::string file;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string format_ids(const GraphFile& f, bool edge_ground, const ElementSet& x) {
  std::vector<std::int64_t> ids;
  x.for_each([&](std::size_t i) { ids.push_back(edge_ground ? static_cast<std::int64_t>(i) : f.vertex_ids[i]); });
  std::sort(ids.begin(), ids.end());
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i]);
  }
  return s;
}

std::string format_items(const ItemSet& items) {
  if (items.empty()) return "-";
  std::string s;
  items.for_each([&](std::size_t i) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
  });
  return s;
}

std::shared_ptr<const VolumeFunction> volume_for(const Common& c, const GraphFile& f, bool edge_ground) {
  std::vector<std::shared_ptr<const VolumeFunction>> parts;
  if (c.spanning) {
    if (!edge_ground) throw UsageError("--spanning needs an edge-induced mode");
    parts.push_back(std::make_shared<SpanningVolume>(f.graph));
  }
  if (c.min_size > 1) parts.push_back(std::make_shared<SizeThreshold>(static_cast<long>(c.min_size) - 1));
  if (parts.empty()) return nullptr;
  if (parts.size() == 1) return parts.front();
  return std::make_shared<AllOf>(std::move(parts));
}

int stream(const Common& c, bool connectors, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  auto mode = parse_mode(c.mode);
  auto file = read_graph_file(c.file);
  if (file.graph.num_vertices() == 0) throw UsageError("graph has no vertices");
  const bool edge_ground = is_edge_ground(mode);
  SystemOptions opt;
  opt.k = c.k;
  opt.core_budget = c.core_budget;
  auto volume = volume_for(c, file, edge_ground);

  Instance inst;
  if (connectors) {
    if (file.max_item == 0) throw UsageError("connectors needs at least one item in the graph file");
    inst = connector_instance(file.graph, file.items, file.max_item, mode, opt, volume);
  } else {
    inst = component_instance(make_oracle(file.graph, mode, opt), volume);
  }

  SolutionCursor cursor(inst);
  while (auto s = cursor.next()) {
    out << format_ids(file, edge_ground, s->elements);
    if (connectors) out << '\t' << format_items(s->items);
    out << '\n' << std::flush;
  }
  if (c.stats) {
    std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    err << RunReport::from(cursor.stats(), wall.count()).to_json() << '\n';
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool with_file) {
  sub->add_option("--mode", c.mode, "system mode")->check(CLI::IsMember([] {
    std::vector<std::string> names;
    for (auto m : all_modes()) names.push_back(mode_name(m));
    return names;
  }()));
  sub->add_option("--k", c.k, "connectivity threshold")->check(CLI::NonNegativeNumber);
  if (with_file) {
    sub->add_option("--min-size", c.min_size, "emit only sets with at least this many elements")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--spanning", c.spanning, "emit only edge sets covering every vertex");
    sub->add_flag("--stats", c.stats, "print a JSON run report on stderr");
    sub->add_option("--max-core-budget", c.core_budget, "limit on k-subset core families")
        ->check(CLI::PositiveNumber);
    sub->add_option("file", c.file, "graph file")->required();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate connectors and components of connectivity systems on mixed graphs", "connenum"};
  app.require_subcommand(1);
  Common conn, comp, self;
  auto* c1 = app.add_subcommand("connectors", "maximal common-item components");
  add_common(c1, conn, true);
  auto* c2 = app.add_subcommand("components", "all components of the system");
  add_common(c2, comp, true);
  auto* c3 = app.add_subcommand("selftest", "randomized checks against brute force");
  add_common(c3, self, false);
  SelftestOptions st;
  std::string st_file;
  c3->add_option("--seed", st.seed, "random seed");
  c3->add_option("--trials", st.trials, "random instances per suite");
  c3->add_option("file", st_file, "optional graph file to check as well");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "connenum: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (c1->parsed()) return stream(conn, true, out, err);
    if (c2->parsed()) return stream(comp, false, out, err);
    st.mode = parse_mode(self.mode);
    st.k = self.k;
    if (!st_file.empty()) st.file = st_file;
    return selftest(st, out) ? kOk : kInternal;
  } catch (const ParseError& e) {
    err << "connenum: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardError& e) {
    err << "connenum: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "connenum: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "connenum: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace connenum::cli
