#include "connenum/graph_systems.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "connenum/random.hpp"

namespace connenum {
namespace {

EdgeCoefficients coefficients(Coef alpha, Coef side, Coef beta) {
  return EdgeCoefficients{alpha, side, side, side, beta};
}

Weight vertex_weight_for(std::size_t k, Connectivity c) {
  return c == Connectivity::edge ? static_cast<Weight>(k) : 1;
}

void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
}

// Calls f on every size-r subset of items, in lexicographic order.
template <class F>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t r, std::size_t capacity, F&& f) {
  if (r > items.size()) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    ElementSet s(capacity);
    for (auto i : idx) s.set(items[i]);
    f(s);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == items.size() - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (auto j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_core_budget(std::size_t y_size, std::size_t r, const SystemOptions& opt) {
  auto count = binomial(y_size, r);
  if (count > opt.core_budget)
    throw GuardError("k-core family of size " + std::to_string(count) + " exceeds budget " +
                     std::to_string(opt.core_budget));
}

}  // namespace

SystemMode parse_mode(std::string_view name) {
  for (auto m : all_modes())
    if (mode_name(m) == name) return m;
  throw Error("unknown mode '" + std::string(name) + "'");
}

std::string mode_name(SystemMode mode) {
  switch (mode) {
    case SystemMode::connected: return "connected";
    case SystemMode::global_k_edge: return "global-k-edge";
    case SystemMode::global_k_vertex: return "global-k-vertex";
    case SystemMode::induced_k_edge: return "induced-k-edge";
    case SystemMode::induced_k_vertex: return "induced-k-vertex";
    case SystemMode::edge_induced_k_edge: return "edge-induced-k-edge";
    case SystemMode::edge_induced_k_vertex: return "edge-induced-k-vertex";
  }
  return "?";
}

std::vector<SystemMode> all_modes() {
  return {SystemMode::connected,        SystemMode::global_k_edge,       SystemMode::global_k_vertex,
          SystemMode::induced_k_edge,   SystemMode::induced_k_vertex,    SystemMode::edge_induced_k_edge,
          SystemMode::edge_induced_k_vertex};
}

bool is_edge_ground(SystemMode mode) {
  return mode == SystemMode::edge_induced_k_edge || mode == SystemMode::edge_induced_k_vertex;
}

bool is_vertex_connectivity(SystemMode mode) {
  return mode == SystemMode::global_k_vertex || mode == SystemMode::induced_k_vertex ||
         mode == SystemMode::edge_induced_k_vertex;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    auto num = n - k + i;
    if (r > std::numeric_limits<std::size_t>::max() / num) return std::numeric_limits<std::size_t>::max();
    r = r * num / i;
  }
  return r;
}

MetaWeightSystem global_connectivity_system(const MixedGraph& g, std::size_t k, Connectivity c) {
  return MetaWeightSystem::uniform(g, vertex_weight_for(k, c), 1, coefficients(1, 1, 1), 1, static_cast<Weight>(k),
                                   g.all_vertex_atoms());
}

MetaWeightSystem induced_connectivity_system(const MixedGraph& g, std::size_t k, Connectivity c) {
  return MetaWeightSystem::uniform(g, vertex_weight_for(k, c), 1, coefficients(1, 0, 0), 0, static_cast<Weight>(k),
                                   g.all_vertex_atoms());
}

MetaWeightSystem edge_induced_system(const MixedGraph& g, std::size_t k, Connectivity c) {
  return MetaWeightSystem::uniform(g, vertex_weight_for(k, c), 1, coefficients(0, 0, 0), 0, static_cast<Weight>(k),
                                   g.all_edge_atoms());
}

AtomSet maximal_in(const MetaWeightSystem& sys, const AtomSet& x, const AtomSet& y) {
  if (x.empty()) throw Error("maximal_in: X must be non-empty");
  if (!x.is_subset_of(y) || !y.is_subset_of(sys.ground())) throw Error("maximal_in: need X ⊆ Y ⊆ Lambda");
  const auto thr = sys.threshold();
  if (sys.vertex_mass(x) < thr) throw Error("maximal_in: omega_X(V(X)) is below k");

  const auto& g = sys.graph();
  const auto vx = g.vertices_of(x).members();
  auto pairs_hold = [&](const AtomSet& within) {
    for (auto u : vx)
      for (auto v : vx)
        if (u != v && !sys.cut_at_least(u, v, within, thr)) return false;
    return true;
  };
  // Pairwise mu only shrinks with Y, so a failure here is final.
  if (!pairs_hold(y)) return g.empty_atoms();

  const auto x_vertices = g.vertices_of(x);
  AtomSet cur = y;
  for (;;) {
    auto outside = g.vertices_of(cur) - x_vertices;
    VertexSet weak(g.num_vertices());
    outside.for_each([&](std::size_t t) {
      if (sys.exists_weak_vertex(x, t, cur, thr)) weak.set(t);
    });
    if (weak.empty()) break;
    auto removable = cur - x;
    removable.for_each([&](std::size_t a) {
      if (g.is_vertex_atom(a)) {
        if (weak.test(a)) cur.reset(a);
      } else {
        const auto& e = g.edge(a - g.num_vertices());
        if (weak.test(e.u) || weak.test(e.v)) cur.reset(a);
      }
    });
  }
  return pairs_hold(cur) ? cur : g.empty_atoms();
}

// ---------------------------------------------------------------------------

CisOracle::CisOracle(const MixedGraph& g) {
  const auto n = g.num_vertices();
  adj_.assign(n, ElementSet(n));
  for (const auto& e : g.edges()) {
    adj_[e.u].set(e.v);
    adj_[e.v].set(e.u);
  }
}

ElementSet CisOracle::component_of(std::size_t v, const ElementSet& y) const {
  ElementSet comp(adj_.size());
  comp.set(v);
  auto frontier = comp;
  while (frontier.any()) {
    ElementSet next(adj_.size());
    frontier.for_each([&](std::size_t u) { next |= adj_[u]; });
    next &= y;
    next -= comp;
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

ElementSet CisOracle::l1(const ElementSet& x, const ElementSet& y) const {
  auto v = x.first();
  if (v == ElementSet::npos || !x.is_subset_of(y)) return ElementSet(adj_.size());
  auto comp = component_of(v, y);
  return x.is_subset_of(comp) ? comp : ElementSet(adj_.size());
}

std::vector<ElementSet> CisOracle::l2(const ElementSet& y) const {
  std::vector<ElementSet> out;
  auto rest = y;
  while (rest.any()) {
    auto comp = component_of(rest.first(), y);
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------

bool AuxiliaryGraph::is_clique(const ElementSet& x) const {
  for (auto u = x.first(); u != ElementSet::npos; u = x.next(u)) {
    auto others = x;
    others.reset(u);
    if (!others.is_subset_of(adj[u])) return false;
  }
  return true;
}

bool AuxiliaryGraph::is_cluster_graph() const {
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (auto v = adj[u].first(); v != ElementSet::npos; v = adj[u].next(v))
      for (auto w = adj[v].first(); w != ElementSet::npos; w = adj[v].next(w))
        if (w != u && !adj[u].test(w)) return false;
  return true;
}

AuxiliaryGraph build_auxiliary_graph(const MixedGraph& g, std::size_t k, Connectivity c) {
  const auto n = g.num_vertices();
  auto sys = global_connectivity_system(g, k, c);
  AuxiliaryGraph aux{std::vector<ElementSet>(n, ElementSet(n))};
  const auto all = g.all_vertex_atoms();
  const auto thr = sys.threshold();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (sys.cut_at_least(u, v, all, thr) && sys.cut_at_least(v, u, all, thr)) {
        aux.adj[u].set(v);
        aux.adj[v].set(u);
      }
    }
  }
  return aux;
}

GlobalOracle::GlobalOracle(const MixedGraph& g, Connectivity c, const SystemOptions& opt)
    : conn_(c), opt_(opt), aux_(build_auxiliary_graph(g, opt.k, c)) {
  if (c == Connectivity::vertex && opt.k > opt.max_vertex_k)
    throw GuardError("k=" + std::to_string(opt.k) + " exceeds the k-vertex guard " + std::to_string(opt.max_vertex_k));
}

ElementSet GlobalOracle::clique_class(std::size_t v, const ElementSet& y) const {
  auto cls = aux_.adj[v] & y;
  cls.set(v);
  return cls;
}

ElementSet GlobalOracle::grow_clique(const ElementSet& x, const ElementSet& y) const {
  auto clique = x;
  auto common = y - x;
  x.for_each([&](std::size_t u) { common &= aux_.adj[u]; });
  while (common.any()) {
    auto v = common.first();
    clique.set(v);
    common &= aux_.adj[v];
    common.reset(v);
  }
  return clique;
}

ElementSet GlobalOracle::l1(const ElementSet& x, const ElementSet& y) const {
  const auto n = aux_.size();
  if (x.empty() || !x.is_subset_of(y)) return ElementSet(n);
  if (conn_ == Connectivity::edge) {
    auto cls = clique_class(x.first(), y);
    return x.is_subset_of(cls) ? cls : ElementSet(n);
  }
  if (x.count() >= std::max<std::size_t>(opt_.k, 1)) {
    if (!aux_.is_clique(x)) return ElementSet(n);
    return grow_clique(x, y);
  }
  // x is below the weight threshold, so the maximal component containing it
  // need not be unique; report the first one in canonical order.
  for (auto& c : l2(y))
    if (x.is_subset_of(c)) return c;
  return ElementSet(n);
}

std::vector<ElementSet> GlobalOracle::l2(const ElementSet& y) const {
  std::vector<ElementSet> out;
  if (conn_ == Connectivity::edge) {
    auto rest = y;
    while (rest.any()) {
      auto cls = clique_class(rest.first(), y);
      rest -= cls;
      out.push_back(std::move(cls));
    }
    return out;
  }
  const auto r = std::max<std::size_t>(opt_.k, 1);
  check_core_budget(y.count(), r, opt_);
  std::unordered_set<ElementSet, BitSetHash<ElementTag>> seen;
  for_each_subset(y.members(), r, aux_.size(), [&](const ElementSet& z) {
    for (const auto& c : out)
      if (z.is_subset_of(c)) return;
    if (!aux_.is_clique(z)) return;
    auto c = grow_clique(z, y);
    if (seen.insert(c).second) out.push_back(std::move(c));
  });
  sort_canonical(out);
  return out;
}

std::size_t GlobalOracle::delta_hint(const ElementSet& y) const {
  if (conn_ == Connectivity::edge) return y.count();
  return binomial(y.count(), std::max<std::size_t>(opt_.k, 1));
}

// ---------------------------------------------------------------------------

MetaWeightOracle::MetaWeightOracle(std::shared_ptr<const MetaWeightSystem> sys, Cores cores, const SystemOptions& opt)
    : sys_(std::move(sys)), cores_(cores), opt_(opt), ground_atoms_(sys_->ground().members()) {
  if (cores_ == Cores::k_subsets && opt_.k > opt_.max_vertex_k)
    throw GuardError("k=" + std::to_string(opt_.k) + " exceeds the k-vertex guard " + std::to_string(opt_.max_vertex_k));
}

AtomSet MetaWeightOracle::to_atoms(const ElementSet& x) const {
  auto out = sys_->graph().empty_atoms();
  x.for_each([&](std::size_t i) { out.set(ground_atoms_[i]); });
  return out;
}

ElementSet MetaWeightOracle::from_atoms(const AtomSet& a) const {
  ElementSet out(ground_atoms_.size());
  for (std::size_t i = 0; i < ground_atoms_.size(); ++i)
    if (a.test(ground_atoms_[i])) out.set(i);
  return out;
}

std::size_t MetaWeightOracle::core_size() const {
  return cores_ == Cores::singletons ? 1 : std::max<std::size_t>(opt_.k, 1);
}

std::vector<ElementSet> MetaWeightOracle::k_cores(const ElementSet& y) const {
  std::vector<ElementSet> out;
  if (y.empty()) return out;
  const auto r = core_size();
  check_core_budget(y.count(), r, opt_);
  for_each_subset(y.members(), r, ground_atoms_.size(), [&](const ElementSet& z) { out.push_back(z); });
  return out;
}

ElementSet MetaWeightOracle::l1(const ElementSet& x, const ElementSet& y) const {
  if (x.empty() || !x.is_subset_of(y)) return ElementSet(ground_atoms_.size());
  auto ax = to_atoms(x);
  if (sys_->vertex_mass(ax) >= sys_->threshold()) return from_atoms(maximal_in(*sys_, ax, to_atoms(y)));
  for (auto& c : l2(y))
    if (x.is_subset_of(c)) return c;
  return ElementSet(ground_atoms_.size());
}

std::vector<ElementSet> MetaWeightOracle::l2(const ElementSet& y) const {
  std::vector<ElementSet> out;
  if (y.empty()) return out;
  const auto r = core_size();
  check_core_budget(y.count(), r, opt_);
  const auto ay = to_atoms(y);
  const auto thr = sys_->threshold();
  std::unordered_set<ElementSet, BitSetHash<ElementTag>> seen;
  for_each_subset(y.members(), r, ground_atoms_.size(), [&](const ElementSet& z) {
    for (const auto& c : out)
      if (z.is_subset_of(c)) return;
    auto az = to_atoms(z);
    if (sys_->vertex_mass(az) < thr) return;
    auto c = maximal_in(*sys_, az, ay);
    if (c.empty()) return;
    auto ec = from_atoms(c);
    if (seen.insert(ec).second) out.push_back(std::move(ec));
  });
  sort_canonical(out);
  return out;
}

std::size_t MetaWeightOracle::delta_hint(const ElementSet& y) const { return binomial(y.count(), core_size()); }

// ---------------------------------------------------------------------------

std::shared_ptr<const TransitiveSystemOracle> make_oracle(const MixedGraph& g, SystemMode mode,
                                                          const SystemOptions& opt) {
  using Cores = MetaWeightOracle::Cores;
  auto meta = [&](MetaWeightSystem sys, Cores cores) {
    return std::make_shared<MetaWeightOracle>(std::make_shared<const MetaWeightSystem>(std::move(sys)), cores, opt);
  };
  if (g.num_vertices() == 0) throw Error("graph has no vertices");
  switch (mode) {
    case SystemMode::connected: return std::make_shared<CisOracle>(g);
    case SystemMode::global_k_edge: return std::make_shared<GlobalOracle>(g, Connectivity::edge, opt);
    case SystemMode::global_k_vertex: return std::make_shared<GlobalOracle>(g, Connectivity::vertex, opt);
    case SystemMode::induced_k_edge:
      return meta(induced_connectivity_system(g, opt.k, Connectivity::edge), Cores::singletons);
    case SystemMode::induced_k_vertex:
      return meta(induced_connectivity_system(g, opt.k, Connectivity::vertex), Cores::k_subsets);
    case SystemMode::edge_induced_k_edge:
      if (g.num_edges() == 0) throw Error("edge-induced modes need at least one edge");
      return meta(edge_induced_system(g, opt.k, Connectivity::edge), Cores::singletons);
    case SystemMode::edge_induced_k_vertex:
      if (g.num_edges() == 0) throw Error("edge-induced modes need at least one edge");
      return meta(edge_induced_system(g, opt.k, Connectivity::vertex), Cores::k_subsets);
  }
  throw Error("unknown mode");
}

Instance connector_instance(const MixedGraph& g, const std::vector<std::vector<std::size_t>>& vertex_items,
                            std::size_t q, SystemMode mode, const SystemOptions& opt,
                            std::shared_ptr<const VolumeFunction> volume) {
  if (vertex_items.size() != g.num_vertices()) throw Error("item lists do not match the vertex count");
  auto oracle = make_oracle(g, mode, opt);
  if (is_edge_ground(mode)) return make_instance(edge_items(g, vertex_items), q, std::move(oracle), std::move(volume));
  return make_instance(vertex_items, q, std::move(oracle), std::move(volume));
}

bool SpanningVolume::eval_positive(const ElementSet& f) const {
  VertexSet covered(g_.num_vertices());
  f.for_each([&](std::size_t e) {
    covered.set(g_.edge(e).u);
    covered.set(g_.edge(e).v);
  });
  return covered.count() == g_.num_vertices();
}

}  // namespace connenum
