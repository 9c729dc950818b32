#include "connenum/flow.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "connenum/core.hpp"

namespace connenum {
namespace {

// Blocking-flow max flow on integer capacities.
class Dinic {
 public:
  explicit Dinic(std::size_t nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, Weight cap) {
    if (cap <= 0) return;
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  // Stops as soon as the flow value reaches limit.
  Weight run(std::size_t s, std::size_t t, Weight limit) {
    Weight flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::copy(head_.begin(), head_.end(), it_.begin());
      while (flow < limit) {
        Weight f = dfs(s, t, limit - flow);
        if (f == 0) break;
        flow += f;
      }
    }
    return flow;
  }

  std::vector<char> reachable(std::size_t s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    Weight cap;
    int next;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Weight dfs(std::size_t u, std::size_t t, Weight pushed) {
    if (u == t) return pushed;
    for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
      auto& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      Weight f = dfs(arc.to, t, std::min(pushed, arc.cap));
      if (f > 0) {
        arc.cap -= f;
        arcs_[a ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

Weight scaled(const Coef& c, Weight scale) {
  auto v = c * scale;
  assert(v.denominator() == 1);
  return v.numerator();
}

}  // namespace

bool is_monotone(const EdgeCoefficients& c, bool directed) {
  const Coef one{1}, zero{0};
  if (c.beta < zero) return false;
  if (!(one >= c.alpha)) return false;
  if (directed) {
    return c.alpha >= c.alpha_plus && c.alpha_plus >= c.beta && c.alpha >= c.alpha_minus &&
           c.alpha_minus >= c.beta;
  }
  return c.alpha >= c.alpha_bar && c.alpha_bar >= c.beta;
}

MetaWeightSystem::MetaWeightSystem(MixedGraph graph, Params p)
    : graph_(std::move(graph)), k_(p.k), ground_(std::move(p.ground)) {
  const auto n = graph_.num_vertices();
  const auto m = graph_.num_edges();
  if (p.vertex_weight.size() != n || p.vertex_beta.size() != n) throw Error("vertex parameter size mismatch");
  if (p.edge_weight.size() != m || p.edge_coef.size() != m) throw Error("edge parameter size mismatch");
  if (ground_.capacity() != graph_.num_atoms()) throw Error("ground set capacity must be n+m");
  if (k_ < 0) throw Error("threshold k must be non-negative");
  for (auto w : p.vertex_weight)
    if (w < 0) throw Error("negative vertex weight");
  for (auto w : p.edge_weight)
    if (w < 0) throw Error("negative edge weight");
  for (std::size_t e = 0; e < m; ++e)
    if (!is_monotone(p.edge_coef[e], graph_.edge(e).directed))
      throw Error("coefficients of edge " + std::to_string(e) + " are not monotone");
  for (const auto& b : p.vertex_beta)
    if (b < Coef{0} || b > Coef{1}) throw Error("vertex beta outside [0,1]");

  Weight lcm = 1;
  auto fold = [&](const Coef& c) { lcm = std::lcm(lcm, c.denominator()); };
  for (const auto& c : p.edge_coef) {
    fold(c.alpha);
    fold(c.alpha_bar);
    fold(c.alpha_plus);
    fold(c.alpha_minus);
    fold(c.beta);
  }
  for (const auto& b : p.vertex_beta) fold(b);
  scale_ = lcm;

  vertex_weight_ = std::move(p.vertex_weight);
  edge_weight_ = std::move(p.edge_weight);
  edge_coef_.reserve(m);
  for (const auto& c : p.edge_coef)
    edge_coef_.push_back({scaled(c.alpha, scale_), scaled(c.alpha_bar, scale_), scaled(c.alpha_plus, scale_),
                          scaled(c.alpha_minus, scale_), scaled(c.beta, scale_)});
  vertex_beta_.reserve(n);
  for (const auto& b : p.vertex_beta) vertex_beta_.push_back(scaled(b, scale_));
}

MetaWeightSystem MetaWeightSystem::uniform(MixedGraph graph, Weight vertex_weight, Weight edge_weight,
                                           const EdgeCoefficients& coef, Coef vertex_beta, Weight k,
                                           AtomSet ground) {
  Params p;
  p.vertex_weight.assign(graph.num_vertices(), vertex_weight);
  p.vertex_beta.assign(graph.num_vertices(), vertex_beta);
  p.edge_weight.assign(graph.num_edges(), edge_weight);
  p.edge_coef.assign(graph.num_edges(), coef);
  p.k = k;
  p.ground = std::move(ground);
  return MetaWeightSystem(std::move(graph), std::move(p));
}

Weight MetaWeightSystem::vertex_case_weight(const VertexSet& vx, std::size_t v) const {
  return vx.test(v) ? vertex_weight_[v] * scale_ : vertex_beta_[v] * vertex_weight_[v];
}

Weight MetaWeightSystem::edge_case_weight(const AtomSet& x, const VertexSet& vx, std::size_t e) const {
  const auto& edge = graph_.edge(e);
  const auto w = edge_weight_[e];
  const auto& c = edge_coef_[e];
  if (x.test(graph_.edge_atom(e))) return w * scale_;
  const bool u_in = vx.test(edge.u);
  const bool v_in = vx.test(edge.v);
  if (u_in && v_in) return c.alpha * w;
  if (!u_in && !v_in) return c.beta * w;
  if (!edge.directed) return c.alpha_bar * w;
  return u_in ? c.alpha_plus * w : c.alpha_minus * w;
}

Weight MetaWeightSystem::induced_weight(const AtomSet& x, std::size_t atom) const {
  auto vx = graph_.vertices_of(x);
  if (graph_.is_vertex_atom(atom)) return vertex_case_weight(vx, atom);
  return edge_case_weight(x, vx, atom - graph_.num_vertices());
}

std::vector<Weight> MetaWeightSystem::induced_weights(const AtomSet& x) const {
  auto vx = graph_.vertices_of(x);
  const auto n = graph_.num_vertices();
  std::vector<Weight> w(graph_.num_atoms());
  for (std::size_t v = 0; v < n; ++v) w[v] = vertex_case_weight(vx, v);
  for (std::size_t e = 0; e < graph_.num_edges(); ++e) w[n + e] = edge_case_weight(x, vx, e);
  return w;
}

Weight MetaWeightSystem::vertex_mass(const AtomSet& x) const {
  Weight total = 0;
  graph_.vertices_of(x).for_each([&](std::size_t v) { total += vertex_weight_[v] * scale_; });
  return total;
}

Weight MetaWeightSystem::cut_weight(const AtomSet& x, const VertexSet& source_side,
                                    const VertexSet& sink_side) const {
  auto w = induced_weights(x);
  Weight total = 0;
  for (std::size_t v = 0; v < graph_.num_vertices(); ++v)
    if (!source_side.test(v) && !sink_side.test(v)) total += w[v];
  for (std::size_t e = 0; e < graph_.num_edges(); ++e) {
    const auto& edge = graph_.edge(e);
    bool forward = source_side.test(edge.u) && sink_side.test(edge.v);
    bool backward = source_side.test(edge.v) && sink_side.test(edge.u);
    if (forward || (!edge.directed && backward)) total += w[graph_.num_vertices() + e];
  }
  return total;
}

// Split network: vertex v becomes v_in = 2v -> v_out = 2v+1 with capacity
// omega(v), except s and t which are left unsplit. With a terminal list, an
// extra node 2n replaces s: it feeds v_in of each listed vertex with
// super_cap, or with reverse set it drains v_out of each instead and replaces
// t, the flow then starting at t.
Weight MetaWeightSystem::max_flow(const std::vector<Weight>& w, std::size_t s, std::size_t t, Weight limit,
                                  const std::vector<std::size_t>* super_sources, Weight super_cap,
                                  std::vector<char>* reach, bool reverse) const {
  const auto n = graph_.num_vertices();
  Weight inf = 1;
  for (auto x : w) inf += x;
  if (super_sources) inf += super_cap * static_cast<Weight>(super_sources->size());

  Dinic net(2 * n + 1);
  for (std::size_t v = 0; v < n; ++v) {
    bool unsplit = v == t || (!super_sources && v == s);
    net.add_arc(2 * v, 2 * v + 1, unsplit ? inf : w[v]);
  }
  for (std::size_t e = 0; e < graph_.num_edges(); ++e) {
    const auto& edge = graph_.edge(e);
    auto cap = w[n + e];
    net.add_arc(2 * edge.u + 1, 2 * edge.v, cap);
    if (!edge.directed) net.add_arc(2 * edge.v + 1, 2 * edge.u, cap);
  }
  std::size_t source = 2 * s;
  std::size_t sink = 2 * t + 1;
  if (super_sources && reverse) {
    source = 2 * t;
    sink = 2 * n;
    for (auto u : *super_sources) net.add_arc(2 * u + 1, sink, super_cap);
  } else if (super_sources) {
    source = 2 * n;
    for (auto u : *super_sources) net.add_arc(source, 2 * u, super_cap);
  }
  auto flow = net.run(source, sink, limit);
  if (reach) *reach = net.reachable(source);
  return flow;
}

Weight MetaWeightSystem::min_cut_value(std::size_t s, std::size_t t, const AtomSet& x, CutCertificate* cert) const {
  const auto n = graph_.num_vertices();
  if (s >= n || t >= n) throw Error("min_cut_value: vertex out of range");
  if (s == t) throw Error("min_cut_value: s and t must differ");
  auto w = induced_weights(x);
  std::vector<char> reach;
  auto flow = max_flow(w, s, t, std::numeric_limits<Weight>::max(), nullptr, 0, cert ? &reach : nullptr, false);
  if (cert) {
    cert->source_side = VertexSet(n);
    cert->sink_side = VertexSet(n);
    cert->removed = VertexSet(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (!reach[2 * v])
        cert->sink_side.set(v);
      else if (reach[2 * v + 1])
        cert->source_side.set(v);
      else
        cert->removed.set(v);
    }
    cert->value = cut_weight(x, cert->source_side, cert->sink_side);
  }
  return flow;
}

bool MetaWeightSystem::cut_at_least(std::size_t s, std::size_t t, const AtomSet& x, Weight threshold) const {
  if (s == t) throw Error("cut_at_least: s and t must differ");
  if (threshold <= 0) return true;
  auto w = induced_weights(x);
  return max_flow(w, s, t, threshold, nullptr, 0, nullptr, false) >= threshold;
}

bool MetaWeightSystem::exists_weak_vertex(const AtomSet& x, std::size_t t, const AtomSet& y,
                                          Weight threshold) const {
  assert(x.is_subset_of(y));
  if (threshold <= 0) return false;
  auto vx = graph_.vertices_of(x);
  assert(!vx.test(t));
  auto w = induced_weights(y);
  auto sources = vx.members();
  if (max_flow(w, t, t, threshold, &sources, threshold, nullptr, false) < threshold) return true;
  // With arcs the cut may only separate in the other direction.
  return graph_.has_arcs() && max_flow(w, t, t, threshold, &sources, threshold, nullptr, true) < threshold;
}

bool MetaWeightSystem::is_k_connected(const AtomSet& x) const {
  auto vs = graph_.vertices_of(x).members();
  if (vs.size() <= 1) return true;
  const auto thr = threshold();
  if (thr <= 0) return true;
  const bool symmetric = !graph_.has_arcs();
  auto w = induced_weights(x);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j || (symmetric && j < i)) continue;
      if (max_flow(w, vs[i], vs[j], thr, nullptr, 0, nullptr, false) < thr) return false;
    }
  }
  return true;
}

bool MetaWeightSystem::is_member(const AtomSet& x) const {
  if (x.empty() || !x.is_subset_of(ground_)) return false;
  return vertex_mass(x) >= threshold() && is_k_connected(x);
}

}  // namespace connenum
