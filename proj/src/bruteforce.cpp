#include "connenum/bruteforce.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace connenum::brute {
namespace {

constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

void guard(bool ok, const std::string& what) {
  if (!ok) throw GuardError("brute force: " + what);
}

// Visits r-subsets of [0,n) as index vectors until f returns true.
template <class F>
bool any_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    if (f(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (auto j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool undirected_connected(const MixedGraph& g, const Subgraph& h) {
  auto start = h.vertices.first();
  if (start == VertexSet::npos) return false;
  VertexSet seen(g.num_vertices());
  seen.set(start);
  std::vector<std::size_t> stack{start};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto e : g.incident(u)) {
      if (!h.edges[e]) continue;
      auto w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    }
  }
  return seen == h.vertices;
}

void check_pair(const MixedGraph& g, std::size_t s, std::size_t t, const Subgraph& h) {
  guard(g.num_vertices() <= kMaxCutVertices, "cut enumeration needs n <= " + std::to_string(kMaxCutVertices));
  guard(g.num_edges() <= kMaxCutEdges, "cut enumeration needs m <= " + std::to_string(kMaxCutEdges));
  if (s == t) throw Error("brute force: s and t must differ");
  if (!h.vertices.test(s) || !h.vertices.test(t)) throw Error("brute force: s and t must lie in the subgraph");
}

// Smallest c <= cap such that removing some c candidates disconnects t from s;
// cap when none does.
std::size_t smallest_separator(const MixedGraph& g, std::size_t s, std::size_t t, const Subgraph& h,
                               const std::vector<std::size_t>& vertex_cands,
                               const std::vector<std::size_t>& edge_cands, std::size_t cap) {
  const auto nv = vertex_cands.size();
  const auto total = nv + edge_cands.size();
  for (std::size_t c = 0; c <= total && c < cap; ++c) {
    bool found = any_subset(total, c, [&](const std::vector<std::size_t>& idx) {
      auto cut = h;
      for (auto i : idx) {
        if (i < nv) {
          auto v = vertex_cands[i];
          cut.vertices.reset(v);
          for (auto e : g.incident(v)) cut.edges[e] = 0;
        } else {
          cut.edges[edge_cands[i - nv]] = 0;
        }
      }
      return !reaches(g, cut, s, t);
    });
    if (found) return c;
  }
  return std::min(cap, total + 1);
}

std::vector<std::size_t> present_edges(const Subgraph& h) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    if (h.edges[e]) out.push_back(e);
  return out;
}

std::size_t lambda_capped(const MixedGraph& g, std::size_t s, std::size_t t, const Subgraph& h, std::size_t cap) {
  check_pair(g, s, t, h);
  return smallest_separator(g, s, t, h, {}, present_edges(h), cap);
}

std::size_t kappa_capped(const MixedGraph& g, std::size_t s, std::size_t t, const Subgraph& h, std::size_t cap) {
  check_pair(g, s, t, h);
  std::vector<std::size_t> vs;
  h.vertices.for_each([&](std::size_t v) {
    if (v != s && v != t) vs.push_back(v);
  });
  return smallest_separator(g, s, t, h, vs, present_edges(h), cap);
}

// Every ordered pair of distinct vertices in h has capped connectivity >= k.
template <class Conn>
bool all_pairs_at_least(const MixedGraph& g, const Subgraph& h, std::size_t k, Conn&& conn) {
  auto vs = h.vertices.members();
  for (auto u : vs)
    for (auto v : vs)
      if (u != v && conn(g, u, v, h, k) < k) return false;
  return true;
}

VertexSet as_vertices(const MixedGraph& g, const ElementSet& x) {
  VertexSet out(g.num_vertices());
  x.for_each([&](std::size_t v) { out.set(v); });
  return out;
}

}  // namespace

std::vector<ElementSet> components(std::size_t n, const MembershipPredicate& pred) {
  guard(n <= kMaxComponentGround, "component enumeration needs |ground| <= " + std::to_string(kMaxComponentGround));
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet x(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) x.set(i);
    if (pred(x)) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return out;
}

std::vector<ElementSet> maximal_inside(const std::vector<ElementSet>& family, const ElementSet& y) {
  std::vector<ElementSet> out;
  for (const auto& x : family) {
    if (!x.is_subset_of(y)) continue;
    bool maximal = std::none_of(family.begin(), family.end(), [&](const ElementSet& z) {
      return z.is_subset_of(y) && x.is_proper_subset_of(z);
    });
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return out;
}

std::vector<SolutionRecord> solutions(const Instance& inst, const MembershipPredicate& pred) {
  guard(inst.n <= kMaxSolutionGround, "solution enumeration needs n <= " + std::to_string(kMaxSolutionGround));
  auto comps = components(inst.n, pred);
  std::vector<ItemSet> items;
  items.reserve(comps.size());
  for (const auto& c : comps) {
    ItemSet common = ItemSet::full(inst.q + 1);
    common.reset(0);
    c.for_each([&](std::size_t v) { common &= inst.sigma[v]; });
    items.push_back(std::move(common));
  }
  std::vector<SolutionRecord> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < comps.size() && ok; ++j) {
      if (comps[i].is_proper_subset_of(comps[j]) && !items[j].is_proper_subset_of(items[i])) ok = false;
    }
    if (!ok || !inst.positive(comps[i])) continue;
    auto k = items[i].first();
    out.push_back(SolutionRecord{comps[i], items[i], k == ItemSet::npos ? 0 : k});
  }
  return out;
}

Subgraph whole(const MixedGraph& g) {
  return Subgraph{VertexSet::full(g.num_vertices()), std::vector<char>(g.num_edges(), 1)};
}

Subgraph induced(const MixedGraph& g, const VertexSet& x) {
  Subgraph h{x, std::vector<char>(g.num_edges(), 0)};
  for (std::size_t e = 0; e < g.num_edges(); ++e) h.edges[e] = x.test(g.edge(e).u) && x.test(g.edge(e).v);
  return h;
}

Subgraph edge_induced(const MixedGraph& g, const std::vector<std::size_t>& f) {
  Subgraph h{VertexSet(g.num_vertices()), std::vector<char>(g.num_edges(), 0)};
  for (auto e : f) {
    h.edges[e] = 1;
    h.vertices.set(g.edge(e).u);
    h.vertices.set(g.edge(e).v);
  }
  return h;
}

bool reaches(const MixedGraph& g, const Subgraph& h, std::size_t s, std::size_t t) {
  if (!h.vertices.test(s) || !h.vertices.test(t)) return false;
  VertexSet seen(g.num_vertices());
  seen.set(s);
  std::vector<std::size_t> stack{s};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    if (u == t) return true;
    for (auto e : g.incident(u)) {
      if (!h.edges[e]) continue;
      const auto& ed = g.edge(e);
      std::size_t w;
      if (ed.u == u) {
        w = ed.v;
      } else if (!ed.directed) {
        w = ed.u;
      } else {
        continue;
      }
      if (h.vertices.test(w) && !seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::size_t lambda(const MixedGraph& g, std::size_t s, std::size_t t, const Subgraph& h) {
  return lambda_capped(g, s, t, h, kNoCap);
}

std::size_t kappa(const MixedGraph& g, std::size_t s, std::size_t t, const Subgraph& h) {
  return kappa_capped(g, s, t, h, kNoCap);
}

std::size_t lambda(const MixedGraph& g, std::size_t s, std::size_t t) { return lambda(g, s, t, whole(g)); }
std::size_t kappa(const MixedGraph& g, std::size_t s, std::size_t t) { return kappa(g, s, t, whole(g)); }

Weight mu(const MetaWeightSystem& sys, std::size_t s, std::size_t t, const AtomSet& x) {
  const auto n = sys.graph().num_vertices();
  guard(n <= 10, "partition enumeration needs n <= 10");
  if (s == t) throw Error("brute force: s and t must differ");
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < n; ++v)
    if (v != s && v != t) free.push_back(v);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < free.size(); ++i) combos *= 3;
  Weight best = std::numeric_limits<Weight>::max();
  for (std::size_t code = 0; code < combos; ++code) {
    VertexSet src(n), snk(n);
    src.set(s);
    snk.set(t);
    auto c = code;
    for (auto v : free) {
      auto side = c % 3;
      c /= 3;
      if (side == 0) src.set(v);
      if (side == 1) snk.set(v);
    }
    best = std::min(best, sys.cut_weight(x, src, snk));
  }
  return best;
}

bool member(const MixedGraph& g, SystemMode mode, std::size_t k, const ElementSet& x) {
  if (x.empty()) return false;
  if (mode == SystemMode::edge_induced_k_edge || mode == SystemMode::edge_induced_k_vertex) {
    auto h = edge_induced(g, x.members());
    if (mode == SystemMode::edge_induced_k_vertex && h.vertices.count() < k) return false;
    if (mode == SystemMode::edge_induced_k_edge) return all_pairs_at_least(g, h, k, lambda_capped);
    return all_pairs_at_least(g, h, k, kappa_capped);
  }
  auto vs = as_vertices(g, x);
  switch (mode) {
    case SystemMode::connected: return undirected_connected(g, induced(g, vs));
    case SystemMode::global_k_edge: {
      auto h = whole(g);
      for (auto u : vs.members())
        for (auto v : vs.members())
          if (u != v && lambda_capped(g, u, v, h, k) < k) return false;
      return true;
    }
    case SystemMode::global_k_vertex: {
      if (vs.count() < k) return false;
      auto h = whole(g);
      for (auto u : vs.members())
        for (auto v : vs.members())
          if (u != v && kappa_capped(g, u, v, h, k) < k) return false;
      return true;
    }
    case SystemMode::induced_k_edge: return all_pairs_at_least(g, induced(g, vs), k, lambda_capped);
    case SystemMode::induced_k_vertex:
      return vs.count() >= k && all_pairs_at_least(g, induced(g, vs), k, kappa_capped);
    default: break;
  }
  throw Error("brute force: unknown mode");
}

MembershipPredicate predicate(const MixedGraph& g, SystemMode mode, std::size_t k) {
  if (mode == SystemMode::global_k_edge || mode == SystemMode::global_k_vertex) {
    // Pairwise values in G do not depend on X; tabulate them once.
    const auto n = g.num_vertices();
    auto h = whole(g);
    std::vector<std::vector<char>> ok(n, std::vector<char>(n, 1));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v)
          ok[u][v] = (mode == SystemMode::global_k_edge ? lambda_capped(g, u, v, h, k) : kappa_capped(g, u, v, h, k)) >= k;
    bool vertex = mode == SystemMode::global_k_vertex;
    return [ok, vertex, k](const ElementSet& x) {
      if (x.empty() || (vertex && x.count() < k)) return false;
      auto vs = x.members();
      for (auto u : vs)
        for (auto v : vs)
          if (u != v && !ok[u][v]) return false;
      return true;
    };
  }
  return [g, mode, k](const ElementSet& x) { return member(g, mode, k, x); };
}

}  // namespace connenum::brute
