#include "connenum/enumerator.hpp"

#include <algorithm>
#include <cassert>

namespace connenum {

FamilyTree::FamilyTree(const Instance& inst) : inst_(&inst) { validate(inst); }

ElementSet FamilyTree::l1(const ElementSet& x, const ElementSet& y) {
  ++stats_.l1_calls;
  return inst_->system->l1(x, y);
}

std::vector<ElementSet> FamilyTree::l2(const ElementSet& y) {
  ++stats_.l2_calls;
  return inst_->system->l2(y);
}

bool FamilyTree::positive(const ElementSet& x) {
  ++stats_.volume_calls;
  return inst_->positive(x);
}

SolutionRecord FamilyTree::make_record(const ElementSet& x) const {
  SolutionRecord r{x, common_items(*inst_, x), 0};
  r.k = min_item(r.items);
  return r;
}

std::vector<SolutionRecord> FamilyTree::bases(std::size_t k) {
  if (k > inst_->q) throw Error("bases: k out of range");
  std::vector<SolutionRecord> out;
  auto vk = restrict_item(*inst_, k);
  if (vk.empty()) return out;
  for (auto& c : l2(vk)) {
    auto rec = make_record(c);
    if (rec.k == k) out.push_back(std::move(rec));
  }
  return out;
}

ElementSet FamilyTree::parent_elements(const ElementSet& s, const ItemSet& s_items, std::size_t k) {
  ItemSet j = inst_->empty_items();
  j.set(k);
  for (auto i = s_items.next(k); i != ItemSet::npos; i = s_items.next(i)) {
    auto trial = j;
    trial.set(i);
    auto c = l1(s, restrict_items(*inst_, trial));
    if (s.is_proper_subset_of(c)) j = std::move(trial);
  }
  return l1(s, restrict_items(*inst_, j));
}

SolutionRecord FamilyTree::parent(const SolutionRecord& s, std::size_t k) {
  if (k < 1 || k + 1 > inst_->q) throw Error("parent: k must lie in [1,q-1]");
  auto items = common_items(*inst_, s.elements);
  if (min_item(items) != k) throw Error("parent: min common item of S differs from k");
  if (!s.elements.is_proper_subset_of(l1(s.elements, restrict_item(*inst_, k))))
    throw Error("parent: S is a base and has no parent");
  return make_record(parent_elements(s.elements, items, k));
}

FamilyTree::ChildScan FamilyTree::start_children(const SolutionRecord&, std::size_t k) const {
  ChildScan scan;
  scan.next_j = k + 1;
  return scan;
}

std::optional<SolutionRecord> FamilyTree::next_child(const SolutionRecord& t, std::size_t k, ChildScan& scan) {
  const auto q = inst_->q;
  for (;;) {
    while (scan.cand_idx < scan.candidates.size()) {
      const auto& c = scan.candidates[scan.cand_idx++];
      auto items = common_items(*inst_, c);
      if (min_item(items) != k) continue;
      // j must be the smallest item above k gained over I(T)
      auto gained = items - t.items;
      auto first_gain = gained.next(k);
      if (first_gain != scan.cur_j) continue;
      if (parent_elements(c, items, k) != t.elements) continue;
      return SolutionRecord{c, std::move(items), k};
    }
    // next j in [k+1,q] \ I(T) with T ∩ V_<j> non-empty
    bool loaded = false;
    while (!loaded && scan.next_j <= q) {
      auto j = scan.next_j++;
      if (t.items.test(j)) continue;
      auto y = t.elements & restrict_item(*inst_, j);
      if (y.empty()) continue;
      scan.candidates = l2(y);
      scan.cand_idx = 0;
      scan.cur_j = j;
      loaded = true;
    }
    if (!loaded) {
      scan.candidates.clear();
      scan.cand_idx = 0;
      return std::nullopt;
    }
  }
}

std::vector<SolutionRecord> FamilyTree::children(const SolutionRecord& t, std::size_t k) {
  if (k < 1 || k + 1 > inst_->q) throw Error("children: k must lie in [1,q-1]");
  std::vector<SolutionRecord> out;
  auto scan = start_children(t, k);
  while (auto c = next_child(t, k, scan)) out.push_back(std::move(*c));
  return out;
}

// ---------------------------------------------------------------------------

SolutionCursor::SolutionCursor(const Instance& inst, std::size_t k_first, std::size_t k_last)
    : tree_(inst), k_(k_first), k_last_(std::min(k_last, inst.q)) {}

void SolutionCursor::start_run(std::size_t k) {
  bases_ = tree_.bases(k);
  base_idx_ = 0;
  output_in_run_ = false;
  descendants_since_output_ = 0;
}

void SolutionCursor::open_frame(SolutionRecord s, std::size_t depth, bool output_on_pop) {
  auto& st = tree_.stats();
  ++st.descendants_calls;
  ++descendants_since_output_;
  st.max_depth = std::max(st.max_depth, depth);
  if (s.elements.count() + (depth - 1) > tree_.instance().n + 1) ++st.depth_bound_violations;
  auto scan = tree_.start_children(s, k_);
  stack_.push_back(Frame{std::move(s), depth, output_on_pop, std::move(scan)});
}

SolutionRecord SolutionCursor::emit(SolutionRecord s) {
  auto& st = tree_.stats();
  if (output_in_run_) st.max_descendants_gap = std::max(st.max_descendants_gap, descendants_since_output_);
  output_in_run_ = true;
  descendants_since_output_ = 0;
  auto calls = st.oracle_calls();
  st.max_oracle_gap = std::max(st.max_oracle_gap, calls - st.oracle_calls_at_last_output);
  st.oracle_calls_at_last_output = calls;
  ++st.outputs;
  return s;
}

std::optional<SolutionRecord> SolutionCursor::next() {
  const auto q = tree_.instance().q;
  if (!started_) {
    started_ = true;
    if (k_ > k_last_) return std::nullopt;
    start_run(k_);
  }
  for (;;) {
    if (!stack_.empty()) {
      auto& top = stack_.back();
      std::optional<SolutionRecord> child;
      while ((child = tree_.next_child(top.sol, k_, top.scan))) {
        if (tree_.positive(child->elements)) break;
      }
      if (child) {
        const bool before = top.depth % 2 == 1;
        auto depth = top.depth + 1;
        if (before) {
          open_frame(*child, depth, false);
          return emit(std::move(*child));
        }
        open_frame(std::move(*child), depth, true);
        continue;
      }
      auto done = std::move(stack_.back());
      stack_.pop_back();
      if (done.output_on_pop) return emit(std::move(done.sol));
      continue;
    }
    if (base_idx_ < bases_.size()) {
      auto t = std::move(bases_[base_idx_++]);
      if (!tree_.positive(t.elements)) continue;
      if (k_ >= 1 && k_ + 1 <= q) open_frame(t, 2, false);
      return emit(std::move(t));
    }
    if (k_ >= k_last_) return std::nullopt;
    start_run(++k_);
  }
}

// ---------------------------------------------------------------------------

EnumStats enumerate_solutions_k(const Instance& inst, std::size_t k, const SolutionSink& sink) {
  SolutionCursor cur(inst, k, k);
  while (auto s = cur.next()) sink(*s);
  return cur.stats();
}

EnumStats enumerate_solutions(const Instance& inst, const SolutionSink& sink) {
  SolutionCursor cur(inst);
  while (auto s = cur.next()) sink(*s);
  return cur.stats();
}

std::vector<SolutionRecord> collect_solutions(const Instance& inst, EnumStats* stats) {
  std::vector<SolutionRecord> out;
  auto st = enumerate_solutions(inst, [&](const SolutionRecord& s) { out.push_back(s); });
  if (stats) *stats = st;
  return out;
}

Instance component_instance(std::shared_ptr<const TransitiveSystemOracle> system,
                            std::shared_ptr<const VolumeFunction> volume) {
  if (!system) throw Error("component_instance: no system");
  const auto n = system->ground_size();
  if (n < 1) throw Error("component_instance: empty ground set");
  Instance inst;
  inst.n = n;
  inst.q = n;
  inst.system = std::move(system);
  inst.volume = std::move(volume);
  inst.sigma.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto s = ItemSet::full(n + 1);
    s.reset(0);
    s.reset(v + 1);
    inst.sigma.push_back(std::move(s));
  }
  return inst;
}

EnumStats enumerate_components(std::shared_ptr<const TransitiveSystemOracle> system,
                               std::shared_ptr<const VolumeFunction> volume, const ComponentSink& sink) {
  auto inst = component_instance(std::move(system), std::move(volume));
  return enumerate_solutions(inst, [&](const SolutionRecord& s) { sink(s.elements); });
}

std::vector<ElementSet> collect_components(std::shared_ptr<const TransitiveSystemOracle> system,
                                           std::shared_ptr<const VolumeFunction> volume, EnumStats* stats) {
  std::vector<ElementSet> out;
  auto st = enumerate_components(std::move(system), std::move(volume),
                                 [&](const ElementSet& c) { out.push_back(c); });
  if (stats) *stats = st;
  return out;
}

}  // namespace connenum
