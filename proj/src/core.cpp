#include "connenum/core.hpp"

namespace connenum {

Instance make_instance(const std::vector<std::vector<std::size_t>>& items_per_element, std::size_t q,
                       std::shared_ptr<const TransitiveSystemOracle> system,
                       std::shared_ptr<const VolumeFunction> volume) {
  Instance inst;
  inst.n = items_per_element.size();
  inst.q = q;
  inst.system = std::move(system);
  inst.volume = std::move(volume);
  inst.sigma.reserve(inst.n);
  for (const auto& items : items_per_element) {
    ItemSet s(q + 1);
    for (auto i : items) {
      if (i == 0 || i > q) throw Error("item " + std::to_string(i) + " outside [1," + std::to_string(q) + "]");
      s.set(i);
    }
    inst.sigma.push_back(std::move(s));
  }
  validate(inst);
  return inst;
}

void validate(const Instance& inst) {
  if (inst.n < 1) throw Error("instance needs at least one element");
  if (inst.q < 1) throw Error("instance needs at least one item");
  if (inst.sigma.size() != inst.n) throw Error("sigma size does not match element count");
  for (const auto& s : inst.sigma) {
    if (s.capacity() != inst.q + 1) throw Error("item set capacity must be q+1");
    if (s.test(0)) throw Error("item 0 is reserved");
  }
  if (!inst.system) throw Error("instance has no system oracle");
  if (inst.system->ground_size() != inst.n) throw Error("oracle ground set size does not match n");
}

bool itemset_lex_less(const ItemSet& j, const ItemSet& k) {
  auto diff = (j - k) | (k - j);
  auto m = diff.first();
  return m != ItemSet::npos && j.test(m);
}

ItemSet common_items(const Instance& inst, const ElementSet& x) {
  auto v = x.first();
  if (v == ElementSet::npos) throw Error("common_items of an empty set");
  ItemSet out = inst.sigma[v];
  for (v = x.next(v); v != ElementSet::npos; v = x.next(v)) out &= inst.sigma[v];
  return out;
}

std::size_t min_item(const ItemSet& items) {
  auto m = items.first();
  return m == ItemSet::npos ? 0 : m;
}

ElementSet restrict_items(const Instance& inst, const ItemSet& j) {
  ItemSet real = j;
  if (real.capacity() > 0) real.reset(0);
  ElementSet out(inst.n);
  for (std::size_t v = 0; v < inst.n; ++v)
    if (real.is_subset_of(inst.sigma[v])) out.set(v);
  return out;
}

ElementSet restrict_item(const Instance& inst, std::size_t item) {
  if (item == 0) return inst.all_elements();
  ElementSet out(inst.n);
  for (std::size_t v = 0; v < inst.n; ++v)
    if (inst.sigma[v].test(item)) out.set(v);
  return out;
}

ElementSet unique_max_component(const Instance& inst, const ElementSet& x, const ElementSet& y) {
  if (x.empty()) throw Error("unique_max_component: X must be non-empty");
  if (!x.is_subset_of(y)) throw Error("unique_max_component: X must be a subset of Y");
  return inst.system->l1(x, y);
}

}  // namespace connenum
