#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "connenum/bitset.hpp"

namespace connenum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input exceeds a configured size guard (brute-force limits,
// k-core budgets).
class GuardError : public Error {
 public:
  using Error::Error;
};

// Set system (V, C) given implicitly through the two maximal-component
// oracles. Implementations must be immutable after construction.
class TransitiveSystemOracle {
 public:
  virtual ~TransitiveSystemOracle() = default;

  virtual std::size_t ground_size() const = 0;

  // The maximal component Z with x ⊆ Z ⊆ y, or an empty set when none exists.
  // When x is itself a component the answer is unique.
  virtual ElementSet l1(const ElementSet& x, const ElementSet& y) const = 0;

  // All y-maximal components, without duplicates, sorted by canonical_less.
  virtual std::vector<ElementSet> l2(const ElementSet& y) const = 0;

  // Upper bound on |l2(y)|, non-increasing under taking subsets.
  virtual std::size_t delta_hint(const ElementSet& y) const = 0;
};

// Monotone set function used to prune the enumeration; only its sign matters.
class VolumeFunction {
 public:
  virtual ~VolumeFunction() = default;
  virtual bool eval_positive(const ElementSet& x) const = 0;
};

class AlwaysPositive final : public VolumeFunction {
 public:
  bool eval_positive(const ElementSet&) const override { return true; }
};

// rho(X) = |X| - p.
class SizeThreshold final : public VolumeFunction {
 public:
  explicit SizeThreshold(long p) : p_(p) {}
  bool eval_positive(const ElementSet& x) const override {
    return static_cast<long>(x.count()) - p_ > 0;
  }

 private:
  long p_;
};

// Positive iff every part is positive; monotone when the parts are.
class AllOf final : public VolumeFunction {
 public:
  explicit AllOf(std::vector<std::shared_ptr<const VolumeFunction>> parts) : parts_(std::move(parts)) {}
  bool eval_positive(const ElementSet& x) const override {
    for (const auto& p : parts_)
      if (!p->eval_positive(x)) return false;
    return true;
  }

 private:
  std::vector<std::shared_ptr<const VolumeFunction>> parts_;
};

struct Instance {
  std::size_t n = 0;
  std::size_t q = 0;
  std::vector<ItemSet> sigma;  // per element, capacity q+1
  std::shared_ptr<const TransitiveSystemOracle> system;
  std::shared_ptr<const VolumeFunction> volume;  // null means always positive

  bool positive(const ElementSet& x) const { return !volume || volume->eval_positive(x); }
  ElementSet empty_elements() const { return ElementSet(n); }
  ElementSet all_elements() const { return ElementSet::full(n); }
  ItemSet empty_items() const { return ItemSet(q + 1); }
};

// Builds and validates an instance. Item lists are 1-based.
Instance make_instance(const std::vector<std::vector<std::size_t>>& items_per_element, std::size_t q,
                       std::shared_ptr<const TransitiveSystemOracle> system,
                       std::shared_ptr<const VolumeFunction> volume = nullptr);

void validate(const Instance& inst);

// J ≺ K: the minimum of the symmetric difference lies in J.
bool itemset_lex_less(const ItemSet& j, const ItemSet& k);

// Intersection of sigma(v) over v in x. Throws on empty x.
ItemSet common_items(const Instance& inst, const ElementSet& x);

// Minimum item of a set, 0 when empty.
std::size_t min_item(const ItemSet& items);

// {v : J ⊆ sigma(v)}; the empty set and {0} both select all of V.
ElementSet restrict_items(const Instance& inst, const ItemSet& j);
ElementSet restrict_item(const Instance& inst, std::size_t item);

// C(X;Y) via l1. Requires x non-empty and x ⊆ y.
ElementSet unique_max_component(const Instance& inst, const ElementSet& x, const ElementSet& y);

}  // namespace connenum
