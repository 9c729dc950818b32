#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace connenum {

// Fixed-capacity bit set tagged by what it indexes, so element sets and item
// sets cannot be mixed up. Capacity is chosen once per instance.
template <class Tag>
class BitSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  static constexpr std::size_t npos = Bits::npos;

  BitSet() = default;
  explicit BitSet(std::size_t capacity) : bits_(capacity) {}
  BitSet(std::size_t capacity, std::initializer_list<std::size_t> members) : bits_(capacity) {
    for (auto m : members) bits_.set(m);
  }

  static BitSet full(std::size_t capacity) {
    BitSet s(capacity);
    s.bits_.set();
    return s;
  }
  static BitSet from_indices(std::size_t capacity, const std::vector<std::size_t>& members) {
    BitSet s(capacity);
    for (auto m : members) s.bits_.set(m);
    return s;
  }

  std::size_t capacity() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool any() const { return bits_.any(); }

  bool test(std::size_t i) const { return i < bits_.size() && bits_.test(i); }
  BitSet& set(std::size_t i) {
    bits_.set(i);
    return *this;
  }
  BitSet& reset(std::size_t i) {
    bits_.reset(i);
    return *this;
  }
  void clear() { bits_.reset(); }

  std::size_t first() const { return bits_.find_first(); }
  std::size_t next(std::size_t i) const { return bits_.find_next(i); }

  bool is_subset_of(const BitSet& o) const { return bits_.is_subset_of(o.bits_); }
  bool is_proper_subset_of(const BitSet& o) const { return bits_.is_proper_subset_of(o.bits_); }
  bool intersects(const BitSet& o) const { return bits_.intersects(o.bits_); }

  BitSet& operator&=(const BitSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  BitSet& operator-=(const BitSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  friend bool operator==(const BitSet& a, const BitSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const BitSet& a, const BitSet& b) { return a.bits_ != b.bits_; }

  // Canonical order: by minimum member, then by the remaining members in
  // ascending order. Used for deterministic output of component lists.
  friend bool canonical_less(const BitSet& a, const BitSet& b) {
    std::size_t i = a.first(), j = b.first();
    while (i != npos && j != npos) {
      if (i != j) return i < j;
      i = a.next(i);
      j = b.next(j);
    }
    return i == npos && j != npos;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (auto i = first(); i != npos; i = next(i)) out.push_back(i);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = first(); i != npos; i = next(i)) f(i);
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (auto i = first(); i != npos; i = next(i)) {
      if (sep) s += ",";
      s += std::to_string(i);
      sep = true;
    }
    return s + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const BitSet& s) { return os << s.to_string(); }

  std::size_t hash() const { return boost::hash_value(bits_); }
  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

struct ElementTag {};
struct ItemTag {};

// Subset of the ground set, indexed 0..n-1.
using ElementSet = BitSet<ElementTag>;
// Subset of the item universe [1,q]; bit 0 is never set (0 is the
// "no common item" sentinel), so capacity is q+1.
using ItemSet = BitSet<ItemTag>;

template <class Tag>
struct BitSetHash {
  std::size_t operator()(const BitSet<Tag>& s) const { return s.hash(); }
};

}  // namespace connenum
