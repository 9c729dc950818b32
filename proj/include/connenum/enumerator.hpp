#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "connenum/core.hpp"

namespace connenum {

struct SolutionRecord {
  ElementSet elements;
  ItemSet items;      // common item set of elements
  std::size_t k = 0;  // min item, 0 when items is empty

  friend bool operator==(const SolutionRecord& a, const SolutionRecord& b) {
    return a.elements == b.elements && a.items == b.items && a.k == b.k;
  }
};

// Counters collected while traversing. Gaps are measured between
// consecutive outputs.
struct EnumStats {
  std::size_t l1_calls = 0;
  std::size_t l2_calls = 0;
  std::size_t descendants_calls = 0;
  std::size_t volume_calls = 0;
  std::size_t outputs = 0;

  // Largest number of Descendants invocations that began between two
  // consecutive outputs of the same k-run.
  std::size_t max_descendants_gap = 0;
  // Oracle calls (l1 + l2) between consecutive outputs; the first gap runs
  // from the start of the traversal.
  std::size_t max_oracle_gap = 0;
  std::size_t oracle_calls_at_last_output = 0;

  // Largest frame depth seen, and how often |S| + d > n + 1 was observed,
  // where d is the depth of the caller that opened the frame for S.
  std::size_t max_depth = 0;
  std::size_t depth_bound_violations = 0;

  std::size_t oracle_calls() const { return l1_calls + l2_calls; }
  double mean_oracle_gap() const {
    return outputs == 0 ? 0.0 : static_cast<double>(oracle_calls_at_last_output) / static_cast<double>(outputs);
  }
};

// Family-tree operations over one instance. Oracle calls made through this
// object are counted in stats().
class FamilyTree {
 public:
  explicit FamilyTree(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  EnumStats& stats() { return stats_; }
  const EnumStats& stats() const { return stats_; }

  SolutionRecord make_record(const ElementSet& x) const;

  // Maximal components of V_<k> whose min common item is k.
  std::vector<SolutionRecord> bases(std::size_t k);

  // Lex-min minimal superset solution of a non-base s in S_k. Throws when
  // s is a base, k is out of [1,q-1], or min I(s) != k.
  SolutionRecord parent(const SolutionRecord& s, std::size_t k);

  // All children of t in S_k, in generation order (j ascending, then l2
  // order). The volume function is not applied.
  std::vector<SolutionRecord> children(const SolutionRecord& t, std::size_t k);

  ElementSet l1(const ElementSet& x, const ElementSet& y);
  std::vector<ElementSet> l2(const ElementSet& y);
  bool positive(const ElementSet& x);

 private:
  friend class SolutionCursor;

  struct ChildScan {
    std::size_t next_j = 0;
    std::size_t cur_j = 0;
    std::vector<ElementSet> candidates;
    std::size_t cand_idx = 0;
  };
  ChildScan start_children(const SolutionRecord& t, std::size_t k) const;
  std::optional<SolutionRecord> next_child(const SolutionRecord& t, std::size_t k, ChildScan& scan);
  ElementSet parent_elements(const ElementSet& s, const ItemSet& s_items, std::size_t k);

  const Instance* inst_;
  EnumStats stats_;
};

// Pull-based traversal of S_k for k in [k_first, k_last], emitting each
// rho-positive solution exactly once. Recursion is an explicit stack.
class SolutionCursor {
 public:
  SolutionCursor(const Instance& inst, std::size_t k_first, std::size_t k_last);
  explicit SolutionCursor(const Instance& inst) : SolutionCursor(inst, 0, inst.q) {}

  std::optional<SolutionRecord> next();
  const EnumStats& stats() const { return tree_.stats(); }

 private:
  struct Frame {
    SolutionRecord sol;
    std::size_t depth;
    bool output_on_pop;
    FamilyTree::ChildScan scan;
  };

  void open_frame(SolutionRecord s, std::size_t depth, bool output_on_pop);
  SolutionRecord emit(SolutionRecord s);
  void start_run(std::size_t k);

  FamilyTree tree_;
  std::size_t k_ = 0;
  std::size_t k_last_ = 0;
  bool started_ = false;
  std::vector<SolutionRecord> bases_;
  std::size_t base_idx_ = 0;
  std::vector<Frame> stack_;
  bool output_in_run_ = false;
  std::size_t descendants_since_output_ = 0;
};

using SolutionSink = std::function<void(const SolutionRecord&)>;
using ComponentSink = std::function<void(const ElementSet&)>;

EnumStats enumerate_solutions_k(const Instance& inst, std::size_t k, const SolutionSink& sink);
EnumStats enumerate_solutions(const Instance& inst, const SolutionSink& sink);
std::vector<SolutionRecord> collect_solutions(const Instance& inst, EnumStats* stats = nullptr);

// Instance over [1,n] with phi(v_i) = [1,n] \ {i+1}; its solutions are
// exactly the components of the system.
Instance component_instance(std::shared_ptr<const TransitiveSystemOracle> system,
                            std::shared_ptr<const VolumeFunction> volume = nullptr);

EnumStats enumerate_components(std::shared_ptr<const TransitiveSystemOracle> system,
                               std::shared_ptr<const VolumeFunction> volume, const ComponentSink& sink);
std::vector<ElementSet> collect_components(std::shared_ptr<const TransitiveSystemOracle> system,
                                           std::shared_ptr<const VolumeFunction> volume = nullptr,
                                           EnumStats* stats = nullptr);

}  // namespace connenum
