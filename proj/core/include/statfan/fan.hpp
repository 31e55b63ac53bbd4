#ifndef STATFAN_FAN_HPP
#define STATFAN_FAN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "statfan/design.hpp"
#include "statfan/model.hpp"
#include "statfan/monomial.hpp"

namespace statfan {

/// How monomials are offered to the greedy construction.
///
/// Degree-stepped mode follows the step-by-step existence proof: all degree-q
/// candidates whose constituents are already in the model are scanned before
/// any degree-(q+1) candidate, listed preferences first, the rest in ascending
/// fallback order. Uniform mode scans monomials in plain ascending order of a
/// single monomial ordering, which reproduces the Groebner quotient basis for
/// that ordering. The two coincide whenever the order is graded.
class PriorityPolicy {
 public:
  static PriorityPolicy degree_stepped(MonomialOrder fallback);
  static PriorityPolicy degree_stepped(MonomialOrder fallback,
                                       std::map<int, std::vector<Monomial>> preferences);
  static PriorityPolicy uniform(MonomialOrder order);

  bool is_uniform() const { return uniform_; }
  const MonomialOrder& order() const { return order_; }

  /// Reorders degree-q candidates in place according to the policy.
  void arrange(int degree, std::vector<Monomial>& candidates) const;

 private:
  PriorityPolicy(bool uniform, MonomialOrder order,
                 std::map<int, std::vector<Monomial>> preferences);

  bool uniform_;
  MonomialOrder order_;
  std::map<int, std::vector<Monomial>> preferences_;
};

/// Builds one hierarchical identifiable saturated model of exactly n terms by
/// the greedy construction; always succeeds for a valid design.
Model greedy_his(const Design& d, const PriorityPolicy& policy);

enum class Provenance { greedy, subset, exhaustive, algebraic };
const char* to_string(Provenance p);

struct FanLeaf {
  Model model;
  Provenance provenance;
};

struct FanResult {
  std::vector<FanLeaf> leaves;               // sorted by canonical model order
  std::map<Provenance, std::size_t> counts;  // distinct leaves per procedure
  bool capped = false;

  std::size_t size() const { return leaves.size(); }
  bool contains(const Model& m) const;
};

/// Union with first-discoverer provenance (enum order wins); per-procedure
/// counts are summed.
FanResult merge_fans(const std::vector<FanResult>& parts);

struct FanCaps {
  std::size_t max_leaves = 1'000'000;  // branch/leaf cap for the enumerations
  std::size_t max_box = 4096;          // exhaustive: product of level counts
  std::size_t max_n = 16;              // exhaustive: model size
};

/// Every model reachable by the greedy construction, branching over all
/// maximal independent candidate choices at each degree.
FanResult enumerate_greedy_fan(const Design& d, const FanCaps& caps = {});

struct SubsetFanDetail {
  std::vector<std::size_t> indices;
  std::size_t leaf_count;
};

/// Greedy fans of all proper indeterminate subsets U with n_U = n, lifted back
/// to the full indeterminate set.
FanResult subset_fan(const Design& d, const FanCaps& caps = {},
                     std::vector<SubsetFanDetail>* detail = nullptr);

/// Exhaustive oracle: every staircase of size n inside the level box whose
/// model matrix has rank n, found by depth-first staircase growth with
/// incremental rank pruning.
FanResult enumerate_statistical_fan(const Design& d, const FanCaps& caps = {});

/// Number of order ideals of the given size in the box alpha_j <= bounds_j - 1
/// (no rank condition).
unsigned long long count_staircases(const std::vector<std::size_t>& bounds, std::size_t size);

}  // namespace statfan

#endif
