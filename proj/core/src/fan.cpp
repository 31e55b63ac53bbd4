#include "statfan/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "statfan/errors.hpp"
#include "statfan/matrix.hpp"

namespace statfan {

PriorityPolicy::PriorityPolicy(bool uniform, MonomialOrder order,
                               std::map<int, std::vector<Monomial>> preferences)
    : uniform_(uniform), order_(std::move(order)), preferences_(std::move(preferences)) {
  for (const auto& [degree, listed] : preferences_) {
    std::set<std::vector<int>> seen;
    for (const Monomial& m : listed) {
      if (m.degree() != degree)
        throw std::invalid_argument("priority list entry has the wrong degree");
      if (!seen.insert(m.exponents()).second)
        throw std::invalid_argument("duplicate monomial in priority list");
    }
  }
}

PriorityPolicy PriorityPolicy::degree_stepped(MonomialOrder fallback) {
  return PriorityPolicy(false, std::move(fallback), {});
}

PriorityPolicy PriorityPolicy::degree_stepped(MonomialOrder fallback,
                                              std::map<int, std::vector<Monomial>> preferences) {
  return PriorityPolicy(false, std::move(fallback), std::move(preferences));
}

PriorityPolicy PriorityPolicy::uniform(MonomialOrder order) {
  return PriorityPolicy(true, std::move(order), {});
}

void PriorityPolicy::arrange(int degree, std::vector<Monomial>& candidates) const {
  auto by_order = [this](const Monomial& a, const Monomial& b) { return order_.less(a, b); };
  auto pref = preferences_.find(degree);
  if (pref == preferences_.end()) {
    std::sort(candidates.begin(), candidates.end(), by_order);
    return;
  }
  std::vector<Monomial> arranged;
  arranged.reserve(candidates.size());
  std::vector<bool> taken(candidates.size(), false);
  for (const Monomial& listed : pref->second) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!taken[i] && candidates[i] == listed) {
        arranged.push_back(candidates[i]);
        taken[i] = true;
        break;
      }
    }
  }
  std::vector<Monomial> rest;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!taken[i]) rest.push_back(candidates[i]);
  std::sort(rest.begin(), rest.end(), by_order);
  arranged.insert(arranged.end(), rest.begin(), rest.end());
  candidates = std::move(arranged);
}

namespace {

/// Degree-q monomials all of whose constituents are already accepted.
std::vector<Monomial> admissible_candidates(std::size_t r, int degree,
                                            const std::set<std::vector<int>>& accepted) {
  std::vector<Monomial> out;
  for (Monomial& m : monomials_of_degree(r, degree)) {
    bool ok = true;
    for (std::size_t j = 0; j < r && ok; ++j) {
      if (m[j] == 0) continue;
      std::vector<int> e = m.exponents();
      --e[j];
      ok = accepted.contains(e);
    }
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

Model greedy_uniform_scan(const Design& d, const MonomialOrder& order) {
  const std::size_t r = d.arity();
  const std::size_t n = d.n();
  auto less = [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); };
  std::set<Monomial, decltype(less)> queue(less);
  std::set<std::vector<int>> enqueued;
  std::vector<Monomial> discarded;
  std::vector<Monomial> accepted;
  Eliminator elim(n);

  auto enqueue = [&](const Monomial& m) {
    if (enqueued.insert(m.exponents()).second) queue.insert(m);
  };
  enqueue(Monomial::constant(r));

  while (!queue.empty() && accepted.size() < n) {
    Monomial m = *queue.begin();
    queue.erase(queue.begin());
    bool pruned = false;
    for (const Monomial& lt : discarded) {
      if (is_constituent(lt, m)) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    if (elim.try_push(monomial_vector(d, m))) {
      accepted.push_back(m);
      for (std::size_t j = 0; j < r; ++j) enqueue(m * Monomial::unit(r, j));
    } else {
      discarded.push_back(m);
    }
  }
  if (accepted.size() != n)
    throw std::logic_error("greedy scan failed to reach a saturated model");
  return Model(r, std::move(accepted));
}

Model greedy_degree_stepped(const Design& d, const PriorityPolicy& policy) {
  const std::size_t r = d.arity();
  const std::size_t n = d.n();
  std::vector<Monomial> accepted{Monomial::constant(r)};
  std::set<std::vector<int>> accepted_set{accepted.front().exponents()};
  Eliminator elim(n);
  elim.try_push(monomial_vector(d, accepted.front()));

  // Saturation is reached by degree n-1 at the latest.
  for (int q = 1; accepted.size() < n; ++q) {
    if (q > static_cast<int>(n)) throw std::logic_error("greedy construction failed to saturate");
    std::vector<Monomial> candidates = admissible_candidates(r, q, accepted_set);
    policy.arrange(q, candidates);
    for (const Monomial& m : candidates) {
      if (accepted.size() == n) break;
      if (elim.try_push(monomial_vector(d, m))) {
        accepted.push_back(m);
        accepted_set.insert(m.exponents());
      }
    }
  }
  return Model(r, std::move(accepted));
}

}  // namespace

Model greedy_his(const Design& d, const PriorityPolicy& policy) {
  if (policy.order().arity() != d.arity())
    throw std::invalid_argument("policy order arity does not match design");
  if (policy.is_uniform()) return greedy_uniform_scan(d, policy.order());
  return greedy_degree_stepped(d, policy);
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::greedy: return "greedy";
    case Provenance::subset: return "subset";
    case Provenance::exhaustive: return "exhaustive";
    case Provenance::algebraic: return "algebraic";
  }
  return "?";
}

bool FanResult::contains(const Model& m) const {
  auto it = std::lower_bound(leaves.begin(), leaves.end(), m,
                             [](const FanLeaf& leaf, const Model& value) { return leaf.model < value; });
  return it != leaves.end() && it->model == m;
}

FanResult merge_fans(const std::vector<FanResult>& parts) {
  FanResult out;
  std::map<Model, Provenance> first;
  for (const FanResult& part : parts) {
    out.capped = out.capped || part.capped;
    for (const auto& [provenance, count] : part.counts) out.counts[provenance] += count;
    for (const FanLeaf& leaf : part.leaves) {
      auto [it, inserted] = first.emplace(leaf.model, leaf.provenance);
      if (!inserted && leaf.provenance < it->second) it->second = leaf.provenance;
    }
  }
  out.leaves.reserve(first.size());
  for (const auto& [model, provenance] : first) out.leaves.push_back(FanLeaf{model, provenance});
  return out;
}

namespace {

struct GreedyFanSearch {
  const Design& d;
  const FanCaps& caps;
  std::set<Model> found;
  bool capped = false;

  std::vector<Monomial> accepted;
  std::set<std::vector<int>> accepted_set;
  Eliminator elim;

  explicit GreedyFanSearch(const Design& design, const FanCaps& c)
      : d(design), caps(c), elim(design.n()) {
    Monomial one = Monomial::constant(d.arity());
    elim.try_push(monomial_vector(d, one));
    accepted.push_back(one);
    accepted_set.insert(accepted.front().exponents());
  }

  void run() { step(1); }

  void step(int degree) {
    if (capped) return;
    if (accepted.size() == d.n()) {
      if (found.size() >= caps.max_leaves) {
        capped = true;
        return;
      }
      found.insert(Model(d.arity(), accepted));
      return;
    }
    if (degree > static_cast<int>(d.n()))
      throw std::logic_error("greedy fan failed to saturate");

    std::vector<Monomial> candidates = admissible_candidates(d.arity(), degree, accepted_set);
    std::sort(candidates.begin(), candidates.end(), canonical_less);
    if (candidates.empty()) return;  // no staircase of size n extends this state

    std::vector<std::vector<Rational>> vectors;
    vectors.reserve(candidates.size());
    for (const Monomial& m : candidates) vectors.push_back(monomial_vector(d, m));

    // Rank of the span the whole candidate set can add; every maximal
    // independent selection has exactly this size.
    std::size_t extension = 0;
    for (const auto& v : vectors)
      if (elim.try_push(v)) ++extension;
    for (std::size_t i = 0; i < extension; ++i) elim.pop();
    if (extension == 0)
      throw std::logic_error("no admissible candidate extends an unsaturated model");

    choose(degree, candidates, vectors, 0, extension);
  }

  void choose(int degree, const std::vector<Monomial>& candidates,
              const std::vector<std::vector<Rational>>& vectors, std::size_t start,
              std::size_t remaining) {
    if (capped) return;
    if (remaining == 0) {
      step(degree + 1);
      return;
    }
    for (std::size_t i = start; i + remaining <= candidates.size(); ++i) {
      if (!elim.try_push(vectors[i])) continue;
      accepted.push_back(candidates[i]);
      accepted_set.insert(candidates[i].exponents());
      choose(degree, candidates, vectors, i + 1, remaining - 1);
      accepted_set.erase(candidates[i].exponents());
      accepted.pop_back();
      elim.pop();
      if (capped) return;
    }
  }
};

FanResult collect(std::set<Model> models, Provenance provenance, bool capped) {
  FanResult out;
  out.capped = capped;
  out.counts[provenance] = models.size();
  out.leaves.reserve(models.size());
  for (const Model& m : models) out.leaves.push_back(FanLeaf{m, provenance});
  return out;
}

}  // namespace

FanResult enumerate_greedy_fan(const Design& d, const FanCaps& caps) {
  GreedyFanSearch search(d, caps);
  search.run();
  return collect(std::move(search.found), Provenance::greedy, search.capped);
}

FanResult subset_fan(const Design& d, const FanCaps& caps, std::vector<SubsetFanDetail>* detail) {
  const std::size_t r = d.arity();
  std::set<Model> models;
  bool capped = false;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << r); ++mask) {
    std::vector<std::size_t> indices;
    for (std::size_t j = 0; j < r; ++j)
      if (mask & (std::size_t{1} << j)) indices.push_back(j);
    Design projected = project(d, indices);
    if (projected.n() != d.n()) continue;
    FanResult sub = enumerate_greedy_fan(projected, caps);
    capped = capped || sub.capped;
    if (detail) detail->push_back(SubsetFanDetail{indices, sub.leaves.size()});
    for (const FanLeaf& leaf : sub.leaves) models.insert(leaf.model.lifted(r, indices));
  }
  return collect(std::move(models), Provenance::subset, capped);
}

namespace {

struct ExhaustiveSearch {
  const Design& d;
  const FanCaps& caps;
  std::vector<Monomial> box;                 // canonical ascending
  std::vector<std::vector<Rational>> vectors;
  std::set<std::vector<int>> chosen;
  std::vector<std::size_t> stack;
  Eliminator elim;
  std::set<Model> found;
  bool capped = false;

  ExhaustiveSearch(const Design& design, const FanCaps& c)
      : d(design), caps(c), elim(design.n()) {
    unsigned long long box_size = 1;
    for (std::size_t levels : d.level_counts()) box_size *= levels;
    if (box_size > caps.max_box)
      throw CapExceeded("level box has " + std::to_string(box_size) +
                        " monomials, cap is " + std::to_string(caps.max_box));
    if (d.n() > caps.max_n)
      throw CapExceeded("exhaustive enumeration capped at n <= " + std::to_string(caps.max_n));

    std::vector<int> current(d.arity(), 0);
    while (true) {
      box.emplace_back(current);
      std::size_t j = 0;
      while (j < d.arity() && current[j] + 1 == static_cast<int>(d.level_counts()[j])) {
        current[j] = 0;
        ++j;
      }
      if (j == d.arity()) break;
      ++current[j];
    }
    std::sort(box.begin(), box.end(), canonical_less);
    vectors.reserve(box.size());
    for (const Monomial& m : box) vectors.push_back(monomial_vector(d, m));
  }

  bool admissible(const Monomial& m) const {
    for (std::size_t j = 0; j < m.arity(); ++j) {
      if (m[j] == 0) continue;
      std::vector<int> e = m.exponents();
      --e[j];
      if (!chosen.contains(e)) return false;
    }
    return true;
  }

  void run() {
    // Every staircase contains the constant monomial, which is box[0].
    if (box.empty()) return;
    grow(0);
  }

  void grow(std::size_t index) {
    if (capped) return;
    if (!elim.try_push(vectors[index])) return;  // rank pruning
    chosen.insert(box[index].exponents());
    stack.push_back(index);
    if (stack.size() == d.n()) {
      if (found.size() >= caps.max_leaves) {
        capped = true;
      } else {
        std::vector<Monomial> terms;
        terms.reserve(stack.size());
        for (std::size_t k : stack) terms.push_back(box[k]);
        found.insert(Model(d.arity(), std::move(terms)));
      }
    } else {
      for (std::size_t next = index + 1;
           next < box.size() && box.size() - next >= d.n() - stack.size(); ++next) {
        if (admissible(box[next])) grow(next);
        if (capped) break;
      }
    }
    stack.pop_back();
    chosen.erase(box[index].exponents());
    elim.pop();
  }
};

}  // namespace

FanResult enumerate_statistical_fan(const Design& d, const FanCaps& caps) {
  ExhaustiveSearch search(d, caps);
  search.run();
  return collect(std::move(search.found), Provenance::exhaustive, search.capped);
}

namespace {

struct StaircaseCounter {
  std::vector<Monomial> box;
  std::size_t target;
  std::set<std::vector<int>> chosen;
  unsigned long long count = 0;

  void grow(std::size_t index, std::size_t size) {
    if (size == target) {
      ++count;
      return;
    }
    for (std::size_t next = index + 1;
         next < box.size() && box.size() - next >= target - size; ++next) {
      bool ok = true;
      for (std::size_t j = 0; j < box[next].arity() && ok; ++j) {
        if (box[next][j] == 0) continue;
        std::vector<int> e = box[next].exponents();
        --e[j];
        ok = chosen.contains(e);
      }
      if (!ok) continue;
      chosen.insert(box[next].exponents());
      grow(next, size + 1);
      chosen.erase(box[next].exponents());
    }
  }
};

}  // namespace

unsigned long long count_staircases(const std::vector<std::size_t>& bounds, std::size_t size) {
  unsigned long long box_size = 1;
  for (std::size_t b : bounds) {
    if (b == 0) throw std::invalid_argument("bounds must be positive");
    box_size *= b;
  }
  if (size > box_size) throw std::invalid_argument("staircase size exceeds the box");
  if (size == 0) return 1;

  StaircaseCounter counter;
  counter.target = size;
  std::vector<int> current(bounds.size(), 0);
  while (true) {
    counter.box.emplace_back(current);
    std::size_t j = 0;
    while (j < bounds.size() && current[j] + 1 == static_cast<int>(bounds[j])) {
      current[j] = 0;
      ++j;
    }
    if (j == bounds.size()) break;
    ++current[j];
  }
  std::sort(counter.box.begin(), counter.box.end(), canonical_less);

  counter.chosen.insert(counter.box.front().exponents());
  counter.grow(0, 1);
  return counter.count;
}

}  // namespace statfan
