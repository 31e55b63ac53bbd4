#include "statfan/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "statfan/errors.hpp"
#include "statfan/matrix.hpp"

namespace statfan {

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t j = 0; j < a.arity(); ++j)
    if (a[j] > 0 && b[j] > 0) return false;
  return true;
}

std::vector<Polynomial> autoreduce(std::vector<Polynomial> basis, const MonomialOrder& order) {
  // Minimal basis: drop generators whose leading monomial another divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < basis.size() && !dominated; ++j) {
      if (i == j) continue;
      if (is_constituent(basis[j].leading_monomial(), basis[i].leading_monomial())) {
        // Equal leading monomials: keep the first occurrence only.
        if (basis[j].leading_monomial() == basis[i].leading_monomial())
          dominated = j < i;
        else
          dominated = true;
      }
    }
    if (!dominated) minimal.push_back(basis[i]);
  }
  // Reduce every tail against the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial reduced = divide(minimal[i], others).remainder.monic();
      if (!reduced.equals(minimal[i])) {
        minimal[i] = std::move(reduced);
        changed = true;
      }
    }
    // Dropping to a constant or zero can change divisibility, so re-minimize.
    std::erase_if(minimal, [](const Polynomial& p) { return p.is_zero(); });
  }
  std::sort(minimal.begin(), minimal.end(), [&order](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators, const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;
    basis.push_back((g.order() == order ? std::move(g) : g.reordered(order)).monic());
  }
  if (basis.empty()) throw std::invalid_argument("buchberger requires a nonzero generator");

  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) pending.insert({i, upto});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  while (!pending.empty()) {
    auto [i, j] = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& lmi = basis[i].leading_monomial();
    const Monomial& lmj = basis[j].leading_monomial();
    if (coprime(lmi, lmj)) continue;
    // Chain criterion: some k with LM(k) | lcm(i,j) and both pairs already off
    // the queue.
    Monomial l = lmi.lcm(lmj);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!is_constituent(basis[k].leading_monomial(), l)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      if (!pending.contains(key(i, k)) && !pending.contains(key(j, k))) skip = true;
    }
    if (skip) continue;

    Polynomial remainder = divide(s_polynomial(basis[i], basis[j]), basis).remainder;
    if (!remainder.is_zero()) {
      basis.push_back(remainder.monic());
      add_pairs(basis.size() - 1);
    }
  }

  return GroebnerBasis{order, autoreduce(std::move(basis), order)};
}

bool is_groebner_basis(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
      Polynomial s = s_polynomial(gb.generators[i], gb.generators[j]);
      if (!divide(s, gb.generators).remainder.is_zero()) return false;
    }
  }
  return true;
}

PointIdeal vanishing_ideal_gb(const Design& d, const MonomialOrder& order) {
  if (order.arity() != d.arity())
    throw std::invalid_argument("order arity does not match design");
  const std::size_t r = d.arity();

  auto less = [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); };
  std::set<Monomial, decltype(less)> queue(less);
  std::set<std::vector<int>> enqueued;
  auto enqueue = [&](const Monomial& m) {
    if (enqueued.insert(m.exponents()).second) queue.insert(m);
  };

  std::vector<Polynomial> generators;
  std::vector<Monomial> leading;
  std::vector<Monomial> standard;
  Eliminator elim(d.n());

  enqueue(Monomial::constant(r));
  while (!queue.empty()) {
    Monomial m = *queue.begin();
    queue.erase(queue.begin());
    bool reducible = false;
    for (const Monomial& lt : leading) {
      if (is_constituent(lt, m)) {
        reducible = true;
        break;
      }
    }
    if (reducible) continue;

    auto coeffs = elim.push(monomial_vector(d, m));
    if (coeffs) {
      std::vector<Term> terms{Term{Rational(1), m}};
      for (std::size_t k = 0; k < standard.size(); ++k)
        terms.push_back(Term{-(*coeffs)[k], standard[k]});
      generators.push_back(Polynomial::from_terms(order, std::move(terms)));
      leading.push_back(m);
    } else {
      standard.push_back(m);
      for (std::size_t j = 0; j < r; ++j) enqueue(m * Monomial::unit(r, j));
    }
  }

  std::sort(generators.begin(), generators.end(),
            [&order](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_monomial(), b.leading_monomial());
            });
  return PointIdeal{GroebnerBasis{order, std::move(generators)}, Model(r, std::move(standard))};
}

FanResult algebraic_fan_sweep(const Design& d, const std::vector<OrderKind>& kinds,
                              bool include_subsets, std::size_t max_runs) {
  const std::size_t r = d.arity();

  struct Sweep {
    Design design;
    std::vector<std::size_t> lift;  // positions in the full indeterminate set
  };
  std::vector<Sweep> sweeps{{d, {}}};
  if (include_subsets) {
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << r); ++mask) {
      std::vector<std::size_t> indices;
      for (std::size_t j = 0; j < r; ++j)
        if (mask & (std::size_t{1} << j)) indices.push_back(j);
      Design projected = project(d, indices);
      if (projected.n() == d.n()) sweeps.push_back(Sweep{std::move(projected), indices});
    }
  }

  std::size_t runs = 0;
  for (const Sweep& sweep : sweeps) {
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= sweep.design.arity(); ++k) factorial *= k;
    runs += kinds.size() * factorial;
  }
  if (runs > max_runs)
    throw CapExceeded("algebraic fan sweep needs " + std::to_string(runs) + " runs, cap is " +
                      std::to_string(max_runs));

  std::set<Model> models;
  for (const Sweep& sweep : sweeps) {
    std::vector<std::size_t> perm(sweep.design.arity());
    for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
    std::sort(perm.begin(), perm.end());
    do {
      for (OrderKind kind : kinds) {
        Model qb = vanishing_ideal_gb(sweep.design, MonomialOrder(kind, perm)).quotient_basis;
        models.insert(sweep.lift.empty() ? qb : qb.lifted(r, sweep.lift));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  FanResult out;
  out.counts[Provenance::algebraic] = models.size();
  out.leaves.reserve(models.size());
  for (const Model& m : models) out.leaves.push_back(FanLeaf{m, Provenance::algebraic});
  return out;
}

}  // namespace statfan
