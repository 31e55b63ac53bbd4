#ifndef STATFAN_GROEBNER_HPP
#define STATFAN_GROEBNER_HPP

#include <vector>

#include "statfan/design.hpp"
#include "statfan/fan.hpp"
#include "statfan/model.hpp"
#include "statfan/polynomial.hpp"

namespace statfan {

/// A reduced monic Groebner basis: every generator monic, no leading monomial
/// divides another's, tails irreducible against the rest.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> generators;  // ascending leading monomials
};

/// Buchberger's algorithm with the coprime and chain criteria for S-pair
/// elimination; output fully reduced.
GroebnerBasis buchberger(std::vector<Polynomial> generators, const MonomialOrder& order);

/// Checks the defining property: every S-polynomial reduces to zero.
bool is_groebner_basis(const GroebnerBasis& gb);

struct PointIdeal {
  GroebnerBasis basis;
  Model quotient_basis;  // the n standard monomials
};

/// Buchberger-Moller construction of the design's vanishing ideal: monomials
/// are processed in increasing order; one whose vector depends on its
/// predecessors' contributes a generator (the monomial minus its span
/// representation), independent ones join the quotient basis.
PointIdeal vanishing_ideal_gb(const Design& d, const MonomialOrder& order);

/// Quotient bases over each order kind x every permutation of the
/// indeterminates; with subsets enabled, projections onto proper subsets U
/// with n_U = n are swept the same way and lifted back.
FanResult algebraic_fan_sweep(const Design& d, const std::vector<OrderKind>& kinds,
                              bool include_subsets = false, std::size_t max_runs = 100000);

}  // namespace statfan

#endif
