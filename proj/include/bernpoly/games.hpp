#pragma once

#include "bernpoly/pmf.hpp"
#include "bernpoly/polytope.hpp"

#include <string_view>
#include <vector>

namespace bernpoly {

// Cooperative game on players {1..n}. A coalition is a bitmask with bit
// i-1 standing for player i; values are exact and the empty coalition is
// pinned to zero.
class CoalitionGame {
 public:
  CoalitionGame(int players, std::vector<Rational> values);

  int players() const { return n_; }
  unsigned grand_coalition() const { return (1u << n_) - 1; }
  const Rational& value(unsigned coalition) const;
  const Rational& grand_value() const { return values_.back(); }
  const std::vector<Rational>& values() const { return values_; }

  CoalitionGame& operator+=(const CoalitionGame& other);
  friend CoalitionGame operator+(CoalitionGame lhs, const CoalitionGame& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend CoalitionGame operator*(const Rational& scalar, CoalitionGame game);

  bool operator==(const CoalitionGame&) const = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

// Per-player allocation; efficiency (sum == grand value) is asserted by the
// producing operations' tests rather than stored.
struct ShapleyAllocation {
  std::vector<Rational> phis;
  Rational total() const;
};

// The variance game nu(J) = Var(sum over J) of a class member.
CoalitionGame variance_game(const BernoulliPmf& f);

// Shapley value through the permutation-weighted marginal sums.
ShapleyAllocation shapley_formula(const CoalitionGame& game);

// Shapley value of the variance game through the covariance identity
// phi_i = Cov(X_i, S). This is the production path; it agrees with
// shapley_formula(variance_game(f)) exactly.
ShapleyAllocation shapley_covariance(const BernoulliPmf& f);

// Closed-form marginal contribution 4p - 1 - 3p^2 - mu_kl for a
// sigma-countermonotone member with p in (1/3, 1/2], where {i,k,l} = {1,2,3}.
Rational marginal_contribution_closed_form(const BernoulliPmf& f, int i);

// Allocation of a mixture of the three sigma-countermonotone generators:
// the weighted average of the per-generator allocations, which equals the
// covariance allocation of the mixed pmf.
ShapleyAllocation shapley_mixture(const MarginParam& p, const ConvexWeights& weights);

enum class Modularity { kSupermodular, kSubmodular, kModular, kNeither };

std::string_view modularity_name(Modularity m);

// Exhaustive check of nu(I u J) + nu(I n J) against nu(I) + nu(J) over all
// coalition pairs.
Modularity classify_modularity(const CoalitionGame& game);

// Quotient game over the partition {J, singletons of the complement}; the
// fused block is player 1 of the result, the remaining players follow in
// ascending order.
CoalitionGame fuse_players(const CoalitionGame& game, unsigned coalition);

// Fusion property: the fused block's Shapley value in the quotient game
// equals the sum of its members' values in the original game.
bool shapley_fusion_check(const BernoulliPmf& f, unsigned coalition);

}  // namespace bernpoly
