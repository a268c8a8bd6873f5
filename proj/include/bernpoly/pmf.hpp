#pragma once

#include "bernpoly/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bernpoly {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 4;

// Margin parameter p = s/t of an equal-margin Bernoulli class, restricted
// to (0, 1/2]. Classes with p > 1/2 are not constructed; they are obtained
// from a class with parameter 1-p by relabeling 0 <-> 1 in every coordinate.
class MarginParam {
 public:
  explicit MarginParam(Rational p);
  static MarginParam parse(std::string_view text);

  const Rational& p() const { return p_; }
  const Integer& s() const { return s_; }  // numerator of p
  const Integer& t() const { return t_; }  // denominator of p

  // The scalar c = (2s - t)/s appearing in the monomial map.
  Rational c() const;

  bool operator==(const MarginParam&) const = default;

 private:
  Rational p_;
  Integer s_;
  Integer t_;
};

// Atom indexing. The 2^d binary atoms are ordered reverse-lexicographically:
// coordinate i (1-based) of atom `a` is bit (i-1) of `a`, so for d = 3 the
// order is 000,100,010,110,001,101,011,111.
inline int atom_coordinate(int atom, int i) { return (atom >> (i - 1)) & 1; }

// Number of coordinates equal to one ("level" of the atom).
int atom_level(int atom);

// Bit string such as "110" for the atom, in coordinate order x1 x2 x3.
std::string atom_label(int atom, int d);

// A d-variate Bernoulli pmf stored as a vector of 2^d exact rationals over
// reverse-lexicographically ordered atoms. Values are validated to be
// nonnegative and to sum to exactly one; margins are free to differ, so
// candidate vectors outside any equal-margin class can still be represented.
class BernoulliPmf {
 public:
  static BernoulliPmf from_values(int d, std::vector<Rational> values);

  int dimension() const { return d_; }
  int size() const { return static_cast<int>(values_.size()); }
  const Rational& value(int atom) const { return values_[static_cast<size_t>(atom)]; }
  const std::vector<Rational>& values() const { return values_; }

  // Atoms with positive mass, ascending.
  std::vector<int> support() const;

  bool operator==(const BernoulliPmf&) const = default;

 private:
  BernoulliPmf(int d, std::vector<Rational> values);

  int d_;
  std::vector<Rational> values_;
};

// Distribution of X1 + ... + Xd on {0, ..., d}.
class SumPmf {
 public:
  SumPmf(int d, std::vector<Rational> masses);

  int dimension() const { return d_; }
  const Rational& mass(int level) const { return masses_[static_cast<size_t>(level)]; }
  const std::vector<Rational>& masses() const { return masses_; }

  Rational mean() const;
  Rational variance() const;

  // Stop-loss transform E[(S - m)+] at an integer threshold.
  Rational stop_loss(int threshold) const;

  bool operator==(const SumPmf&) const = default;

 private:
  int d_;
  std::vector<Rational> masses_;
};

// Validated construction; throws NegativeMass / NotNormalized /
// DimensionMismatch / UnsupportedDimension.
BernoulliPmf make_pmf(int d, std::vector<Rational> values);

// E[X_i] = sum of f over atoms with x_i = 1 (i is 1-based).
Rational margin(const BernoulliPmf& f, int i);

// mu_ij = E[X_i X_j] for i != j.
Rational second_moment(const BernoulliPmf& f, int i, int j);

// rho(X_i, X_j) = (mu_ij - p^2) / (p (1 - p)). Requires equal margins in
// (0, 1); throws NotAMember when margins differ, DegenerateMargin when the
// margin is 0 or 1.
Rational correlation(const BernoulliPmf& f, int i, int j);

// Law of the coordinate sum.
SumPmf sum_distribution(const BernoulliPmf& f);

// Variance of the coordinate sum.
Rational variance_of_sum(const BernoulliPmf& f);

// The common margin when all d margins agree.
std::optional<Rational> common_margin(const BernoulliPmf& f);

// Margin parameter of the class f belongs to. Throws NotAMember when the
// margins differ, OutOfRange when the common margin is outside (0, 1/2].
MarginParam class_param(const BernoulliPmf& f);

}  // namespace bernpoly
