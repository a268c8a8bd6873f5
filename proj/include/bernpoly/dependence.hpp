#pragma once

#include "bernpoly/pmf.hpp"
#include "bernpoly/polytope.hpp"

#include <string_view>
#include <vector>

namespace bernpoly {

// Finite bivariate law with rational support points. Construction merges
// duplicate support points, drops zero masses, and validates that masses
// are nonnegative and sum to one.
struct BivariateAtom {
  Rational x;
  Rational y;
  Rational mass;
};

class BivariatePmf {
 public:
  explicit BivariatePmf(std::vector<BivariateAtom> atoms);
  const std::vector<BivariateAtom>& atoms() const { return atoms_; }

 private:
  std::vector<BivariateAtom> atoms_;
};

// Countermonotonicity on a finite support: every two atoms with positive
// mass are anti-ordered, (x - x')(y - y') <= 0. On finite supports this is
// equivalent to the almost-sure statement over independent copies.
bool is_countermonotone_pair(const BivariatePmf& joint);

// Joint law of (sum over J, sum over the complement of J) under f.
// `coalition` is a bitmask over coordinates 1..d (bit i-1 = coordinate i);
// an empty coalition contributes the constant 0.
BivariatePmf split_sum_pair(const BernoulliPmf& f, unsigned coalition);

// True iff every split (sum over J, sum over J^c) is countermonotone.
// Requires a d = 3 class member.
bool is_sigma_countermonotone(const BernoulliPmf& f);

// Convex order on lattice sum laws: equal means and dominated stop-loss
// transforms at every integer threshold. Returns false when means differ.
bool convex_order_leq(const SumPmf& a, const SumPmf& b);

// The convex-order minimal sum law of the class: the two-point {0,1} law
// (1-3p, 3p) for p < 1/3, unit mass at 1 for p = 1/3, and the {1,2} law
// (2-3p, 3p-1) for p in (1/3, 1/2].
SumPmf minimal_sum_law(const MarginParam& p);

// True iff sum_distribution(f) equals the minimal law of the class of f.
bool is_sigma_cx_smallest(const BernoulliPmf& f);

// The sigma-countermonotone members form a convex polytope; its generators
// are the sixth column of the first table for p <= 1/3 (the joint mix at
// p = 1/3) and columns 6, 7, 8 of the second table for p in (1/3, 1/2]
// (which coincide with the first three kernel columns at p = 1/2).
struct SigmaCmPolytope {
  MarginParam p;
  std::vector<BernoulliPmf> generators;
};

SigmaCmPolytope sigma_cm_polytope(const MarginParam& p);

// Sum of the three pairwise second moments, mu12 + mu13 + mu23. Constant
// 3p - 1 across the sigma-countermonotone polytope for p in (1/3, 1/2].
Rational mu2_plus(const BernoulliPmf& f);

// The exchangeable member (generator average) of the sigma-countermonotone
// polytope; defined for p in (1/3, 1/2].
BernoulliPmf exchangeable_member(const MarginParam& p);

enum class PairwiseClass { kPositive, kNegative, kMixed };

// "P-PC", "P-NC" or "mixed".
std::string_view pairwise_class_name(PairwiseClass c);

// Exact pairwise correlation matrix with unit diagonal, plus the pairwise
// classification: P-PC when all off-diagonal entries are >= 0, P-NC when
// all are <= 0, mixed otherwise.
struct CorrelationProfile {
  std::vector<std::vector<Rational>> rho;
  PairwiseClass classification;
};

CorrelationProfile correlation_profile(const BernoulliPmf& f);

// Profiles of every closed-form vertex, aligned with
// closed_form_extremals(p).vertices.
std::vector<CorrelationProfile> classify_extremal_correlations(const MarginParam& p);

}  // namespace bernpoly
