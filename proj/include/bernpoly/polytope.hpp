#pragma once

#include "bernpoly/pmf.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace bernpoly {

// Margin constraints of the class: H f = 0, where row k carries 1-p at
// atoms with x_k = 1 and -p at atoms with x_k = 0. Together with f >= 0 and
// sum f = 1 this carves the class polytope out of the probability simplex.
class ConstraintSystem {
 public:
  ConstraintSystem(int d, MarginParam p);

  int dimension() const { return d_; }
  const MarginParam& param() const { return p_; }
  const std::vector<std::vector<Rational>>& matrix() const { return rows_; }

  // H f, one entry per coordinate.
  std::vector<Rational> residual(const BernoulliPmf& f) const;

 private:
  int d_;
  MarginParam p_;
  std::vector<std::vector<Rational>> rows_;
};

ConstraintSystem build_constraints(int d, MarginParam p);

enum class VertexTag {
  kKernel,
  kType0Plus,
  kType0Minus,
  kSupportX1X2,
  kUpperFrechet,
  kOracle,
};

std::string_view tag_name(VertexTag tag);
std::optional<VertexTag> tag_from_name(std::string_view name);

// Deduplicated vertex set of the class polytope, with per-vertex provenance
// tags and display names ("r1".."r9" for the closed form, "v1".. for the
// brute-force route).
struct ExtremalSet {
  int d;
  MarginParam p;
  std::vector<BernoulliPmf> vertices;
  std::vector<VertexTag> tags;
  std::vector<std::string> names;

  int count() const { return static_cast<int>(vertices.size()); }
  std::optional<int> find(const BernoulliPmf& f) const;
};

// Column `index` (1-based) of the closed-form vertex table for p <= 1/3.
BernoulliPmf table1_column(const MarginParam& p, int index);

// Column `index` (1-based) of the closed-form vertex table for
// 1/3 <= p <= 1/2.
BernoulliPmf table2_column(const MarginParam& p, int index);

// All vertices of the d = 3 polytope in closed form: the six columns of the
// first table for p <= 1/3, the nine columns of the second table for
// 1/3 < p <= 1/2, with coinciding columns merged (at p = 1/2 the three
// support-X1X2 columns collapse onto the first three kernel columns).
ExtremalSet closed_form_extremals(const MarginParam& p);

// Independent brute-force route: enumerate every support of size up to the
// rank of the stacked system (H plus the all-ones row), solve each
// restricted linear system exactly, and keep the solutions that are unique,
// nonnegative and normalized. Output is deduplicated and sorted, so it is
// deterministic regardless of evaluation order.
ExtremalSet enumerate_vertices_oracle(const ConstraintSystem& cs);

// Exact membership test: H f = 0 (nonnegativity and normalization are pmf
// construction invariants). Throws DimensionMismatch.
bool is_member(const ConstraintSystem& cs, const BernoulliPmf& f);

// Convex weights aligned with an ExtremalSet.
struct ConvexWeights {
  std::vector<Rational> weights;
};

// Exact convex decomposition of a member over the vertex set, computed by a
// phase-1 simplex with Bland's rule; the polytope has more vertices than
// dimensions, so weights are not unique and the basic feasible solution
// picked by Bland's rule is the fixed, deterministic choice.
ConvexWeights decompose(const ExtremalSet& es, const BernoulliPmf& f);

// Mixture sum(weights[i] * vertices[i]); validates the weights.
BernoulliPmf mix(const ExtremalSet& es, const ConvexWeights& weights);

// True iff the equality system restricted to supp(f) pins f down uniquely.
// Throws NotAMember when f is not in the polytope.
bool is_vertex(const ConstraintSystem& cs, const BernoulliPmf& f);

}  // namespace bernpoly
