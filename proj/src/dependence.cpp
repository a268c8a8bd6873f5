#include "bernpoly/dependence.hpp"

#include "bernpoly/errors.hpp"

#include <algorithm>
#include <map>

namespace bernpoly {
namespace {

const Rational kOneThird{1, 3};

MarginParam require_d3_member(const BernoulliPmf& f) {
  if (f.dimension() != 3) {
    throw UnsupportedDimension{"this operation is defined for d = 3 only"};
  }
  return class_param(f);
}

}  // namespace

BivariatePmf::BivariatePmf(std::vector<BivariateAtom> atoms) {
  std::map<std::pair<Rational, Rational>, Rational> merged;
  Rational total{0};
  for (auto& atom : atoms) {
    if (atom.mass < 0) throw NegativeMass{"negative mass in bivariate law"};
    if (atom.mass == 0) continue;
    merged[{atom.x, atom.y}] += atom.mass;
    total += atom.mass;
  }
  if (total != 1) throw NotNormalized{"bivariate law sums to " + to_string(total)};
  atoms_.reserve(merged.size());
  for (auto& [point, mass] : merged) {
    atoms_.push_back({point.first, point.second, mass});
  }
}

bool is_countermonotone_pair(const BivariatePmf& joint) {
  const auto& atoms = joint.atoms();
  for (size_t i = 0; i < atoms.size(); ++i) {
    for (size_t j = i + 1; j < atoms.size(); ++j) {
      if ((atoms[i].x - atoms[j].x) * (atoms[i].y - atoms[j].y) > 0) return false;
    }
  }
  return true;
}

BivariatePmf split_sum_pair(const BernoulliPmf& f, unsigned coalition) {
  std::vector<BivariateAtom> atoms;
  atoms.reserve(static_cast<size_t>(f.size()));
  for (int a = 0; a < f.size(); ++a) {
    if (f.value(a) == 0) continue;
    int in = 0;
    int out = 0;
    for (int i = 1; i <= f.dimension(); ++i) {
      if (coalition & (1u << (i - 1))) {
        in += atom_coordinate(a, i);
      } else {
        out += atom_coordinate(a, i);
      }
    }
    atoms.push_back({Rational{in}, Rational{out}, f.value(a)});
  }
  return BivariatePmf{std::move(atoms)};
}

bool is_sigma_countermonotone(const BernoulliPmf& f) {
  require_d3_member(f);
  const unsigned all = (1u << f.dimension()) - 1;
  for (unsigned coalition = 0; coalition <= all; ++coalition) {
    if (!is_countermonotone_pair(split_sum_pair(f, coalition))) return false;
  }
  return true;
}

bool convex_order_leq(const SumPmf& a, const SumPmf& b) {
  if (a.mean() != b.mean()) return false;
  const int top = std::max(a.dimension(), b.dimension());
  for (int m = 0; m <= top; ++m) {
    if (a.stop_loss(m) > b.stop_loss(m)) return false;
  }
  return true;
}

SumPmf minimal_sum_law(const MarginParam& mp) {
  const Rational& p = mp.p();
  std::vector<Rational> masses(4, Rational{0});
  if (p < kOneThird) {
    masses[0] = 1 - 3 * p;
    masses[1] = 3 * p;
  } else if (p == kOneThird) {
    masses[1] = 1;
  } else {
    masses[1] = 2 - 3 * p;
    masses[2] = 3 * p - 1;
  }
  return SumPmf{3, std::move(masses)};
}

bool is_sigma_cx_smallest(const BernoulliPmf& f) {
  MarginParam mp = require_d3_member(f);
  return sum_distribution(f) == minimal_sum_law(mp);
}

SigmaCmPolytope sigma_cm_polytope(const MarginParam& p) {
  SigmaCmPolytope out{p, {}};
  if (p.p() <= kOneThird) {
    out.generators.push_back(table1_column(p, 6));
  } else {
    for (int index : {6, 7, 8}) {
      out.generators.push_back(table2_column(p, index));
    }
  }
  return out;
}

Rational mu2_plus(const BernoulliPmf& f) {
  class_param(f);
  Rational out{0};
  for (int i = 1; i <= f.dimension(); ++i) {
    for (int j = i + 1; j <= f.dimension(); ++j) {
      out += second_moment(f, i, j);
    }
  }
  return out;
}

BernoulliPmf exchangeable_member(const MarginParam& p) {
  if (p.p() <= kOneThird) {
    throw OutOfRange{"the exchangeable generator average exists for p in (1/3, 1/2]"};
  }
  SigmaCmPolytope polytope = sigma_cm_polytope(p);
  std::vector<Rational> values(8, Rational{0});
  for (const auto& g : polytope.generators) {
    for (int a = 0; a < g.size(); ++a) {
      values[static_cast<size_t>(a)] += g.value(a) / 3;
    }
  }
  return make_pmf(3, std::move(values));
}

std::string_view pairwise_class_name(PairwiseClass c) {
  switch (c) {
    case PairwiseClass::kPositive: return "P-PC";
    case PairwiseClass::kNegative: return "P-NC";
    case PairwiseClass::kMixed: return "mixed";
  }
  return "unknown";
}

CorrelationProfile correlation_profile(const BernoulliPmf& f) {
  const int d = f.dimension();
  CorrelationProfile out;
  out.rho.assign(static_cast<size_t>(d),
                 std::vector<Rational>(static_cast<size_t>(d), Rational{1}));
  bool any_negative = false;
  bool any_positive = false;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      Rational rho = correlation(f, i, j);
      out.rho[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = rho;
      out.rho[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = rho;
      if (rho > 0) any_positive = true;
      if (rho < 0) any_negative = true;
    }
  }
  if (!any_negative) {
    out.classification = PairwiseClass::kPositive;
  } else if (!any_positive) {
    out.classification = PairwiseClass::kNegative;
  } else {
    out.classification = PairwiseClass::kMixed;
  }
  return out;
}

std::vector<CorrelationProfile> classify_extremal_correlations(const MarginParam& p) {
  ExtremalSet es = closed_form_extremals(p);
  std::vector<CorrelationProfile> out;
  out.reserve(es.vertices.size());
  for (const auto& vertex : es.vertices) {
    out.push_back(correlation_profile(vertex));
  }
  return out;
}

}  // namespace bernpoly
