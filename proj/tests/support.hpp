// Shared test helpers: shorthand constructors, independent oracles, and
// deterministic random generators. The oracles here recompute expected
// values from first principles and never call the code path under test.
#pragma once

#include "bernpoly/pmf.hpp"
#include "bernpoly/polytope.hpp"

#include <doctest.h>

#include <random>
#include <vector>

namespace testsupport {

inline bernpoly::Rational rat(const std::string& text) {
  return bernpoly::parse_rational(text);
}

inline bernpoly::BernoulliPmf pmf3(const std::vector<std::string>& entries) {
  std::vector<bernpoly::Rational> values;
  values.reserve(entries.size());
  for (const auto& e : entries) values.push_back(rat(e));
  return bernpoly::make_pmf(3, std::move(values));
}

// Correlation recomputed from the 2x2 joint law of (X_i, X_j), independent
// of the production formula path.
inline bernpoly::Rational direct_correlation(const bernpoly::BernoulliPmf& f, int i,
                                             int j) {
  using bernpoly::Rational;
  Rational joint[2][2] = {{Rational{0}, Rational{0}}, {Rational{0}, Rational{0}}};
  for (int a = 0; a < f.size(); ++a) {
    joint[bernpoly::atom_coordinate(a, i)][bernpoly::atom_coordinate(a, j)] += f.value(a);
  }
  const Rational ei = joint[1][0] + joint[1][1];
  const Rational ej = joint[0][1] + joint[1][1];
  REQUIRE(ei == ej);  // equal margins, so sd_i * sd_j = p(1-p) exactly
  const Rational cov = joint[1][1] - ei * ej;
  return cov / (ei * (1 - ei));
}

// Variance of the sum recomputed from the raw atoms.
inline bernpoly::Rational direct_sum_variance(const bernpoly::BernoulliPmf& f) {
  using bernpoly::Rational;
  Rational m1{0};
  Rational m2{0};
  for (int a = 0; a < f.size(); ++a) {
    const int level = bernpoly::atom_level(a);
    m1 += level * f.value(a);
    m2 += level * level * f.value(a);
  }
  return m2 - m1 * m1;
}

// Stop-loss transform recomputed from the masses.
inline bernpoly::Rational direct_stop_loss(const bernpoly::SumPmf& law, int threshold) {
  bernpoly::Rational out{0};
  for (int k = 0; k <= law.dimension(); ++k) {
    if (k > threshold) out += (k - threshold) * law.mass(k);
  }
  return out;
}

// Random convex weights with small integer numerators; at least one
// positive entry.
inline bernpoly::ConvexWeights random_weights(std::mt19937& rng, size_t count) {
  std::uniform_int_distribution<int> dist(0, 12);
  std::vector<int> raw(count, 0);
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : raw) total += (w = dist(rng));
  }
  bernpoly::ConvexWeights out;
  out.weights.reserve(count);
  for (int w : raw) out.weights.emplace_back(w, total);
  return out;
}

// Random member of the class: a random convex mixture of its vertices.
inline bernpoly::BernoulliPmf random_member(const bernpoly::ExtremalSet& es,
                                            std::mt19937& rng) {
  return mix(es, random_weights(rng, es.vertices.size()));
}

// Random pmf on {0,1}^d with no margin constraint.
inline bernpoly::BernoulliPmf random_pmf(int d, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, 9);
  const size_t n = size_t{1} << d;
  std::vector<int> raw(n, 0);
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : raw) total += (w = dist(rng));
  }
  std::vector<bernpoly::Rational> values;
  values.reserve(n);
  for (int w : raw) values.emplace_back(w, total);
  return bernpoly::make_pmf(d, std::move(values));
}

// Image of f under a coordinate permutation: Y_i = X_{perm[i-1]}.
inline bernpoly::BernoulliPmf permute_pmf(const bernpoly::BernoulliPmf& f,
                                          const std::vector<int>& perm) {
  const int d = f.dimension();
  std::vector<bernpoly::Rational> values(size_t{1} << d, bernpoly::Rational{0});
  for (int a = 0; a < f.size(); ++a) {
    int image = 0;
    for (int i = 1; i <= d; ++i) {
      if (bernpoly::atom_coordinate(a, perm[static_cast<size_t>(i - 1)])) {
        image |= 1 << (i - 1);
      }
    }
    values[static_cast<size_t>(image)] += f.value(a);
  }
  return bernpoly::make_pmf(d, std::move(values));
}

}  // namespace testsupport
