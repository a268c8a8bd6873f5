#include "bernpoly/games.hpp"

#include "bernpoly/dependence.hpp"
#include "bernpoly/errors.hpp"

namespace bernpoly {
namespace {

Integer factorial(int n) {
  Integer out{1};
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

int popcount(unsigned mask) {
  int out = 0;
  for (; mask != 0; mask >>= 1) out += static_cast<int>(mask & 1);
  return out;
}

}  // namespace

CoalitionGame::CoalitionGame(int players, std::vector<Rational> values)
    : n_(players), values_(std::move(values)) {
  if (n_ < 1 || n_ > 4) throw UnsupportedDimension{"games support 1 to 4 players"};
  if (values_.size() != (size_t{1} << n_)) {
    throw DimensionMismatch{"a game on " + std::to_string(n_) + " players needs " +
                            std::to_string(1 << n_) + " coalition values"};
  }
  if (values_.front() != 0) {
    throw InvalidWeights{"the empty coalition must have value 0"};
  }
}

const Rational& CoalitionGame::value(unsigned coalition) const {
  if (coalition >= values_.size()) throw OutOfRange{"coalition mask out of range"};
  return values_[coalition];
}

CoalitionGame& CoalitionGame::operator+=(const CoalitionGame& other) {
  if (n_ != other.n_) throw DimensionMismatch{"player counts differ"};
  for (size_t c = 0; c < values_.size(); ++c) values_[c] += other.values_[c];
  return *this;
}

CoalitionGame operator*(const Rational& scalar, CoalitionGame game) {
  for (auto& v : game.values_) v *= scalar;
  return game;
}

Rational ShapleyAllocation::total() const {
  Rational out{0};
  for (const auto& phi : phis) out += phi;
  return out;
}

CoalitionGame variance_game(const BernoulliPmf& f) {
  class_param(f);
  const int n = f.dimension();
  std::vector<Rational> values(size_t{1} << n, Rational{0});
  for (unsigned coalition = 1; coalition < values.size(); ++coalition) {
    Rational m1{0};
    Rational m2{0};
    for (int a = 0; a < f.size(); ++a) {
      if (f.value(a) == 0) continue;
      const int s = popcount(static_cast<unsigned>(a) & coalition);
      m1 += s * f.value(a);
      m2 += s * s * f.value(a);
    }
    values[coalition] = m2 - m1 * m1;
  }
  return CoalitionGame{n, std::move(values)};
}

ShapleyAllocation shapley_formula(const CoalitionGame& game) {
  const int n = game.players();
  const Integer n_fact = factorial(n);
  ShapleyAllocation out{std::vector<Rational>(static_cast<size_t>(n), Rational{0})};
  for (int i = 1; i <= n; ++i) {
    const unsigned player = 1u << (i - 1);
    Rational phi{0};
    for (unsigned coalition = 0; coalition <= game.grand_coalition(); ++coalition) {
      if (coalition & player) continue;
      const int size = popcount(coalition);
      const Rational weight{factorial(size) * factorial(n - size - 1), n_fact};
      phi += weight * (game.value(coalition | player) - game.value(coalition));
    }
    out.phis[static_cast<size_t>(i - 1)] = phi;
  }
  return out;
}

ShapleyAllocation shapley_covariance(const BernoulliPmf& f) {
  const MarginParam mp = class_param(f);
  const Rational& p = mp.p();
  const int n = f.dimension();
  ShapleyAllocation out{std::vector<Rational>(static_cast<size_t>(n), Rational{0})};
  for (int i = 1; i <= n; ++i) {
    Rational phi = p - p * p;  // Cov(X_i, X_i)
    for (int j = 1; j <= n; ++j) {
      if (j != i) phi += second_moment(f, i, j) - p * p;
    }
    out.phis[static_cast<size_t>(i - 1)] = phi;
  }
  return out;
}

Rational marginal_contribution_closed_form(const BernoulliPmf& f, int i) {
  const MarginParam mp = class_param(f);
  if (f.dimension() != 3 || i < 1 || i > 3) {
    throw UnsupportedDimension{"the closed form is for d = 3 players"};
  }
  if (mp.p() <= Rational{1, 3}) {
    throw OutOfRange{"the closed form applies for p in (1/3, 1/2]"};
  }
  if (!is_sigma_countermonotone(f)) {
    throw NotSigmaCm{"pmf is not sigma-countermonotone"};
  }
  const int k = i == 1 ? 2 : 1;
  const int l = i == 3 ? 2 : 3;
  const Rational& p = mp.p();
  return 4 * p - 1 - 3 * p * p - second_moment(f, k, l);
}

ShapleyAllocation shapley_mixture(const MarginParam& p, const ConvexWeights& weights) {
  if (p.p() <= Rational{1, 3}) {
    throw OutOfRange{"generator mixtures need p in (1/3, 1/2]"};
  }
  const SigmaCmPolytope polytope = sigma_cm_polytope(p);
  if (weights.weights.size() != polytope.generators.size()) {
    throw InvalidWeights{"expected one weight per generator"};
  }
  Rational total{0};
  for (const auto& w : weights.weights) {
    if (w < 0) throw InvalidWeights{"negative convex weight"};
    total += w;
  }
  if (total != 1) throw InvalidWeights{"convex weights sum to " + to_string(total)};

  ShapleyAllocation out{std::vector<Rational>(3, Rational{0})};
  for (size_t j = 0; j < polytope.generators.size(); ++j) {
    if (weights.weights[j] == 0) continue;
    const ShapleyAllocation part = shapley_covariance(polytope.generators[j]);
    for (size_t i = 0; i < 3; ++i) {
      out.phis[i] += weights.weights[j] * part.phis[i];
    }
  }
  return out;
}

std::string_view modularity_name(Modularity m) {
  switch (m) {
    case Modularity::kSupermodular: return "supermodular";
    case Modularity::kSubmodular: return "submodular";
    case Modularity::kModular: return "modular";
    case Modularity::kNeither: return "neither";
  }
  return "unknown";
}

Modularity classify_modularity(const CoalitionGame& game) {
  bool any_positive = false;
  bool any_negative = false;
  for (unsigned i = 0; i <= game.grand_coalition(); ++i) {
    for (unsigned j = 0; j <= game.grand_coalition(); ++j) {
      const Rational delta =
          game.value(i | j) + game.value(i & j) - game.value(i) - game.value(j);
      if (delta > 0) any_positive = true;
      if (delta < 0) any_negative = true;
    }
  }
  if (any_positive && any_negative) return Modularity::kNeither;
  if (any_positive) return Modularity::kSupermodular;
  if (any_negative) return Modularity::kSubmodular;
  return Modularity::kModular;
}

CoalitionGame fuse_players(const CoalitionGame& game, unsigned coalition) {
  if (coalition == 0 || coalition > game.grand_coalition()) {
    throw OutOfRange{"fused block must be a nonempty coalition"};
  }
  std::vector<unsigned> blocks{coalition};
  for (int i = 1; i <= game.players(); ++i) {
    const unsigned player = 1u << (i - 1);
    if (!(coalition & player)) blocks.push_back(player);
  }
  const int fused_n = static_cast<int>(blocks.size());
  std::vector<Rational> values(size_t{1} << fused_n, Rational{0});
  for (unsigned fused = 0; fused < values.size(); ++fused) {
    unsigned expanded = 0;
    for (int b = 0; b < fused_n; ++b) {
      if (fused & (1u << b)) expanded |= blocks[static_cast<size_t>(b)];
    }
    values[fused] = game.value(expanded);
  }
  return CoalitionGame{fused_n, std::move(values)};
}

bool shapley_fusion_check(const BernoulliPmf& f, unsigned coalition) {
  const CoalitionGame game = variance_game(f);
  if (coalition == 0) return true;  // empty sum on both sides
  if (coalition > game.grand_coalition()) {
    throw OutOfRange{"coalition mask out of range"};
  }
  const ShapleyAllocation base = shapley_formula(game);
  Rational member_sum{0};
  for (int i = 1; i <= game.players(); ++i) {
    if (coalition & (1u << (i - 1))) {
      member_sum += base.phis[static_cast<size_t>(i - 1)];
    }
  }
  const CoalitionGame fused = fuse_players(game, coalition);
  const ShapleyAllocation fused_alloc = shapley_formula(fused);
  return fused_alloc.phis.front() == member_sum;
}

}  // namespace bernpoly
