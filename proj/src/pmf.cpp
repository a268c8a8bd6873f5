#include "bernpoly/pmf.hpp"

#include "bernpoly/errors.hpp"

#include <algorithm>
#include <numeric>

namespace bernpoly {

MarginParam::MarginParam(Rational p) : p_(std::move(p)) {
  if (p_ <= 0 || p_ > Rational{1, 2}) {
    throw OutOfRange{"margin parameter p = " + to_string(p_) +
                     " is outside (0, 1/2]; classes with p > 1/2 follow by "
                     "relabeling 0 <-> 1 in every coordinate"};
  }
  s_ = numerator(p_);
  t_ = denominator(p_);
}

MarginParam MarginParam::parse(std::string_view text) {
  return MarginParam{parse_rational(text)};
}

Rational MarginParam::c() const { return Rational{2 * s_ - t_, s_}; }

int atom_level(int atom) {
  int level = 0;
  for (int a = atom; a != 0; a >>= 1) level += a & 1;
  return level;
}

std::string atom_label(int atom, int d) {
  std::string label(static_cast<size_t>(d), '0');
  for (int i = 1; i <= d; ++i) {
    if (atom_coordinate(atom, i)) label[static_cast<size_t>(i - 1)] = '1';
  }
  return label;
}

BernoulliPmf::BernoulliPmf(int d, std::vector<Rational> values)
    : d_(d), values_(std::move(values)) {}

BernoulliPmf BernoulliPmf::from_values(int d, std::vector<Rational> values) {
  if (d < kMinDimension || d > kMaxDimension) {
    throw UnsupportedDimension{"dimension " + std::to_string(d) +
                               " is outside the supported range [2, 4]"};
  }
  if (values.size() != (size_t{1} << d)) {
    throw DimensionMismatch{"expected " + std::to_string(1 << d) +
                            " values for d = " + std::to_string(d) + ", got " +
                            std::to_string(values.size())};
  }
  Rational total{0};
  for (size_t a = 0; a < values.size(); ++a) {
    if (values[a] < 0) {
      throw NegativeMass{"negative mass " + to_string(values[a]) + " at atom " +
                         atom_label(static_cast<int>(a), d)};
    }
    total += values[a];
  }
  if (total != 1) {
    throw NotNormalized{"pmf sums to " + to_string(total) + ", not 1"};
  }
  return BernoulliPmf{d, std::move(values)};
}

std::vector<int> BernoulliPmf::support() const {
  std::vector<int> atoms;
  for (int a = 0; a < size(); ++a) {
    if (values_[static_cast<size_t>(a)] > 0) atoms.push_back(a);
  }
  return atoms;
}

SumPmf::SumPmf(int d, std::vector<Rational> masses) : d_(d), masses_(std::move(masses)) {
  if (masses_.size() != static_cast<size_t>(d_) + 1) {
    throw DimensionMismatch{"sum law over {0..d} needs d + 1 masses"};
  }
  Rational total{0};
  for (const auto& m : masses_) {
    if (m < 0) throw NegativeMass{"negative mass in sum law"};
    total += m;
  }
  if (total != 1) throw NotNormalized{"sum law sums to " + to_string(total)};
}

Rational SumPmf::mean() const {
  Rational out{0};
  for (int k = 0; k <= d_; ++k) out += k * masses_[static_cast<size_t>(k)];
  return out;
}

Rational SumPmf::variance() const {
  Rational m1{0};
  Rational m2{0};
  for (int k = 0; k <= d_; ++k) {
    m1 += k * masses_[static_cast<size_t>(k)];
    m2 += k * k * masses_[static_cast<size_t>(k)];
  }
  return m2 - m1 * m1;
}

Rational SumPmf::stop_loss(int threshold) const {
  Rational out{0};
  for (int k = std::max(0, threshold + 1); k <= d_; ++k) {
    out += (k - threshold) * masses_[static_cast<size_t>(k)];
  }
  return out;
}

BernoulliPmf make_pmf(int d, std::vector<Rational> values) {
  return BernoulliPmf::from_values(d, std::move(values));
}

namespace {

void require_coordinate(const BernoulliPmf& f, int i) {
  if (i < 1 || i > f.dimension()) {
    throw OutOfRange{"coordinate index " + std::to_string(i) + " is outside [1, " +
                     std::to_string(f.dimension()) + "]"};
  }
}

}  // namespace

Rational margin(const BernoulliPmf& f, int i) {
  require_coordinate(f, i);
  Rational out{0};
  for (int a = 0; a < f.size(); ++a) {
    if (atom_coordinate(a, i)) out += f.value(a);
  }
  return out;
}

Rational second_moment(const BernoulliPmf& f, int i, int j) {
  require_coordinate(f, i);
  require_coordinate(f, j);
  Rational out{0};
  for (int a = 0; a < f.size(); ++a) {
    if (atom_coordinate(a, i) && atom_coordinate(a, j)) out += f.value(a);
  }
  return out;
}

Rational correlation(const BernoulliPmf& f, int i, int j) {
  Rational p = margin(f, i);
  if (p != margin(f, j)) {
    throw NotAMember{"correlation needs equal margins, got " + to_string(p) +
                     " and " + to_string(margin(f, j))};
  }
  if (p == 0 || p == 1) {
    throw DegenerateMargin{"margin " + to_string(p) + " has zero variance"};
  }
  return (second_moment(f, i, j) - p * p) / (p * (1 - p));
}

SumPmf sum_distribution(const BernoulliPmf& f) {
  std::vector<Rational> masses(static_cast<size_t>(f.dimension()) + 1, Rational{0});
  for (int a = 0; a < f.size(); ++a) {
    masses[static_cast<size_t>(atom_level(a))] += f.value(a);
  }
  return SumPmf{f.dimension(), std::move(masses)};
}

Rational variance_of_sum(const BernoulliPmf& f) {
  return sum_distribution(f).variance();
}

std::optional<Rational> common_margin(const BernoulliPmf& f) {
  Rational first = margin(f, 1);
  for (int i = 2; i <= f.dimension(); ++i) {
    if (margin(f, i) != first) return std::nullopt;
  }
  return first;
}

MarginParam class_param(const BernoulliPmf& f) {
  auto p = common_margin(f);
  if (!p) throw NotAMember{"margins differ; the pmf is not in any equal-margin class"};
  return MarginParam{*p};
}

}  // namespace bernpoly
