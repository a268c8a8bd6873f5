#include "bernpoly/algebra.hpp"

#include "bernpoly/errors.hpp"

namespace bernpoly {
namespace {

void require_d3(int d, const char* what) {
  if (d != 3) {
    throw UnsupportedDimension{std::string(what) + " is defined for d = 3 only"};
  }
}

void require_member_of(const MarginParam& p, const BernoulliPmf& f) {
  auto m = common_margin(f);
  if (!m || *m != p.p()) {
    throw NotAMember{"pmf margins do not all equal p = " + to_string(p.p())};
  }
}

}  // namespace

MultilinearPoly::MultilinearPoly(int ambient_dimension, std::vector<Rational> coeffs)
    : d_(ambient_dimension), coeffs_(std::move(coeffs)) {
  if (d_ < 2) throw UnsupportedDimension{"polynomial ambient dimension must be >= 2"};
  if (coeffs_.size() != (size_t{1} << (d_ - 1))) {
    throw DimensionMismatch{"expected " + std::to_string(1 << (d_ - 1)) +
                            " coefficients"};
  }
}

MultilinearPoly MultilinearPoly::zero(int ambient_dimension) {
  return MultilinearPoly{ambient_dimension,
                         std::vector<Rational>(size_t{1} << (ambient_dimension - 1),
                                               Rational{0})};
}

bool MultilinearPoly::is_zero() const {
  for (const auto& a : coeffs_) {
    if (a != 0) return false;
  }
  return true;
}

Rational MultilinearPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != static_cast<size_t>(variable_count())) {
    throw DimensionMismatch{"evaluation point has wrong arity"};
  }
  Rational out{0};
  for (size_t mask = 0; mask < coeffs_.size(); ++mask) {
    Rational term = coeffs_[mask];
    for (int k = 0; k < variable_count(); ++k) {
      if ((mask >> k) & 1) term *= point[static_cast<size_t>(k)];
    }
    out += term;
  }
  return out;
}

std::string MultilinearPoly::to_string() const {
  std::string out;
  for (size_t mask = 0; mask < coeffs_.size(); ++mask) {
    const Rational& a = coeffs_[mask];
    if (a == 0) continue;
    Rational magnitude = a < 0 ? Rational{-a} : a;
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    std::string monomial;
    for (int k = 0; k < variable_count(); ++k) {
      if ((mask >> k) & 1) {
        if (!monomial.empty()) monomial += " ";
        monomial += "x" + std::to_string(k + 1);
      }
    }
    if (monomial.empty()) {
      out += bernpoly::to_string(magnitude);
    } else {
      if (magnitude != 1) out += bernpoly::to_string(magnitude) + " ";
      out += monomial;
    }
  }
  return out.empty() ? "0" : out;
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  if (d_ != other.d_) throw DimensionMismatch{"polynomial dimensions differ"};
  for (size_t mask = 0; mask < coeffs_.size(); ++mask) {
    coeffs_[mask] += other.coeffs_[mask];
  }
  return *this;
}

MultilinearPoly operator*(const Rational& scalar, MultilinearPoly poly) {
  for (auto& a : poly.coeffs_) a *= scalar;
  return poly;
}

MultilinearPoly operator-(MultilinearPoly poly) {
  for (auto& a : poly.coeffs_) a = -a;
  return poly;
}

MultilinearPoly map_column(const MarginParam& p, int atom) {
  if (atom < 0 || atom > 7) throw OutOfRange{"atom index must be in [0, 7]"};
  const Rational c = p.c();
  std::vector<Rational> a(4, Rational{0});
  switch (atom) {
    case 0: a[0] = 1; break;                      // 1
    case 1: a[1] = 1; break;                      // x1
    case 2: a[2] = 1; break;                      // x2
    case 3: a[3] = 1; break;                      // x1 x2
    case 4: a[0] = c; a[3] = -1; break;           // -x1 x2 + c
    case 5: a[0] = c; a[2] = -1; break;           // -x2 + c
    case 6: a[0] = c; a[1] = -1; break;           // -x1 + c
    case 7: a[0] = c - 1; break;                  // -1 + c
  }
  return MultilinearPoly{3, std::move(a)};
}

MultilinearPoly apply_map(const MarginParam& p, const BernoulliPmf& f) {
  require_d3(f.dimension(), "the monomial map");
  require_member_of(p, f);
  MultilinearPoly out = MultilinearPoly::zero(3);
  for (int atom = 0; atom < f.size(); ++atom) {
    if (f.value(atom) != 0) out += f.value(atom) * map_column(p, atom);
  }
  return out;
}

std::vector<BernoulliPmf> kernel_basis(int d, const MarginParam& mp) {
  if (d < kMinDimension || d > kMaxDimension) {
    throw UnsupportedDimension{"kernel basis supports d in [2, 4]"};
  }
  const Rational& p = mp.p();
  const int n = 1 << d;
  std::vector<BernoulliPmf> basis;

  std::vector<Rational> two_point(static_cast<size_t>(n), Rational{0});
  two_point.front() = 1 - p;
  two_point.back() = p;
  basis.push_back(make_pmf(d, std::move(two_point)));

  for (int atom = 1; atom < n / 2; ++atom) {
    std::vector<Rational> values(static_cast<size_t>(n), Rational{0});
    values[0] = 1 - 2 * p;
    values[static_cast<size_t>(atom)] = p;
    values[static_cast<size_t>(n - 1 - atom)] = p;
    basis.push_back(make_pmf(d, std::move(values)));
  }
  return basis;
}

std::pair<MultilinearPoly, MultilinearPoly> fundamental_polynomials(int d) {
  require_d3(d, "the fundamental polynomial pair");
  MultilinearPoly plus{3, {Rational{1}, Rational{-1}, Rational{-1}, Rational{1}}};
  MultilinearPoly minus = -plus;
  return {std::move(plus), std::move(minus)};
}

std::optional<Rational> express_in_fundamentals(const MultilinearPoly& poly) {
  if (poly.ambient_dimension() != 3) {
    throw UnsupportedDimension{"scalar expression over F+ is defined for d = 3 only"};
  }
  const Rational& gamma = poly.coefficient(0);
  if (poly.coefficient(3) == gamma && poly.coefficient(1) == -gamma &&
      poly.coefficient(2) == -gamma) {
    return gamma;
  }
  return std::nullopt;
}

bool is_in_kernel(const MarginParam& p, const BernoulliPmf& f) {
  return apply_map(p, f).is_zero();
}

}  // namespace bernpoly
