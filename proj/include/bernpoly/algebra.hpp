#pragma once

#include "bernpoly/pmf.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bernpoly {

// Polynomial with rational coefficients over square-free monomials in
// x_1 .. x_{d-1}. Coefficients are indexed by exponent masks: bit k-1 of the
// index is the exponent of x_k, so for d = 3 index 0 is the constant term,
// 1 is x1, 2 is x2 and 3 is x1*x2. The coefficient vector is the canonical
// form: the zero polynomial has all coefficients zero.
class MultilinearPoly {
 public:
  MultilinearPoly(int ambient_dimension, std::vector<Rational> coeffs);
  static MultilinearPoly zero(int ambient_dimension);

  int ambient_dimension() const { return d_; }
  int variable_count() const { return d_ - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(int exponent_mask) const {
    return coeffs_[static_cast<size_t>(exponent_mask)];
  }

  bool is_zero() const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Canonical ordering a00 + a10 x1 + a01 x2 + a11 x1 x2 with exact
  // coefficients.
  std::string to_string() const;

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  friend MultilinearPoly operator+(MultilinearPoly lhs, const MultilinearPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend MultilinearPoly operator*(const Rational& scalar, MultilinearPoly poly);
  friend MultilinearPoly operator-(MultilinearPoly poly);

  bool operator==(const MultilinearPoly&) const = default;

 private:
  int d_;
  std::vector<Rational> coeffs_;
};

// Component `atom` of the monomial row vector m(x) = (m+ || m-) with
// m+ = (1, x1, x2, x1 x2) and m- = (-x1 x2 + c, -x2 + c, -x1 + c, -1 + c),
// aligned with the reverse-lex atom order (d = 3 only).
MultilinearPoly map_column(const MarginParam& p, int atom);

// The map into the polynomial ring: f -> m(x) f. Requires d = 3 and all
// margins of f equal to p.
MultilinearPoly apply_map(const MarginParam& p, const BernoulliPmf& f);

// Basis of the set of class members mapped to the zero polynomial: the
// two-point pmf (1-p) delta_0 + p delta_{1...1}, plus one pmf
// (1-2p) delta_0 + p delta_x + p delta_{1-x} per complementary atom pair
// {x, 1-x} with x not in {0...0, 1...1}. For d = 3 in reverse-lex
// coordinates these are the table columns r5, r3, r2, r1.
std::vector<BernoulliPmf> kernel_basis(int d, const MarginParam& p);

// The fundamental polynomials F+ = x1 x2 - x1 - x2 + 1 and F- = -F+ (d = 3).
std::pair<MultilinearPoly, MultilinearPoly> fundamental_polynomials(int d = 3);

// The scalar gamma with poly = gamma * F+, when one exists (F- is absorbed
// by the sign of gamma). Every image of the map admits such a gamma.
std::optional<Rational> express_in_fundamentals(const MultilinearPoly& poly);

// True iff apply_map(p, f) is the zero polynomial.
bool is_in_kernel(const MarginParam& p, const BernoulliPmf& f);

}  // namespace bernpoly
