#include "bernpoly/rational.hpp"

#include "bernpoly/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace bernpoly {
namespace {

bool is_canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  if (s.size() > 1 && s.front() == '0') return false;  // no zero padding
  return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }

  std::string_view num_text = body;
  std::string_view den_text;
  bool has_den = false;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
    has_den = true;
  }
  if (!is_canonical_digits(num_text)) return std::nullopt;
  if (has_den && !is_canonical_digits(den_text)) return std::nullopt;

  Integer num{std::string(num_text)};
  Integer den = has_den ? Integer{std::string(den_text)} : Integer{1};
  if (den <= 0) return std::nullopt;
  if (negative && num == 0) return std::nullopt;  // "-0" is not canonical
  if (boost::multiprecision::gcd(num, den) != 1) return std::nullopt;
  if (negative) num = -num;
  return Rational{num, den};
}

Rational parse_rational(std::string_view text) {
  if (auto q = try_parse_rational(text)) return *q;
  throw ParseError{"not a canonical rational: \"" + std::string(text) + "\""};
}

std::string to_string(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  std::string out = num.str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

std::string to_decimal_string(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  if (digits > 40) digits = 40;
  Integer num = numerator(q);
  Integer den = denominator(q);
  bool negative = num < 0;
  if (negative) num = -num;

  Integer scale = boost::multiprecision::pow(Integer{10}, static_cast<unsigned>(digits));
  Integer scaled = (num * scale * 2 + den) / (den * 2);  // round half up
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;

  std::string out = whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    f.insert(f.begin(), static_cast<size_t>(digits) - f.size(), '0');
    out += '.';
    out += f;
  }
  if (negative && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

}  // namespace bernpoly
