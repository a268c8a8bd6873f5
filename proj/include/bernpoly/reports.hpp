#pragma once

#include "bernpoly/dependence.hpp"
#include "bernpoly/games.hpp"
#include "bernpoly/polytope.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bernpoly {

// The verification grid: every distinct p = s/t with 2 <= t <= max_denominator
// and 0 < s/t <= 1/2, in lowest terms, ascending.
std::vector<MarginParam> default_verify_grid(int max_denominator = 12);

// One closed-form-versus-brute-force comparison at a single p.
struct VerifyRecord {
  MarginParam p;
  bool set_equal = false;
  bool count_ok = false;
  bool tags_ok = false;
  int closed_count = 0;
  int oracle_count = 0;
  std::string detail;

  bool pass() const { return set_equal && count_ok && tags_ok; }
  std::string line() const;
};

// Compares the closed-form vertex set against the independent enumeration
// at p. When `corrupt` = (vertex, atom) is given, that closed-form entry is
// perturbed by +1/1000 first (negative control; the comparison must fail).
VerifyRecord verify_closed_form(const MarginParam& p,
                                std::optional<std::pair<int, int>> corrupt = {});

struct SweepRecord {
  int s = 0;
  int t = 100;
  Rational p;
  int vertex_count = 0;
  long long elapsed_ms = 0;
};

// d = 4 vertex counts for p = s/100, s in [s_from, s_to]. Each vertex is
// re-checked for membership and for the support bound (at most rank of the
// stacked system nonzero entries) before it is counted. The per-s runs are
// independent and execute on `threads` workers (0 = hardware concurrency);
// output is sorted by s and does not depend on scheduling.
std::vector<SweepRecord> sweep_d4(int s_from, int s_to, int threads = 0);

std::string sweep_to_csv(const std::vector<SweepRecord>& records);

// Human-readable reports. `decimals` >= 0 appends display-only decimal
// renderings next to the exact values.
std::string extremals_report(const ExtremalSet& es, int decimals = -1);
std::string sigma_cm_report(const MarginParam& p, int decimals = -1);
std::string pmf_report(const BernoulliPmf& f, int decimals = -1);

}  // namespace bernpoly
