#include "bernpoly/reports.hpp"

#include "bernpoly/algebra.hpp"
#include "bernpoly/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace bernpoly {
namespace {

std::string render(const Rational& q, int decimals) {
  std::string out = to_string(q);
  if (decimals >= 0) out += " (" + to_decimal_string(q, decimals) + ")";
  return out;
}

std::string vector_line(const BernoulliPmf& f, int decimals) {
  std::string out = "(";
  for (int a = 0; a < f.size(); ++a) {
    if (a > 0) out += ", ";
    out += render(f.value(a), decimals);
  }
  out += ")";
  return out;
}

int expected_vertex_count(const MarginParam& p) {
  if (p.p() == Rational{1, 2}) return 6;
  return p.p() <= Rational{1, 3} ? 6 : 9;
}

// Tag sanity for a closed-form set: kernel columns land in the kernel of
// the monomial map, the two type-0 columns carry nonzero scalars of
// opposite sign, and the support-X1X2 columns avoid levels 0 and 3.
bool check_tags(const ExtremalSet& es, std::string& detail) {
  bool saw_plus = false;
  bool saw_minus = false;
  for (size_t i = 0; i < es.vertices.size(); ++i) {
    const auto gamma = express_in_fundamentals(apply_map(es.p, es.vertices[i]));
    if (!gamma) {
      detail += "vertex " + es.names[i] + " is not a scalar multiple of F+; ";
      return false;
    }
    switch (es.tags[i]) {
      case VertexTag::kKernel:
        if (*gamma != 0) {
          detail += "kernel vertex " + es.names[i] + " has gamma != 0; ";
          return false;
        }
        break;
      case VertexTag::kType0Plus:
        if (*gamma <= 0) {
          detail += "type0-plus vertex " + es.names[i] + " has gamma <= 0; ";
          return false;
        }
        saw_plus = true;
        break;
      case VertexTag::kType0Minus:
        if (*gamma >= 0) {
          detail += "type0-minus vertex " + es.names[i] + " has gamma >= 0; ";
          return false;
        }
        saw_minus = true;
        break;
      case VertexTag::kSupportX1X2:
        for (int a : es.vertices[i].support()) {
          if (atom_level(a) == 0 || atom_level(a) == 3) {
            detail += "support-X1X2 vertex " + es.names[i] + " touches level 0 or 3; ";
            return false;
          }
        }
        break;
      default:
        detail += "unexpected tag on " + es.names[i] + "; ";
        return false;
    }
  }
  if (!saw_plus || !saw_minus) {
    detail += "type-0 pair incomplete; ";
    return false;
  }
  return true;
}

std::string describe_vector(const std::vector<Rational>& values) {
  std::string out = "(";
  for (size_t a = 0; a < values.size(); ++a) {
    if (a > 0) out += ",";
    out += to_string(values[a]);
  }
  out += ")";
  return out;
}

}  // namespace

std::vector<MarginParam> default_verify_grid(int max_denominator) {
  std::set<Rational> seen;
  for (int t = 2; t <= max_denominator; ++t) {
    for (int s = 1; 2 * s <= t; ++s) {
      seen.insert(Rational{s, t});
    }
  }
  std::vector<MarginParam> out;
  out.reserve(seen.size());
  for (const auto& p : seen) out.emplace_back(p);
  return out;
}

std::string VerifyRecord::line() const {
  std::string out = pass() ? "PASS" : "FAIL";
  out += " p=" + to_string(p.p());
  out += " closed=" + std::to_string(closed_count);
  out += " oracle=" + std::to_string(oracle_count);
  if (!detail.empty()) out += "  [" + detail + "]";
  return out;
}

VerifyRecord verify_closed_form(const MarginParam& p,
                                std::optional<std::pair<int, int>> corrupt) {
  const ExtremalSet closed = closed_form_extremals(p);
  const ExtremalSet oracle = enumerate_vertices_oracle(build_constraints(3, p));

  if (corrupt && (corrupt->first < 0 || corrupt->first >= closed.count() ||
                  corrupt->second < 0 || corrupt->second >= 8)) {
    throw OutOfRange{"corruption indices must address a table entry"};
  }

  std::set<std::vector<Rational>> closed_set;
  for (size_t i = 0; i < closed.vertices.size(); ++i) {
    std::vector<Rational> values = closed.vertices[i].values();
    if (corrupt && corrupt->first == static_cast<int>(i)) {
      values[static_cast<size_t>(corrupt->second)] += Rational{1, 1000};
    }
    closed_set.insert(std::move(values));
  }
  std::set<std::vector<Rational>> oracle_set;
  for (const auto& v : oracle.vertices) oracle_set.insert(v.values());

  VerifyRecord record{p, false, false, false, 0, 0, {}};
  record.closed_count = static_cast<int>(closed_set.size());
  record.oracle_count = static_cast<int>(oracle_set.size());
  record.set_equal = closed_set == oracle_set;
  if (!record.set_equal) {
    for (const auto& v : closed_set) {
      if (!oracle_set.count(v)) record.detail += "closed-only " + describe_vector(v) + "; ";
    }
    for (const auto& v : oracle_set) {
      if (!closed_set.count(v)) record.detail += "oracle-only " + describe_vector(v) + "; ";
    }
  }
  const int expected = expected_vertex_count(p);
  record.count_ok = record.closed_count == expected && record.oracle_count == expected;
  if (!record.count_ok) {
    record.detail += "expected " + std::to_string(expected) + " vertices; ";
  }
  record.tags_ok = corrupt ? record.set_equal : check_tags(closed, record.detail);
  return record;
}

std::vector<SweepRecord> sweep_d4(int s_from, int s_to, int threads) {
  if (s_from < 1 || s_to > 50 || s_from > s_to) {
    throw OutOfRange{"sweep range must satisfy 1 <= from <= to <= 50"};
  }
  const int jobs = s_to - s_from + 1;
  std::vector<SweepRecord> records(static_cast<size_t>(jobs));

  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, jobs);

  std::atomic<int> next{0};
  auto run = [&]() {
    for (int slot = next.fetch_add(1); slot < jobs; slot = next.fetch_add(1)) {
      const int s = s_from + slot;
      const auto start = std::chrono::steady_clock::now();
      const MarginParam p{Rational{s, 100}};
      const ConstraintSystem cs = build_constraints(4, p);
      const ExtremalSet vertices = enumerate_vertices_oracle(cs);
      for (const auto& v : vertices.vertices) {
        if (!is_member(cs, v)) throw Error{"sweep: enumerated vertex fails membership"};
        if (v.support().size() > 5) throw Error{"sweep: vertex support exceeds the bound"};
      }
      const auto stop = std::chrono::steady_clock::now();
      records[static_cast<size_t>(slot)] = SweepRecord{
          s, 100, p.p(), vertices.count(),
          std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()};
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::exception_ptr> worker_errors(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&run, &worker_errors, w]() {
        try {
          run();
        } catch (...) {
          worker_errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& error : worker_errors) {
      if (error) std::rethrow_exception(error);
    }
  }
  return records;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::string out = "s,p,nr,elapsed_ms\n";
  for (const auto& r : records) {
    out += std::to_string(r.s) + "," + to_string(r.p) + "," +
           std::to_string(r.vertex_count) + "," + std::to_string(r.elapsed_ms) + "\n";
  }
  return out;
}

std::string extremals_report(const ExtremalSet& es, int decimals) {
  std::string out = "# Extremal pmfs of the class with p = " + to_string(es.p.p()) +
                    ", d = " + std::to_string(es.d) + "\n\n";
  const int n = 1 << es.d;
  out += "| vertex | tag |";
  for (int a = 0; a < n; ++a) out += " f_" + atom_label(a, es.d) + " |";
  out += "\n|---|---|";
  for (int a = 0; a < n; ++a) out += "---|";
  out += "\n";
  for (size_t i = 0; i < es.vertices.size(); ++i) {
    out += "| " + es.names[i] + " | " + std::string(tag_name(es.tags[i])) + " |";
    for (int a = 0; a < n; ++a) out += " " + render(es.vertices[i].value(a), decimals) + " |";
    out += "\n";
  }
  return out;
}

std::string sigma_cm_report(const MarginParam& p, int decimals) {
  const SigmaCmPolytope polytope = sigma_cm_polytope(p);
  std::string out =
      "# Sigma-countermonotone polytope at p = " + to_string(p.p()) + "\n\n";

  out += "generators: " + std::to_string(polytope.generators.size()) + "\n";
  for (size_t i = 0; i < polytope.generators.size(); ++i) {
    out += "- g" + std::to_string(i + 1) + " = " +
           vector_line(polytope.generators[i], decimals) + "\n";
  }

  const BernoulliPmf& first = polytope.generators.front();
  const SumPmf law = sum_distribution(first);
  out += "\nsum law: (";
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) out += ", ";
    out += render(law.mass(k), decimals);
  }
  out += ")\n";
  out += "mu2_plus = " + render(mu2_plus(first), decimals) + "\n";
  out += "V(S) = " + render(variance_of_sum(first), decimals) + "\n";
  if (p.p() == Rational{1, 3}) {
    out += "the sum is degenerate at 1 (joint mix): every allocation is zero\n";
  }

  out += "\nShapley allocations (phi_i = Cov(X_i, S)):\n";
  for (size_t i = 0; i < polytope.generators.size(); ++i) {
    const ShapleyAllocation alloc = shapley_covariance(polytope.generators[i]);
    out += "- g" + std::to_string(i + 1) + ": (";
    for (size_t j = 0; j < alloc.phis.size(); ++j) {
      if (j > 0) out += ", ";
      out += render(alloc.phis[j], decimals);
    }
    out += ")\n";
  }

  if (p.p() > Rational{1, 3}) {
    const BernoulliPmf fe = exchangeable_member(p);
    out += "\nexchangeable member: " + vector_line(fe, decimals) + "\n";
    out += "equi-correlation = " + render(correlation(fe, 1, 2), decimals) + "\n";
    const ShapleyAllocation alloc = shapley_covariance(fe);
    out += "its allocation: (";
    for (size_t j = 0; j < alloc.phis.size(); ++j) {
      if (j > 0) out += ", ";
      out += render(alloc.phis[j], decimals);
    }
    out += ")\n";
  }
  return out;
}

std::string pmf_report(const BernoulliPmf& f, int decimals) {
  const MarginParam p = class_param(f);
  if (f.dimension() != 3) {
    throw UnsupportedDimension{"reports cover the three-dimensional class"};
  }
  std::string out = "# pmf report (d = 3, p = " + to_string(p.p()) + ")\n\n";
  out += "values: " + vector_line(f, decimals) + "\n";

  const ExtremalSet es = closed_form_extremals(p);
  const ConvexWeights weights = decompose(es, f);
  out += "\ndecomposition over the closed-form vertices:\n";
  for (size_t i = 0; i < weights.weights.size(); ++i) {
    if (weights.weights[i] == 0) continue;
    out += "- " + es.names[i] + ": " + render(weights.weights[i], decimals) + "\n";
  }

  const CorrelationProfile profile = correlation_profile(f);
  out += "\ncorrelations:\n\n| pair | rho |\n|---|---|\n";
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      out += "| (" + std::to_string(i) + "," + std::to_string(j) + ") | " +
             render(profile.rho[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                    decimals) +
             " |\n";
    }
  }
  out += "\nclassification: " + std::string(pairwise_class_name(profile.classification)) +
         "\n";
  out += "sigma-countermonotone: " +
         std::string(is_sigma_countermonotone(f) ? "yes" : "no") + "\n";
  out += "sigma-cx-smallest: " + std::string(is_sigma_cx_smallest(f) ? "yes" : "no") +
         "\n";

  const SumPmf law = sum_distribution(f);
  out += "sum law: (";
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) out += ", ";
    out += render(law.mass(k), decimals);
  }
  out += ")\n";

  const CoalitionGame game = variance_game(f);
  const ShapleyAllocation alloc = shapley_covariance(f);
  out += "V(S) = " + render(game.grand_value(), decimals) + "\n";
  out += "Shapley allocation: (";
  for (size_t j = 0; j < alloc.phis.size(); ++j) {
    if (j > 0) out += ", ";
    out += render(alloc.phis[j], decimals);
  }
  out += ")\n";
  out += "modularity: " + std::string(modularity_name(classify_modularity(game))) + "\n";
  return out;
}

}  // namespace bernpoly
