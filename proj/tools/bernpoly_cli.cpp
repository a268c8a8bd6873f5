// Command-line surface: closed-form vertex tables, closed-form-versus-
// brute-force verification, the sigma-countermonotone report, the d = 4
// vertex-count sweep, and per-pmf reports.
//
// Exit codes: 0 ok, 2 usage or parse failure, 3 out-of-range parameter,
// 4 i/o failure, 5 semantic rejection (e.g. unequal margins).

#include "bernpoly/algebra.hpp"
#include "bernpoly/errors.hpp"
#include "bernpoly/io.hpp"
#include "bernpoly/reports.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRange = 3;
constexpr int kExitIo = 4;
constexpr int kExitSemantic = 5;

using namespace bernpoly;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError{"cannot open " + path + " for writing"};
  out << content;
  if (!out) throw IoError{"write to " + path + " failed"};
}

int sweep_threads(int requested) {
  int threads = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* cap_text = std::getenv("BP_THREADS")) {
    const int cap = std::atoi(cap_text);
    if (cap > 0 && cap < threads) threads = cap;
  }
  return threads;
}

int run_extremals(const std::string& p_text, int d, const std::string& format,
                  int decimals, const std::string& out_path) {
  const MarginParam p = MarginParam::parse(p_text);
  ExtremalSet es = d == 3 ? closed_form_extremals(p)
                          : enumerate_vertices_oracle(build_constraints(d, p));
  std::string content;
  if (format == "json") {
    content = extremal_set_to_json(es).dump(2) + "\n";
  } else if (format == "csv") {
    content = extremal_set_to_csv(es);
  } else {
    content = extremals_report(es, decimals);
  }
  write_output(out_path, content);
  return kExitOk;
}

int run_verify(const std::vector<std::string>& grid_text, int max_denominator,
               const std::string& corrupt_text) {
  std::vector<MarginParam> grid;
  if (grid_text.empty()) {
    grid = default_verify_grid(max_denominator);
  } else {
    for (const auto& entry : grid_text) grid.push_back(MarginParam::parse(entry));
  }

  std::optional<std::pair<int, int>> corrupt;
  if (!corrupt_text.empty()) {
    const auto comma = corrupt_text.find(',');
    if (comma == std::string::npos) {
      throw ParseError{"--corrupt takes VERTEX,ATOM (0-based indices)"};
    }
    corrupt = {std::stoi(corrupt_text.substr(0, comma)),
               std::stoi(corrupt_text.substr(comma + 1))};
  }

  bool all_pass = true;
  for (const auto& p : grid) {
    const VerifyRecord record = verify_closed_form(p, corrupt);
    std::cout << record.line() << "\n";
    all_pass = all_pass && record.pass();
  }
  std::cout << (all_pass ? "all comparisons passed" : "verification FAILED") << "\n";
  return all_pass ? kExitOk : kExitFail;
}

int run_sigma_cm(const std::string& p_text, const std::string& format, int decimals,
                 const std::string& out_path) {
  const MarginParam p = MarginParam::parse(p_text);
  std::string content;
  if (format == "json") {
    const SigmaCmPolytope polytope = sigma_cm_polytope(p);
    nlohmann::json generators = nlohmann::json::array();
    nlohmann::json allocations = nlohmann::json::array();
    for (const auto& g : polytope.generators) {
      generators.push_back(pmf_to_json(g));
      const CoalitionGame game = variance_game(g);
      allocations.push_back(allocation_to_json(shapley_covariance(g), game.grand_value(),
                                               classify_modularity(game)));
    }
    nlohmann::json j;
    j["p"] = to_string(p.p());
    j["generators"] = std::move(generators);
    j["mu2_plus"] = to_string(mu2_plus(polytope.generators.front()));
    j["variance_of_sum"] = to_string(variance_of_sum(polytope.generators.front()));
    j["allocations"] = std::move(allocations);
    if (p.p() > Rational{1, 3}) {
      const BernoulliPmf fe = exchangeable_member(p);
      nlohmann::json je;
      je["pmf"] = pmf_to_json(fe);
      je["equi_correlation"] = to_string(correlation(fe, 1, 2));
      const CoalitionGame game = variance_game(fe);
      je["allocation"] = allocation_to_json(shapley_covariance(fe), game.grand_value(),
                                            classify_modularity(game));
      j["exchangeable"] = std::move(je);
    } else {
      j["exchangeable"] = nullptr;
    }
    content = j.dump(2) + "\n";
  } else {
    content = sigma_cm_report(p, decimals);
  }
  write_output(out_path, content);
  return kExitOk;
}

int run_sweep(int s_from, int s_to, const std::string& out_path, int threads) {
  if (s_from < 1 || s_to > 50 || s_from > s_to) {
    std::cerr << "sweep range must satisfy 1 <= from <= to <= 50\n";
    return kExitUsage;
  }
  const auto records = sweep_d4(s_from, s_to, sweep_threads(threads));
  write_output(out_path, sweep_to_csv(records));
  for (const auto& r : records) {
    std::cout << r.s << " " << r.vertex_count << "\n";
  }
  return kExitOk;
}

int run_report(const std::string& path, const std::string& format, int decimals) {
  std::ifstream in(path);
  if (!in) throw IoError{"cannot open " + path};
  std::stringstream buffer;
  buffer << in.rdbuf();
  const BernoulliPmf f = pmf_from_json_string(buffer.str());

  if (format == "json") {
    const MarginParam p = class_param(f);
    const ExtremalSet es = closed_form_extremals(p);
    const ConvexWeights weights = decompose(es, f);
    const CoalitionGame game = variance_game(f);
    nlohmann::json j;
    j["pmf"] = pmf_to_json(f);
    j["p"] = to_string(p.p());
    nlohmann::json jw = nlohmann::json::object();
    for (size_t i = 0; i < weights.weights.size(); ++i) {
      jw[es.names[i]] = to_string(weights.weights[i]);
    }
    j["weights"] = std::move(jw);
    j["correlations"] = correlation_profile_to_json(correlation_profile(f));
    j["sigma_countermonotone"] = is_sigma_countermonotone(f);
    j["sigma_cx_smallest"] = is_sigma_cx_smallest(f);
    j["allocation"] = allocation_to_json(shapley_covariance(f), game.grand_value(),
                                         classify_modularity(game));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << pmf_report(f, decimals);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometry, dependence and variance allocation of "
               "equal-margin Bernoulli classes"};
  app.require_subcommand(1);

  std::string p_text;
  std::string format = "table";
  std::string out_path;
  std::string file_path;
  std::string corrupt_text;
  std::vector<std::string> grid_text;
  int d = 3;
  int decimals = -1;
  int max_denominator = 12;
  int s_from = 1;
  int s_to = 50;
  int threads = 0;

  auto* extremals = app.add_subcommand("extremals", "emit the vertex set at p");
  extremals->add_option("--p", p_text, "margin parameter as s/t")->required();
  extremals->add_option("--d", d, "dimension (3 = closed form, 4 = brute force)")
      ->check(CLI::IsMember({3, 4}));
  extremals->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  extremals->add_option("--decimals", decimals, "display-only decimal digits");
  extremals->add_option("--out", out_path, "write to a file instead of stdout");

  auto* verify = app.add_subcommand(
      "verify", "compare closed-form vertices against the brute-force route");
  verify->add_option("--grid", grid_text, "margin parameters (default: t <= 12)")
      ->delimiter(',');
  verify->add_option("--max-den", max_denominator, "default grid denominator bound");
  verify->add_option("--corrupt", corrupt_text,
                     "perturb closed-form entry VERTEX,ATOM by 1/1000 (negative control)");

  auto* sigma = app.add_subcommand("sigma-cm", "sigma-countermonotone polytope report");
  sigma->add_option("--p", p_text, "margin parameter as s/t")->required();
  sigma->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  sigma->add_option("--decimals", decimals, "display-only decimal digits");
  sigma->add_option("--out", out_path, "write to a file instead of stdout");

  auto* sweep = app.add_subcommand("sweep-d4", "d = 4 vertex counts for p = s/100");
  sweep->add_option("--from", s_from, "first s")->required();
  sweep->add_option("--to", s_to, "last s")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--threads", threads, "worker threads (BP_THREADS caps this)");

  auto* report = app.add_subcommand("report", "analyze a pmf file");
  report->add_option("--file", file_path, "pmf JSON file")->required();
  report->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  report->add_option("--decimals", decimals, "display-only decimal digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (extremals->parsed()) return run_extremals(p_text, d, format, decimals, out_path);
    if (verify->parsed()) return run_verify(grid_text, max_denominator, corrupt_text);
    if (sigma->parsed()) return run_sigma_cm(p_text, format, decimals, out_path);
    if (sweep->parsed()) return run_sweep(s_from, s_to, out_path, threads);
    if (report->parsed()) return run_report(file_path, format, decimals);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const UnsupportedDimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
