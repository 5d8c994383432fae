// Batch front-end for the Hermitian one-point code library: build and report
// codes, run the verification suites, and emit machine-readable artifacts.
//
// Exit codes: 0 success, 2 usage error, 3 budget exceeded, 4 verification
// failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermitian/cohomology.hpp"
#include "hermitian/improve.hpp"
#include "hermitian/minwords.hpp"
#include "hermitian/onepoint.hpp"
#include "hermitian/smallwords.hpp"
#include "hermitian/verify.hpp"

namespace {

using hermitian::Budget;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  return std::strtoull(v, nullptr, 10);
}

struct Common {
  Budget budget;
  std::string out_path;

  void attach(CLI::App* app) {
    budget.max_codewords = env_u64("HERMCODE_MAX_CODEWORDS", budget.max_codewords);
    budget.max_subsets = env_u64("HERMCODE_MAX_SUBSETS", budget.max_subsets);
    budget.workers = static_cast<unsigned>(env_u64("HERMCODE_WORKERS", 0));
    app->add_option("--max-codewords", budget.max_codewords, "codeword enumeration budget");
    app->add_option("--max-subsets", budget.max_subsets, "subset enumeration budget");
    app->add_option("--workers", budget.workers, "worker threads (0 = all cores)");
    app->add_option("--out", out_path, "write the JSON report to this file");
  }

  int emit(json j, bool ok) const {
    j["schema"] = 1;
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path);
      f << text;
      std::cout << (ok ? "[ok] " : "[FAIL] ") << "report written to " << out_path << "\n";
    }
    return ok ? kExitOk : kExitVerification;
  }
};

std::vector<int> read_id_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("--H", "cannot open " + path);
  std::vector<int> ids;
  int v;
  while (f >> v) ids.push_back(v);
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian one-point codes over F_{q^2}: construction, dual "
               "minimum-weight censuses, improvements, and verification suites"};
  app.require_subcommand(1);
  Common common;

  // params
  unsigned q = 0;
  long m = -1;
  int d = -1, a = -1;
  auto* params = app.add_subcommand("params", "report n, k, distances, and the dual index");
  params->add_option("--q", q, "field parameter q")->required();
  params->add_option("--m", m, "pole order m");
  params->add_option("--d", d, "form degree d");
  params->add_option("--a", a, "vanishing order a at P_inf");
  std::string params_h_path;
  params->add_option("--H", params_h_path, "file of removed point ids");
  common.attach(params);

  // matrix
  std::string labels_flag;
  auto* matrix = app.add_subcommand("matrix", "export the generator matrix (text format)");
  matrix->add_option("--q", q)->required();
  matrix->add_option("--m", m);
  matrix->add_option("--d", d);
  matrix->add_option("--a", a);
  bool with_labels = false;
  matrix->add_flag("--labels", with_labels, "append the evaluation-point label block");
  common.attach(matrix);

  // distance
  std::string strategy = "exhaustive";
  int bound = 0;
  auto* distance = app.add_subcommand("distance", "compute the exact minimum distance");
  distance->add_option("--q", q)->required();
  distance->add_option("--m", m);
  distance->add_option("--d", d);
  distance->add_option("--a", a);
  bool use_dual = false;
  distance->add_flag("--dual", use_dual, "measure the dual code instead");
  distance->add_option("--strategy", strategy, "exhaustive | support");
  distance->add_option("--bound", bound, "weight cutoff for the support search");
  common.attach(distance);

  // h1
  auto* h1cmd = app.add_subcommand("h1", "h0/h1 of the ideal sheaf of a P_inf + S scheme");
  h1cmd->add_option("--q", q)->required();
  h1cmd->add_option("--d", d)->required();
  h1cmd->add_option("--a", a)->required();
  std::vector<int> scheme_points;
  h1cmd->add_option("--S", scheme_points, "affine point ids of the reduced part");
  common.attach(h1cmd);

  // minwords
  bool exhaustive = false;
  std::string emit_supports;
  auto* minw = app.add_subcommand("minwords", "census of minimum-weight dual codewords");
  minw->add_option("--q", q)->required();
  minw->add_option("--d", d)->required();
  minw->add_option("--a", a)->required();
  minw->add_flag("--exhaustive", exhaustive, "also scan every delta-subset of B");
  minw->add_option("--emit-supports", emit_supports, "write one support per line");
  common.attach(minw);

  // improve
  std::string h_path;
  auto* improve = app.add_subcommand("improve", "improving subsets for C(d,a) duals");
  improve->add_option("--q", q)->required();
  improve->add_option("--d", d)->required();
  improve->add_option("--a", a)->required();
  improve->add_option("--H", h_path, "file of removed point ids (default: minimal set)");
  common.attach(improve);

  // smallwords sweep
  auto* small = app.add_subcommand("smallwords", "small-weight codeword classification");
  auto* sweep = small->add_subcommand("sweep", "classify every genuine support in a weight range");
  sweep->add_option("--q", q)->required();
  sweep->add_option("--d", d)->required();
  sweep->add_option("--a", a)->required();
  int wmin = -1, wmax = -1;
  sweep->add_option("--wmin", wmin, "lowest weight (default: classified range)");
  sweep->add_option("--wmax", wmax, "highest weight (default: classified range)");
  common.attach(sweep);
  small->require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "table1|lines|parabolas|duality|isometry|oracle|q7")
      ->required();
  verify->add_option("--q", q);
  std::uint64_t seed = 0x5eed;
  int instances = 200;
  verify->add_option("--seed", seed, "seed for the randomized oracle suite");
  verify->add_option("--instances", instances, "instance count for the oracle suite");
  common.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (params->parsed()) {
      if (m < 0 && (d < 0 || a < 0))
        throw CLI::ValidationError("params", "give --m or both --d and --a");
      if (m < 0) m = hermitian::da_to_m(q, {d, a});
      hermitian::DA da = hermitian::m_to_da(q, m);
      long n = static_cast<long>(q) * q * q;
      long k = static_cast<long>(hermitian::monomial_basis(q, m).size());
      if (m >= n) k = n - static_cast<long>(hermitian::monomial_basis(q, hermitian::dual_index(q, m)).size());
      json j;
      j["q"] = q;
      j["m"] = m;
      j["d"] = da.d;
      j["a"] = da.a;
      if (!params_h_path.empty()) {
        // removed evaluation points shorten the code and may drop its rank
        std::vector<int> removed = read_id_file(params_h_path);
        hermitian::HermitianCurve curve = hermitian::HermitianCurve::build(q);
        hermitian::LinearCode punctured = hermitian::build_code(curve, m, removed);
        j["H_size"] = removed.size();
        j["n"] = punctured.length();
        j["k"] = punctured.dim();
      } else {
        j["n"] = n;
        j["k"] = k;
        j["designed_distance"] = hermitian::designed_distance(q, m);
      }
      long mp = hermitian::dual_index(q, m);
      j["dual_m"] = mp;
      if (params_h_path.empty() && mp >= 1)
        j["dual_designed_distance"] = hermitian::designed_distance(q, mp);
      return common.emit(std::move(j), true);
    }

    if (matrix->parsed()) {
      if (m < 0 && (d < 0 || a < 0))
        throw CLI::ValidationError("matrix", "give --m or both --d and --a");
      hermitian::HermitianCurve curve = hermitian::HermitianCurve::build(q);
      hermitian::LinearCode code = m >= 0 ? hermitian::build_code(curve, m)
                                          : hermitian::build_code_da(curve, d, a);
      std::ostringstream out;
      out << hermitian::format_matrix(code.generator());
      if (with_labels) {
        out << "labels\n";
        for (const auto& p : code.labels())
          out << p.x << ' ' << p.y << ' ' << p.z << '\n';
      }
      if (common.out_path.empty()) {
        std::cout << out.str();
      } else {
        std::ofstream f(common.out_path);
        f << out.str();
      }
      return kExitOk;
    }

    if (distance->parsed()) {
      if (m < 0 && (d < 0 || a < 0))
        throw CLI::ValidationError("distance", "give --m or both --d and --a");
      hermitian::HermitianCurve curve = hermitian::HermitianCurve::build(q);
      hermitian::LinearCode code = m >= 0 ? hermitian::build_code(curve, m)
                                          : hermitian::build_code_da(curve, d, a);
      if (use_dual) code = hermitian::dual(code);
      hermitian::DistanceStrategy strat;
      if (strategy == "exhaustive")
        strat = hermitian::DistanceStrategy::exhaustive;
      else if (strategy == "support")
        strat = hermitian::DistanceStrategy::support_search;
      else
        throw CLI::ValidationError("--strategy", "exhaustive or support");
      auto res = hermitian::min_distance(code, strat, bound, common.budget);
      json j;
      j["n"] = code.length();
      j["k"] = code.dim();
      j["d"] = res.distance ? json(*res.distance) : json(nullptr);
      j["within_bound"] = res.within_bound;
      j["strategy"] = strategy;
      j["bound"] = bound;
      return common.emit(std::move(j), true);
    }

    if (h1cmd->parsed()) {
      hermitian::HermitianCurve curve = hermitian::HermitianCurve::build(q);
      hermitian::ZeroScheme z{a, scheme_points};
      hermitian::H1Report rep = hermitian::classify_h1_positive(curve, d, z);
      json j;
      j["d"] = d;
      j["a"] = a;
      std::vector<int> sorted = scheme_points;
      std::sort(sorted.begin(), sorted.end());
      j["S"] = sorted;
      j["h0"] = rep.h0;
      j["h1"] = rep.h1;
      j["case"] = hermitian::to_string(rep.witness_case);
      if (rep.line_witness)
        j["witness"] = {{"line", {rep.line_witness->a, rep.line_witness->b, rep.line_witness->c}}};
      else if (rep.conic_witness)
        j["witness"] = {{"conic", rep.conic_witness->c}};
      else
        j["witness"] = nullptr;
      return common.emit(std::move(j), true);
    }

    if (minw->parsed()) {
      hermitian::HermitianCurve curve = hermitian::HermitianCurve::build(q);
      hermitian::MinWeightCensus census =
          hermitian::verify_min_words(curve, d, a, exhaustive, common.budget);
      if (!emit_supports.empty()) {
        std::ofstream f(emit_supports);
        for (const auto& s : hermitian::enumerate_supports(curve, d, a, common.budget)) {
          for (std::size_t i = 0; i < s.points.size(); ++i)
            f << (i ? " " : "") << s.points[i];
          f << '\n';
        }
      }
      return common.emit(hermitian::to_json(census), census.ok());
    }

    if (improve->parsed()) {
      hermitian::HermitianCurve curve = hermitian::HermitianCurve::build(q);
      std::vector<int> removed = h_path.empty()
                                     ? hermitian::minimal_improving_set(curve, d, a).removed
                                     : read_id_file(h_path);
      hermitian::ImproveReport rep =
          hermitian::improved_report(curve, d, a, removed, common.budget);
      return common.emit(hermitian::to_json(rep), rep.ok);
    }

    if (sweep->parsed()) {
      hermitian::HermitianCurve curve = hermitian::HermitianCurve::build(q);
      auto range = hermitian::sweep_weight_range(d, a);
      if (wmin >= 0) range.first = wmin;
      if (wmax >= 0) range.second = wmax;
      hermitian::SweepReport rep = hermitian::soundness_sweep(
          curve, d, a, range.first, range.second, common.budget);
      return common.emit(hermitian::to_json(rep), rep.ok());
    }

    if (verify->parsed()) {
      hermitian::SuiteReport rep;
      if (suite == "table1") {
        rep = hermitian::verify_table1(q, common.budget);
      } else if (suite == "lines") {
        rep = hermitian::verify_lines(q);
      } else if (suite == "parabolas") {
        rep = hermitian::verify_parabolas(q, common.budget.workers);
      } else if (suite == "duality") {
        rep = hermitian::verify_duality(q);
      } else if (suite == "isometry") {
        rep = hermitian::verify_isometry(q);
      } else if (suite == "oracle") {
        rep = hermitian::verify_oracle(q, seed, instances);
      } else if (suite == "q7") {
        rep = hermitian::verify_q7_erratum(common.budget);
      } else {
        throw CLI::ValidationError("suite", "unknown suite " + suite);
      }
      std::cerr << (rep.ok ? "[ok] " : "[FAIL] ") << "verify " << rep.name << "\n";
      json j;
      j["suite"] = rep.name;
      j["details"] = rep.details;
      j["ok"] = rep.ok;
      return common.emit(std::move(j), rep.ok);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hermitian::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
