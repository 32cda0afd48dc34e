// Copyright 2026 The pcone Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcone/autgroup.h"
#include "pcone/cone.h"
#include "pcone/duality.h"
#include "pcone/error.h"
#include "pcone/exponent.h"
#include "pcone/linear_map.h"
#include "pcone/manifold.h"
#include "pcone/pnorm.h"
#include "pcone/serialization.h"
#include "pcone/verification.h"

namespace pcone::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 42;
constexpr int kDefaultSamples = 1000;
constexpr int kDefaultRestarts = 50;
constexpr int kDefaultBudget = 20000;
// Slopes below this mark a diverging second difference quotient.
constexpr double kDivergenceSlope = -0.02;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json config = Json::object();
  Json results = Json::object();
  std::string verdict;
  int exit_code = kMatches;
  std::string summary;
};

std::string Num(double v, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

std::uint64_t ParseSeed(const std::string& text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("invalid seed '" + text + "'");
  }
  return value;
}

// --seed beats PCONE_SEED beats 42.
std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PCONE_SEED")) return ParseSeed(env);
  return kDefaultSeed;
}

Vec ToVec(const std::vector<double>& values, const char* flag) {
  if (values.empty()) throw UsageError(std::string(flag) + " needs at least one value");
  for (double v : values) {
    if (!std::isfinite(v)) throw UsageError(std::string(flag) + " has a non-finite entry");
  }
  return Eigen::Map<const Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
}

ConeSpec Spec(const Exponent& e, int dim) {
  if (dim < 2) throw UsageError("--dim is the ambient dimension n+1 and must be >= 2");
  return ConeSpec::Make(e, dim);
}

void RequirePositive(int value, const char* flag) {
  if (value < 1) throw UsageError(std::string(flag) + " must be >= 1");
}

// Search flags shared by selfdual and iso-search.
struct SearchFlags {
  std::optional<std::uint64_t> seed;
  int restarts = kDefaultRestarts;
  int samples = kDefaultSamples;
  int budget = kDefaultBudget;
  std::string aggregation = "max";
  std::optional<double> accept_threshold;

  void Attach(CLI::App* app) {
    app->add_option("--seed", seed, "Random seed (default 42 or $PCONE_SEED)");
    app->add_option("--restarts", restarts, "Multi-start restarts")->capture_default_str();
    app->add_option("--samples", samples, "Boundary samples per net")->capture_default_str();
    app->add_option("--budget", budget, "Metric evaluations")->capture_default_str();
    app->add_option("--aggregation", aggregation, "max or mean")
        ->check(CLI::IsMember({"max", "mean"}))
        ->capture_default_str();
    app->add_option("--accept-threshold", accept_threshold,
                    "FoundIso iff best violation <= this");
  }

  SearchOptions Options(SearchOptions base) const {
    RequirePositive(restarts, "--restarts");
    RequirePositive(samples, "--samples");
    RequirePositive(budget, "--budget");
    base.seed = ResolveSeed(seed);
    base.restarts = restarts;
    base.samples = samples;
    base.budget = budget;
    base.aggregation = aggregation == "mean" ? Aggregation::kMean : Aggregation::kMax;
    if (accept_threshold) {
      if (!(*accept_threshold > 0.0)) throw UsageError("--accept-threshold must be > 0");
      base.accept_threshold = *accept_threshold;
    }
    return base;
  }
};

Json SearchConfig(const SearchOptions& o) {
  return {{"seed", o.seed},
          {"restarts", o.restarts},
          {"samples", o.samples},
          {"budget", o.budget},
          {"aggregation", AggregationName(o.aggregation)},
          {"accept_threshold", o.accept_threshold}};
}

// Matches / Contradicts / Inconclusive for a search against its prediction.
void JudgeSearch(const IsoSearchReport& report, bool expect_found, Outcome& out) {
  const bool found = report.verdict == SearchVerdict::kFoundIso;
  out.results["expected"] = expect_found ? "FoundIso" : "NoIsoFound";
  if (found == expect_found && !(report.in_hysteresis_band && !found)) {
    out.verdict = "Matches";
  } else if (!found && report.in_hysteresis_band) {
    out.verdict = "Inconclusive";
    out.exit_code = kMismatch;
  } else {
    out.verdict = "Contradicts";
    out.exit_code = kMismatch;
  }
  out.summary = std::string(SearchVerdictName(report.verdict)) + ", best violation " +
                Num(report.best_violation) + " -> " + out.verdict;
}

// --- commands --------------------------------------------------------------

Outcome Norm(const std::string& p, const std::vector<double>& xs) {
  const Exponent e = Exponent::Parse(p);
  const Vec x = ToVec(xs, "--x");
  Outcome out;
  out.config = {{"p", ToJson(e)}, {"x", ToJson(x)}};
  const double value = pcone::Norm(x, e);
  out.results["value"] = value;
  out.results["gradient"] = nullptr;
  out.results["smoothness"] = nullptr;
  std::string smooth;
  if (e.IsSmooth() && !x.isZero()) {
    out.results["gradient"] = ToJson(Gradient(x, e));
    smooth = SmoothnessName(ClassifyC2(x, e));
    out.results["smoothness"] = smooth;
  }
  out.verdict = "Computed";
  out.summary = "||x||_" + e.ToString() + " = " + Num(value, 7) +
                (smooth.empty() ? "" : " (" + smooth + ")");
  return out;
}

Outcome Project(const std::string& p, int dim, const std::vector<double>& zs) {
  const Exponent e = Exponent::Parse(p);
  const Vec stacked = ToVec(zs, "--z");
  if (dim == 0) dim = static_cast<int>(stacked.size());
  if (dim != stacked.size()) throw UsageError("--z must have --dim entries");
  const ConeSpec spec = Spec(e, dim);
  const ConePoint z = ConePoint::FromStacked(stacked);
  const Projection pr = pcone::Project(spec, z);

  const double scale = 1.0 + z.EuclideanNorm() * z.EuclideanNorm();
  const double orth =
      std::abs(pr.pk.t * pr.pkstar_neg.t + pr.pk.x.dot(pr.pkstar_neg.x)) / scale;
  const double defect_k = std::max(0.0, pcone::Norm(pr.pk.x, e) - pr.pk.t);
  const double defect_dual =
      std::max(0.0, pcone::Norm(pr.pkstar_neg.x, e.Conjugate()) + pr.pkstar_neg.t);
  Outcome out;
  out.config = {{"p", ToJson(e)}, {"dim", dim}, {"z", ToJson(z)}};
  out.results = {{"membership", MembershipName(Contains(spec, z, DefaultTolerance(z)))},
                 {"pk", ToJson(pr.pk)},
                 {"pkstar_neg", ToJson(pr.pkstar_neg)},
                 {"iterations", pr.iterations},
                 {"orthogonality", orth},
                 {"pk_defect", defect_k},
                 {"pkstar_neg_defect", defect_dual}};
  constexpr double kTol = 1e-8;
  const bool ok = orth <= kTol && defect_k <= kTol && defect_dual <= kTol;
  out.verdict = ok ? "Consistent" : "Inconsistent";
  out.exit_code = ok ? kMatches : kMismatch;
  out.summary = "pk = " + ToJson(pr.pk).dump() + ", z - pk = " +
                ToJson(pr.pkstar_neg).dump() + " (" + out.verdict + ")";
  return out;
}

Matrix ReadMatrixFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read matrix file '" + path + "'");
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw UsageError("matrix file '" + path + "' is not JSON");
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  return MatrixFromJson(j);
}

Outcome CheckAut(const std::string& p, int dim, const std::string& path, int samples,
                 const std::optional<std::uint64_t>& seed_flag, double tol) {
  const Exponent e = Exponent::Parse(p);
  RequirePositive(samples, "--samples");
  if (!(tol > 0.0)) throw UsageError("--tolerance must be > 0");
  const Matrix m = ReadMatrixFile(path);
  if (m.rows() != m.cols()) throw UsageError("matrix is not square");
  if (dim == 0) dim = static_cast<int>(m.rows());
  if (dim != m.rows()) throw UsageError("matrix size differs from --dim");
  const ConeSpec spec = Spec(e, dim);
  const LinearMap a = LinearMap::FromMatrix(m);
  const std::uint64_t seed = ResolveSeed(seed_flag);

  Outcome out;
  out.config = {{"p", ToJson(e)}, {"dim", dim}, {"matrix", ToJson(m)},
                {"samples", samples}, {"seed", seed}, {"tolerance", tol}};
  bool member = false;
  if (e.IsTwo()) {
    const LoewySchneiderResult ls = LoewySchneider(a, tol);
    member = ls.aut_or_neg_aut && ls.preserves_cone;
    out.results["test"] = "LoewySchneider";
    out.results["loewy_schneider"] = {{"aut_or_neg_aut", ls.aut_or_neg_aut},
                                      {"mu", ls.mu},
                                      {"preserves_cone", ls.preserves_cone}};
  } else {
    const auto sa = IsStructuralAutomorphism(a, spec, tol);
    member = sa.has_value();
    out.results["test"] = "Structural";
    out.results["structure"] = sa ? ToJson(*sa) : Json(nullptr);
  }
  const OracleVerdict oracle = SamplingOracleAutomorphism(a, spec, samples, seed, tol);
  out.results["membership"] = member ? "Member" : "NonMember";
  out.results["oracle"] = oracle.plausible() ? "Plausible" : "Refuted";
  out.results["witness"] = oracle.witness ? ToJson(*oracle.witness) : Json(nullptr);
  out.results["witness_from_inverse"] = oracle.witness_from_inverse;

  const bool agree = member == oracle.plausible();
  out.verdict = member ? (agree ? "Member" : "Refuted") : "NonMember";
  out.exit_code = agree ? kMatches : kMismatch;
  out.summary = std::string(member ? "Member" : "NonMember") + ", oracle " +
                (oracle.plausible() ? "plausible" : "Refuted") +
                (agree ? "" : " (disagreement)");
  return out;
}

Outcome SelfDual(const std::string& p, int dim, const SearchFlags& flags) {
  const Exponent e = Exponent::Parse(p);
  const ConeSpec spec = Spec(e, dim);
  SearchOptions defaults;
  const SearchOptions options = flags.Options(defaults);
  const IsoSearchReport report = SelfDualSearch(spec, options);
  Outcome out;
  out.config = SearchConfig(options);
  out.config["p"] = ToJson(e);
  out.config["dim"] = dim;
  out.results["report"] = ToJson(report);
  try {
    out.results["calibrated_floor"] = verification::SelfDualFloor(e, dim);
  } catch (const Error&) {
    out.results["calibrated_floor"] = nullptr;
  }
  if (e.IsOne() && dim == 3) {
    Json candidates = Json::array();
    for (const CandidateEigen& c : FourCandidatesCheck()) {
      candidates.push_back({{"matrix", ToJson(c.matrix)}, {"min_eigenvalue", c.min_eigenvalue}});
    }
    out.results["four_candidates_check"] = candidates;
  }
  JudgeSearch(report, e.IsTwo(), out);
  return out;
}

Outcome Iso(const std::string& p, const std::string& q, int dim, const SearchFlags& flags) {
  const Exponent ep = Exponent::Parse(p);
  const Exponent eq = Exponent::Parse(q);
  const ConeSpec from = Spec(ep, dim);
  const ConeSpec to = Spec(eq, dim);
  const SearchOptions options = flags.Options(DefaultIsoSearchOptions());
  const IsoSearchReport report = IsoSearch(from, to, options);
  Outcome out;
  out.config = SearchConfig(options);
  out.config["p"] = ToJson(ep);
  out.config["q"] = ToJson(eq);
  out.config["dim"] = dim;
  out.results["report"] = ToJson(report);
  const bool polyhedral_pair = ((ep.IsOne() && eq.is_infinite()) ||
                                (ep.is_infinite() && eq.IsOne())) && dim == 3;
  JudgeSearch(report, ep == eq || polyhedral_pair, out);
  return out;
}

Outcome DiffProbe(const std::string& p, const std::vector<double>& xs, int i,
                  std::optional<int> j, double first, double last, int count) {
  const Exponent e = Exponent::Parse(p);
  const Vec x = ToVec(xs, "--x");
  const int jj = j.value_or(i);
  if (i < 0 || i >= x.size() || jj < 0 || jj >= x.size()) {
    throw UsageError("--i and --j are 0-based indices into --x");
  }
  if (!(first > last && last > 0.0) || count < 2) {
    throw UsageError("steps need --first > --last > 0 and --count >= 2");
  }
  const std::vector<double> steps = GeometricSteps(first, last, count);
  const auto probe = C2DivergenceProbe(x, e, i, jj, steps);
  const double slope = LogLogSlope(probe);
  Outcome out;
  out.config = {{"p", ToJson(e)}, {"x", ToJson(x)}, {"i", i}, {"j", jj},
                {"first", first}, {"last", last}, {"count", count}};
  Json points = Json::array();
  for (const ProbePoint& pt : probe) points.push_back({pt.step, pt.quotient});
  const bool diverges = slope < kDivergenceSlope;
  const bool expect = e.value() < 2.0;
  out.results = {{"points", points},
                 {"slope", slope},
                 {"predicted_slope", expect ? e.value() - 2.0 : 0.0},
                 {"observed", diverges ? "Diverges" : "Bounded"},
                 {"expected", expect ? "Diverges" : "Bounded"}};
  out.verdict = diverges == expect ? "Matches" : "Contradicts";
  out.exit_code = diverges == expect ? kMatches : kMismatch;
  out.summary = "log-log slope " + Num(slope, 4) + " (" +
                (diverges ? "Diverges" : "Bounded") + ") -> " + out.verdict;
  return out;
}

Outcome Gauss(const std::string& p, const std::vector<double>& xs) {
  const Exponent e = Exponent::Parse(p);
  const Vec x = ToVec(xs, "--x");
  const GraphChart chart(e, static_cast<int>(x.size()));
  const TangentBasis basis = ComputeTangentBasis(chart, x);
  const Vec normal = GaussNormal(chart, x);
  const double orth = (basis.vectors.transpose() * normal).cwiseAbs().maxCoeff();
  const double unit = std::abs(normal.norm() - 1.0);
  Outcome out;
  out.config = {{"p", ToJson(e)}, {"x", ToJson(x)}};
  out.results = {{"base_point", ToJson(basis.base_point)},
                 {"tangent_vectors", ToJson(basis.vectors)},
                 {"normal", ToJson(normal)},
                 {"max_tangent_inner_product", orth},
                 {"unit_norm_error", unit}};
  constexpr double kTol = 1e-10;
  const bool ok = orth <= kTol && unit <= kTol;
  out.verdict = ok ? "Orthogonal" : "NotOrthogonal";
  out.exit_code = ok ? kMatches : kMismatch;
  out.summary = "N = " + ToJson(normal).dump() + ", max |<N, v>| = " + Num(orth, 3);
  return out;
}

Outcome VerifyAll(const std::optional<std::uint64_t>& seed_flag, double tolerance_scale,
                  std::vector<int> ids, std::ostream& err) {
  if (!(tolerance_scale > 0.0) || !std::isfinite(tolerance_scale)) {
    throw UsageError("--tolerance-scale must be a positive number");
  }
  if (ids.empty()) {
    for (int id = 1; id <= verification::kCriterionCount; ++id) ids.push_back(id);
  }
  for (int id : ids) {
    if (id < 1 || id > verification::kCriterionCount) {
      throw UsageError("--criteria entries must be in 1.." +
                       std::to_string(verification::kCriterionCount));
    }
  }
  verification::Config config;
  config.seed = ResolveSeed(seed_flag);
  config.tolerance_scale = tolerance_scale;
  Outcome out;
  out.config = {{"seed", config.seed}, {"tolerance_scale", tolerance_scale}, {"criteria", ids}};
  Json list = Json::array();
  int passed = 0;
  for (int id : ids) {
    const verification::CriterionResult r = verification::RunCriterion(id, config);
    err << verification::FormatLine(r) << "\n";
    err.flush();
    passed += r.passed ? 1 : 0;
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"time_limit_seconds", r.time_limit_seconds}});
  }
  out.results = {{"criteria", list}, {"passed", passed}, {"total", ids.size()}};
  const bool all = passed == static_cast<int>(ids.size());
  out.verdict = all ? "AllPass" : "Failures";
  out.exit_code = all ? kMatches : kMismatch;
  out.summary = std::to_string(passed) + "/" + std::to_string(ids.size()) + " criteria passed";
  return out;
}

int Emit(const std::string& command, const Outcome& outcome, double seconds,
         const std::string& output, std::ostream& out, std::ostream& err) {
  Json report = {{"command", command},
                 {"config", outcome.config},
                 {"results", outcome.results},
                 {"verdict", outcome.verdict},
                 {"wall_clock_seconds", seconds},
                 {"version", PCONE_VERSION}};
  const std::string text = report.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    if (!file || !(file << text)) {
      err << "pcone: cannot write '" << output << "'\n";
      return kUsage;
    }
  }
  err << command << ": " << outcome.summary << "\n";
  return outcome.exit_code;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-cone geometry checks. --dim is the ambient dimension n+1; "
               "--p takes a decimal or 'inf'; indices are 0-based."};
  app.name("pcone");
  app.require_subcommand(1);
  app.set_version_flag("--version", PCONE_VERSION);

  std::string p, q, output, matrix_path;
  int dim = 0, samples = kDefaultSamples, i = 0, count = 5;
  std::optional<int> j;
  std::vector<double> x;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9, first = 1e-2, last = 1e-6, tolerance_scale = 1.0;
  std::vector<int> criteria;
  SearchFlags search;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Write the JSON report here instead of stdout");
  };
  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", p, "Exponent: decimal >= 1 or 'inf'")->required();
  };

  CLI::App* norm = app.add_subcommand("norm", "p-norm, gradient and C2 class of x");
  add_p(norm);
  norm->add_option("--x", x, "Comma-separated vector")->delimiter(',')->required();
  add_output(norm);

  CLI::App* project = app.add_subcommand("project", "Moreau projection onto K_p");
  add_p(project);
  project->add_option("--dim", dim, "Ambient dimension n+1 (default: size of --z)");
  project->add_option("--z", x, "Comma-separated point t,x_1,...,x_n")
      ->delimiter(',')
      ->required();
  add_output(project);

  CLI::App* check = app.add_subcommand("check-aut", "Is a matrix an automorphism of K_p?");
  add_p(check);
  check->add_option("--dim", dim, "Ambient dimension n+1 (default: matrix size)");
  check->add_option("--matrix", matrix_path, "JSON file with a row-major matrix")
      ->required();
  check->add_option("--samples", samples, "Oracle boundary samples")->capture_default_str();
  check->add_option("--seed", seed, "Random seed (default 42 or $PCONE_SEED)");
  check->add_option("--tolerance", tol, "Structural and oracle tolerance")
      ->capture_default_str();
  add_output(check);

  CLI::App* selfdual = app.add_subcommand("selfdual", "Search for a PD map A with A K_p = K_q");
  add_p(selfdual);
  selfdual->add_option("--dim", dim, "Ambient dimension n+1")->required();
  search.Attach(selfdual);
  add_output(selfdual);

  CLI::App* iso = app.add_subcommand("iso-search", "Search for a linear map A with A K_p = K_q");
  add_p(iso);
  iso->add_option("--q", q, "Target exponent")->required();
  iso->add_option("--dim", dim, "Ambient dimension n+1")->required();
  search.Attach(iso);
  add_output(iso);

  CLI::App* probe = app.add_subcommand("diffprobe", "Second difference quotients at x_i = 0");
  add_p(probe);
  probe->add_option("--x", x, "Comma-separated vector")->delimiter(',')->required();
  probe->add_option("--i", i, "Differentiated coordinate (0-based)")->required();
  probe->add_option("--j", j, "Perturbed coordinate (0-based, default i)");
  probe->add_option("--first", first, "Largest step")->capture_default_str();
  probe->add_option("--last", last, "Smallest step")->capture_default_str();
  probe->add_option("--count", count, "Number of geometric steps")->capture_default_str();
  add_output(probe);

  CLI::App* gauss = app.add_subcommand("gauss", "Tangent basis and Gauss normal of M_p at x");
  add_p(gauss);
  gauss->add_option("--x", x, "Comma-separated vector")->delimiter(',')->required();
  add_output(gauss);

  CLI::App* verify = app.add_subcommand("verify-all", "Run the acceptance criteria");
  verify->add_option("--seed", seed, "Random seed (default 42 or $PCONE_SEED)");
  verify->add_option("--tolerance-scale", tolerance_scale, "Multiplies every tolerance")
      ->capture_default_str();
  verify->add_option("--criteria", criteria, "Comma-separated criterion ids")
      ->delimiter(',');
  add_output(verify);

  std::vector<std::string> argv_store = {"pcone"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kMatches : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome;
    std::string command;
    if (norm->parsed()) {
      command = "norm";
      outcome = Norm(p, x);
    } else if (project->parsed()) {
      command = "project";
      outcome = Project(p, dim, x);
    } else if (check->parsed()) {
      command = "check-aut";
      outcome = CheckAut(p, dim, matrix_path, samples, seed, tol);
    } else if (selfdual->parsed()) {
      command = "selfdual";
      outcome = SelfDual(p, dim, search);
    } else if (iso->parsed()) {
      command = "iso-search";
      outcome = Iso(p, q, dim, search);
    } else if (probe->parsed()) {
      command = "diffprobe";
      outcome = DiffProbe(p, x, i, j, first, last, count);
    } else if (gauss->parsed()) {
      command = "gauss";
      outcome = Gauss(p, x);
    } else {
      command = "verify-all";
      outcome = VerifyAll(seed, tolerance_scale, criteria, err);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Emit(command, outcome, seconds, output, out, err);
  } catch (const UsageError& e) {
    err << "pcone: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "pcone: " << e.what() << "\n";
    return e.code() == ErrorCode::kConvergenceFailure ? kMismatch : kUsage;
  } catch (const std::exception& e) {
    err << "pcone: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pcone::cli
