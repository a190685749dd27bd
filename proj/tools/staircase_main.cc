//
// Copyright 2026 The Staircase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Command-line front end: mech, opt, check, region, sweep, exponent.
// Exit codes: 0 success, 1 validation failure, 2 I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "staircase/bounds.h"
#include "staircase/distribution.h"
#include "staircase/exponent.h"
#include "staircase/mechanism.h"
#include "staircase/mechanism_json.h"
#include "staircase/mechanisms.h"
#include "staircase/optsolve.h"
#include "staircase/privacy.h"
#include "staircase/regions.h"
#include "staircase/sweep.h"
#include "staircase/utilities.h"

namespace staircase {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  return IsIoError(status) ? kExitIo : kExitValidation;
}

std::string Fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

absl::Status Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return absl::OkStatus();
  }
  return WriteTextFile(path, text);
}

absl::StatusOr<Distribution> Prior(const std::vector<double>& v,
                                   const char* flag) {
  if (v.empty()) {
    return absl::InvalidArgumentError(std::string("missing ") + flag);
  }
  return MakeDistribution(v);
}

struct MechArgs {
  std::string name;
  int k = 0;
  double eps = 0.0;
  double delta = 0.0;
  std::vector<double> p0, p1, p;
  std::string out;
};

int RunMech(const MechArgs& a) {
  absl::StatusOr<Mechanism> q = absl::InvalidArgumentError("unknown mechanism");
  std::optional<double> delta_claimed;
  if (a.name == "rr") {
    q = RandomizedResponse(a.k, a.eps);
  } else if (a.name == "geometric") {
    q = Geometric(a.k, a.eps);
  } else if (a.name == "quaternary") {
    q = Quaternary(a.eps, a.delta);
    delta_claimed = a.delta;
  } else if (a.name == "binary-ht") {
    absl::StatusOr<Distribution> p0 = Prior(a.p0, "--p0");
    if (!p0.ok()) return Fail(p0.status());
    absl::StatusOr<Distribution> p1 = Prior(a.p1, "--p1");
    if (!p1.ok()) return Fail(p1.status());
    q = BinaryHypothesisTesting(*p0, *p1, a.eps);
  } else if (a.name == "binary-mi") {
    absl::StatusOr<Distribution> p = Prior(a.p, "--p");
    if (!p.ok()) return Fail(p.status());
    q = BinaryMutualInformation(*p, a.eps);
  }
  if (!q.ok()) return Fail(q.status());
  MechanismDocument doc{*q, a.eps, delta_claimed};
  if (absl::Status s = Emit(a.out, MechanismToJson(doc)); !s.ok()) {
    return Fail(s);
  }
  return kExitOk;
}

struct OptArgs {
  std::string utility;
  double eps = 0.0;
  std::vector<double> p0, p1, p;
  std::string out;
};

int RunOpt(const OptArgs& a) {
  absl::StatusOr<UtilitySpec> spec =
      absl::InvalidArgumentError("unknown utility '" + a.utility + "'");
  if (a.utility == "mi") {
    absl::StatusOr<Distribution> p = Prior(a.p, "--p");
    if (!p.ok()) return Fail(p.status());
    spec = UtilitySpec::ForInformation(*p);
  } else if (a.utility == "kl" || a.utility == "tv" || a.utility == "chi2") {
    absl::StatusOr<Distribution> p0 = Prior(a.p0, "--p0");
    if (!p0.ok()) return Fail(p0.status());
    absl::StatusOr<Distribution> p1 = Prior(a.p1, "--p1");
    if (!p1.ok()) return Fail(p1.status());
    FDivergence f = a.utility == "kl"   ? FDivergence::Kl()
                    : a.utility == "tv" ? FDivergence::Tv()
                                        : FDivergence::ChiSquared();
    spec = UtilitySpec::ForHypothesisTesting(f, *p0, *p1);
  }
  if (!spec.ok()) return Fail(spec.status());
  absl::StatusOr<OptimalMechanism> opt = SolveOptimal(*spec, a.eps);
  if (!opt.ok()) return Fail(opt.status());
  if (!a.out.empty()) {
    MechanismDocument doc{opt->mechanism, a.eps, std::nullopt};
    if (absl::Status s = WriteMechanismFile(a.out, doc); !s.ok()) {
      return Fail(s);
    }
  }
  std::cout << Fmt12(opt->value) << "\n";
  return kExitOk;
}

struct CheckArgs {
  std::string in;
  std::optional<double> eps, delta;
  std::vector<double> p0, p1, p;
};

void PrintReport(const BoundReport& r) {
  std::cout << "bound " << r.name << " lhs=" << Fmt12(r.lhs)
            << " rhs=" << Fmt12(r.rhs)
            << (r.satisfied ? " satisfied" : " violated")
            << (r.asserted ? "" : " (reported)") << "\n";
}

int RunCheck(const CheckArgs& a) {
  absl::StatusOr<MechanismDocument> doc = ReadMechanismFile(a.in);
  if (!doc.ok()) return Fail(doc.status());
  const Mechanism& q = doc->mechanism;
  const double eps = a.eps.value_or(doc->eps_claimed.value_or(EffectiveEpsilon(q)));
  const double delta = a.delta.value_or(doc->delta_claimed.value_or(0.0));
  bool ok = true;
  const bool ldp = IsLocallyPrivate(q, eps);
  const bool approx = IsApproxPrivate(q, eps, delta);
  std::cout << "k=" << q.inputs() << " l=" << q.outputs() << "\n";
  std::cout << "eps=" << Fmt12(eps) << " delta=" << Fmt12(delta) << "\n";
  std::cout << "effective_eps=" << Fmt12(EffectiveEpsilon(q)) << "\n";
  std::cout << "is_ldp=" << (ldp ? "true" : "false") << "\n";
  std::cout << "is_approx_private=" << (approx ? "true" : "false") << "\n";
  std::cout << "is_staircase=" << (IsStaircase(q, eps) ? "true" : "false")
            << "\n";
  if (q.inputs() == 2) {
    absl::StatusOr<bool> op = OperationalPrivacyCheck(q, eps, delta);
    if (op.ok()) {
      std::cout << "region_private=" << (*op ? "true" : "false") << "\n";
    }
  }
  ok = delta > 0.0 ? approx : ldp;
  if (!a.p0.empty() || !a.p1.empty()) {
    absl::StatusOr<Distribution> p0 = Prior(a.p0, "--p0");
    if (!p0.ok()) return Fail(p0.status());
    absl::StatusOr<Distribution> p1 = Prior(a.p1, "--p1");
    if (!p1.ok()) return Fail(p1.status());
    absl::StatusOr<std::vector<BoundReport>> reports =
        HypothesisConverseSuite(*p0, *p1, q, eps);
    if (!reports.ok()) return Fail(reports.status());
    for (const BoundReport& r : *reports) {
      PrintReport(r);
      if (r.asserted && !r.satisfied) ok = false;
    }
  }
  if (!a.p.empty()) {
    absl::StatusOr<Distribution> p = Prior(a.p, "--p");
    if (!p.ok()) return Fail(p.status());
    absl::StatusOr<std::vector<BoundReport>> reports =
        InformationConverseSuite(*p, q, eps);
    if (!reports.ok()) return Fail(reports.status());
    for (const BoundReport& r : *reports) {
      PrintReport(r);
      if (r.asserted && !r.satisfied) ok = false;
    }
  }
  return ok ? kExitOk : kExitValidation;
}

struct RegionArgs {
  std::string in;
  int x0 = 0;
  int x1 = 1;
  std::optional<double> eps;
  double delta = 0.0;
  std::string out;
};

int RunRegion(const RegionArgs& a) {
  absl::StatusOr<TradeoffRegion> region =
      absl::InvalidArgumentError("give --in or --eps");
  if (!a.in.empty()) {
    absl::StatusOr<MechanismDocument> doc = ReadMechanismFile(a.in);
    if (!doc.ok()) return Fail(doc.status());
    region = ComputeTradeoffRegion(doc->mechanism, a.x0, a.x1);
  } else if (a.eps.has_value()) {
    region = RegionEpsDelta(*a.eps, a.delta);
  }
  if (!region.ok()) return Fail(region.status());
  std::string csv = "p_md,p_fa\n";
  for (const ErrorPoint& v : region->vertices()) {
    csv += Fmt12(v.p_md) + "," + Fmt12(v.p_fa) + "\n";
  }
  if (absl::Status s = Emit(a.out, csv); !s.ok()) return Fail(s);
  return kExitOk;
}

struct SweepArgs {
  std::string config;
  std::optional<uint64_t> seed;
  std::optional<int> k, instances, threads;
  std::vector<double> eps_grid;
  std::string utility;
  std::vector<std::string> mechanisms;
  std::string out;
};

int RunSweepCommand(const SweepArgs& a) {
  SweepConfig cfg;
  if (!a.config.empty()) {
    absl::StatusOr<std::string> text = ReadTextFile(a.config);
    if (!text.ok()) return Fail(text.status());
    absl::StatusOr<SweepConfig> parsed = SweepConfigFromJson(*text);
    if (!parsed.ok()) return Fail(parsed.status());
    cfg = *parsed;
  }
  if (a.seed) cfg.seed = *a.seed;
  if (a.k) cfg.k = *a.k;
  if (a.instances) cfg.num_instances = *a.instances;
  if (a.threads) cfg.threads = *a.threads;
  if (!a.eps_grid.empty()) cfg.eps_grid = a.eps_grid;
  if (!a.utility.empty()) {
    absl::StatusOr<SweepUtility> u = ParseSweepUtility(a.utility);
    if (!u.ok()) return Fail(u.status());
    cfg.utility = *u;
  }
  if (!a.mechanisms.empty()) {
    cfg.mechanisms.clear();
    for (const std::string& name : a.mechanisms) {
      absl::StatusOr<SweepMechanism> m = ParseSweepMechanism(name);
      if (!m.ok()) return Fail(m.status());
      cfg.mechanisms.push_back(*m);
    }
  }
  if (!a.out.empty()) cfg.out_path = a.out;
  absl::StatusOr<SweepResult> result = RunSweep(cfg);
  if (!result.ok()) return Fail(result.status());
  if (absl::Status s = Emit(cfg.out_path, FormatSweepCsv(result->rows));
      !s.ok()) {
    return Fail(s);
  }
  // Keep stdout clean for the CSV when no output path is given.
  std::ostream& log = cfg.out_path.empty() ? std::cerr : std::cout;
  log << FormatSweepSummary(result->summary);
  return kExitOk;
}

struct ExponentArgs {
  std::vector<double> p0, p1;
  std::string mechanism = "binary-ht";
  std::string in;
  double eps = 1.0;
  int n = 5000;
  int trials = 200;
  double alpha = 0.05;
  uint64_t seed = 1;
};

int RunExponent(const ExponentArgs& a) {
  absl::StatusOr<Distribution> p0 = Prior(a.p0, "--p0");
  if (!p0.ok()) return Fail(p0.status());
  absl::StatusOr<Distribution> p1 = Prior(a.p1, "--p1");
  if (!p1.ok()) return Fail(p1.status());
  absl::StatusOr<Mechanism> q =
      absl::InvalidArgumentError("unknown mechanism '" + a.mechanism + "'");
  if (!a.in.empty()) {
    absl::StatusOr<MechanismDocument> doc = ReadMechanismFile(a.in);
    if (!doc.ok()) return Fail(doc.status());
    q = doc->mechanism;
  } else if (a.mechanism == "binary-ht") {
    q = BinaryHypothesisTesting(*p0, *p1, a.eps);
  } else if (a.mechanism == "rr") {
    q = RandomizedResponse(p0->size(), a.eps);
  }
  if (!q.ok()) return Fail(q.status());
  absl::StatusOr<ExponentReport> r =
      RunExponentSimulation(*p0, *p1, *q, a.n, a.trials, a.alpha, a.seed);
  if (!r.ok()) return Fail(r.status());
  std::cout << "estimate=" << Fmt12(r->estimate) << "\n"
            << "kl=" << Fmt12(r->kl) << "\n"
            << "log_beta=" << Fmt12(r->log_beta) << "\n"
            << "threshold=" << Fmt12(r->threshold) << "\n"
            << "relative_error=" << Fmt12(r->relative_error) << "\n";
  return kExitOk;
}

}  // namespace
}  // namespace staircase

int main(int argc, char** argv) {
  using namespace staircase;
  CLI::App app{"Optimal local-privacy mechanisms"};
  app.require_subcommand(1);
  int code = 0;

  MechArgs mech;
  CLI::App* mech_cmd = app.add_subcommand("mech", "Emit a named mechanism");
  mech_cmd->add_option("name", mech.name, "rr|binary-ht|binary-mi|geometric|quaternary")
      ->required()
      ->check(CLI::IsMember({"rr", "binary-ht", "binary-mi", "geometric", "quaternary"}));
  mech_cmd->add_option("--k", mech.k, "Alphabet size");
  mech_cmd->add_option("--eps", mech.eps, "Privacy level")->required();
  mech_cmd->add_option("--delta", mech.delta, "Additive slack (quaternary)");
  mech_cmd->add_option("--p0", mech.p0, "Null prior")->delimiter(',');
  mech_cmd->add_option("--p1", mech.p1, "Alternative prior")->delimiter(',');
  mech_cmd->add_option("--p", mech.p, "Source prior")->delimiter(',');
  mech_cmd->add_option("--out", mech.out, "Output path (default stdout)");
  mech_cmd->callback([&] { code = RunMech(mech); });

  OptArgs opt;
  CLI::App* opt_cmd = app.add_subcommand("opt", "Solve the staircase LP");
  opt_cmd->add_option("--utility", opt.utility, "kl|tv|chi2|mi")->required();
  opt_cmd->add_option("--eps", opt.eps, "Privacy level")->required();
  opt_cmd->add_option("--p0", opt.p0, "Null prior")->delimiter(',');
  opt_cmd->add_option("--p1", opt.p1, "Alternative prior")->delimiter(',');
  opt_cmd->add_option("--p", opt.p, "Source prior")->delimiter(',');
  opt_cmd->add_option("--out", opt.out, "Mechanism JSON path");
  opt_cmd->callback([&] { code = RunOpt(opt); });

  CheckArgs check;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Privacy predicates and bound reports");
  check_cmd->add_option("--in", check.in, "Mechanism JSON")->required();
  check_cmd->add_option("--eps", check.eps, "Override claimed eps");
  check_cmd->add_option("--delta", check.delta, "Override claimed delta");
  check_cmd->add_option("--p0", check.p0, "Null prior")->delimiter(',');
  check_cmd->add_option("--p1", check.p1, "Alternative prior")->delimiter(',');
  check_cmd->add_option("--p", check.p, "Source prior")->delimiter(',');
  check_cmd->callback([&] { code = RunCheck(check); });

  RegionArgs region;
  CLI::App* region_cmd =
      app.add_subcommand("region", "Tradeoff region boundary as CSV");
  region_cmd->add_option("--in", region.in, "Mechanism JSON");
  region_cmd->add_option("--x0", region.x0, "Null input row");
  region_cmd->add_option("--x1", region.x1, "Alternative input row");
  region_cmd->add_option("--eps", region.eps, "Region of (eps, delta)-LDP");
  region_cmd->add_option("--delta", region.delta, "Additive slack");
  region_cmd->add_option("--out", region.out, "Output path (default stdout)");
  region_cmd->callback([&] { code = RunRegion(region); });

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Random-instance sweep");
  sweep_cmd->add_option("--config", sweep.config, "JSON config file");
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed");
  sweep_cmd->add_option("--k", sweep.k, "Alphabet size");
  sweep_cmd->add_option("--instances", sweep.instances, "Number of instances");
  sweep_cmd->add_option("--eps-grid", sweep.eps_grid, "Comma-separated eps")
      ->delimiter(',');
  sweep_cmd->add_option("--utility", sweep.utility, "kl|tv|chi2|mi");
  sweep_cmd->add_option("--mechanisms", sweep.mechanisms,
                        "binary,rr,geometric,optimal,mixed")
      ->delimiter(',');
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads");
  sweep_cmd->add_option("--out", sweep.out, "CSV path (default stdout)");
  sweep_cmd->callback([&] { code = RunSweepCommand(sweep); });

  ExponentArgs exponent;
  CLI::App* exp_cmd =
      app.add_subcommand("exponent", "Monte-Carlo Chernoff-Stein exponent");
  exp_cmd->add_option("--p0", exponent.p0, "Null prior")->delimiter(',')->required();
  exp_cmd->add_option("--p1", exponent.p1, "Alternative prior")
      ->delimiter(',')
      ->required();
  exp_cmd->add_option("--mechanism", exponent.mechanism, "binary-ht|rr");
  exp_cmd->add_option("--in", exponent.in, "Mechanism JSON instead");
  exp_cmd->add_option("--eps", exponent.eps, "Privacy level");
  exp_cmd->add_option("--n", exponent.n, "Samples per trial");
  exp_cmd->add_option("--trials", exponent.trials, "Trials");
  exp_cmd->add_option("--alpha", exponent.alpha, "Type-I level");
  exp_cmd->add_option("--seed", exponent.seed, "Seed");
  exp_cmd->callback([&] { code = RunExponent(exponent); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  return code;
}
