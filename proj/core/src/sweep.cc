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

#include "staircase/sweep.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "staircase/distribution.h"
#include "staircase/mechanism.h"
#include "staircase/mechanisms.h"
#include "staircase/optsolve.h"
#include "staircase/random.h"
#include "staircase/utilities.h"

namespace staircase {
namespace {

using Json = nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool Wants(const SweepConfig& cfg, SweepMechanism m) {
  return std::find(cfg.mechanisms.begin(), cfg.mechanisms.end(), m) !=
         cfg.mechanisms.end();
}

absl::StatusOr<UtilitySpec> DrawSpec(const SweepConfig& cfg, Rng& rng) {
  switch (cfg.utility) {
    case SweepUtility::kMi:
      return UtilitySpec::ForInformation(SampleUniformSimplex(cfg.k, rng));
    case SweepUtility::kKl:
    case SweepUtility::kTv:
    case SweepUtility::kChiSquared: {
      Distribution p0 = SampleUniformSimplex(cfg.k, rng);
      Distribution p1 = SampleUniformSimplex(cfg.k, rng);
      FDivergence f = cfg.utility == SweepUtility::kKl   ? FDivergence::Kl()
                      : cfg.utility == SweepUtility::kTv ? FDivergence::Tv()
                                                         : FDivergence::ChiSquared();
      return UtilitySpec::ForHypothesisTesting(std::move(f), std::move(p0),
                                               std::move(p1));
    }
  }
  return absl::InternalError("unknown utility");
}

absl::StatusOr<Mechanism> BinaryFor(const UtilitySpec& spec, double eps) {
  if (const auto* ht = spec.hypothesis_testing()) {
    return BinaryHypothesisTesting(ht->p0, ht->p1, eps);
  }
  return BinaryMutualInformation(spec.information()->p, eps);
}

absl::StatusOr<double> Evaluate(const UtilitySpec& spec,
                                absl::StatusOr<Mechanism> q) {
  if (!q.ok()) return q.status();
  return Utility(spec, *q);
}

struct InstanceResult {
  absl::Status status;
  std::vector<SweepRow> rows;
  double max_solve_seconds = 0.0;
};

InstanceResult RunInstance(const SweepConfig& cfg,
                           const std::vector<double>& grid,
                           const std::vector<SweepMechanism>& order, int id) {
  InstanceResult out;
  Rng rng(StreamSeed(cfg.seed, static_cast<uint64_t>(id)));
  absl::StatusOr<UtilitySpec> spec = DrawSpec(cfg, rng);
  if (!spec.ok()) {
    out.status = spec.status();
    return out;
  }
  const bool solve = cfg.k <= kMaxLpInputs;
  for (double eps : grid) {
    double opt = kNaN;
    if (solve) {
      const auto start = std::chrono::steady_clock::now();
      absl::StatusOr<OptimalMechanism> o = SolveOptimal(*spec, eps);
      const double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      out.max_solve_seconds = std::max(out.max_solve_seconds, secs);
      if (!o.ok()) {
        out.status = o.status();
        return out;
      }
      opt = o->value;
    }
    absl::StatusOr<double> bin = Evaluate(*spec, BinaryFor(*spec, eps));
    absl::StatusOr<double> rr =
        Evaluate(*spec, RandomizedResponse(cfg.k, eps));
    for (const absl::StatusOr<double>* v : {&bin, &rr}) {
      if (!v->ok()) {
        out.status = v->status();
        return out;
      }
    }
    for (SweepMechanism m : order) {
      double value = 0.0;
      switch (m) {
        case SweepMechanism::kBinary:
          value = *bin;
          break;
        case SweepMechanism::kRr:
          value = *rr;
          break;
        case SweepMechanism::kMixed:
          value = std::max(*bin, *rr);
          break;
        case SweepMechanism::kOptimal:
          value = opt;
          break;
        case SweepMechanism::kGeometric: {
          // At eps = 0 every private mechanism carries zero utility.
          if (eps == 0.0) break;
          absl::StatusOr<double> g = Evaluate(*spec, Geometric(cfg.k, eps));
          if (!g.ok()) {
            out.status = g.status();
            return out;
          }
          value = *g;
          break;
        }
      }
      double ratio = kNaN;
      if (solve) ratio = opt > 0.0 ? value / opt : 1.0;
      out.rows.push_back(SweepRow{id, eps, m, value, opt, ratio});
    }
  }
  return out;
}

std::string Fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

absl::StatusOr<SweepUtility> ParseSweepUtility(std::string_view name) {
  if (name == "kl") return SweepUtility::kKl;
  if (name == "tv") return SweepUtility::kTv;
  if (name == "chi2") return SweepUtility::kChiSquared;
  if (name == "mi") return SweepUtility::kMi;
  return absl::InvalidArgumentError("unknown utility '" + std::string(name) +
                                    "'");
}

absl::StatusOr<SweepMechanism> ParseSweepMechanism(std::string_view name) {
  if (name == "binary") return SweepMechanism::kBinary;
  if (name == "rr") return SweepMechanism::kRr;
  if (name == "geometric") return SweepMechanism::kGeometric;
  if (name == "optimal") return SweepMechanism::kOptimal;
  if (name == "mixed") return SweepMechanism::kMixed;
  return absl::InvalidArgumentError("unknown mechanism '" + std::string(name) +
                                    "'");
}

std::string_view SweepMechanismName(SweepMechanism m) {
  switch (m) {
    case SweepMechanism::kBinary:
      return "binary";
    case SweepMechanism::kGeometric:
      return "geometric";
    case SweepMechanism::kMixed:
      return "mixed";
    case SweepMechanism::kOptimal:
      return "optimal";
    case SweepMechanism::kRr:
      return "rr";
  }
  return "";
}

std::vector<double> DefaultEpsGrid() {
  return {0.1, 0.25, 0.5, 0.75, 1, 1.5, 2, 2.5, 3, 4, 5, 6, 7, 8, 9, 10};
}

absl::Status ValidateSweepConfig(const SweepConfig& cfg) {
  if (cfg.num_instances < 1) {
    return absl::InvalidArgumentError("num_instances must be at least 1");
  }
  if (cfg.k < 2) return absl::InvalidArgumentError("k must be at least 2");
  if (cfg.eps_grid.empty()) {
    return absl::InvalidArgumentError("eps_grid must be nonempty");
  }
  for (double eps : cfg.eps_grid) {
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
      return absl::InvalidArgumentError("eps values must be finite and >= 0");
    }
  }
  if (cfg.mechanisms.empty()) {
    return absl::InvalidArgumentError("mechanisms must be nonempty");
  }
  if (Wants(cfg, SweepMechanism::kOptimal) && cfg.k > kMaxLpInputs) {
    return absl::InvalidArgumentError("k must be <= 12 when 'optimal' is requested");
  }
  if (cfg.k > kMaxSubsetSearchInputs) {
    return absl::InvalidArgumentError("k must be <= 24");
  }
  if (cfg.threads < 0) return absl::InvalidArgumentError("threads must be >= 0");
  return absl::OkStatus();
}

absl::StatusOr<SweepConfig> SweepConfigFromJson(std::string_view text) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("sweep config must be a JSON object");
  }
  SweepConfig cfg;
  try {
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<uint64_t>();
    if (doc.contains("k")) cfg.k = doc["k"].get<int>();
    if (doc.contains("num_instances")) {
      cfg.num_instances = doc["num_instances"].get<int>();
    }
    if (doc.contains("eps_grid")) {
      cfg.eps_grid = doc["eps_grid"].get<std::vector<double>>();
    }
    if (doc.contains("utility")) {
      absl::StatusOr<SweepUtility> u =
          ParseSweepUtility(doc["utility"].get<std::string>());
      if (!u.ok()) return u.status();
      cfg.utility = *u;
    }
    if (doc.contains("mechanisms")) {
      cfg.mechanisms.clear();
      for (const auto& name : doc["mechanisms"].get<std::vector<std::string>>()) {
        absl::StatusOr<SweepMechanism> m = ParseSweepMechanism(name);
        if (!m.ok()) return m.status();
        cfg.mechanisms.push_back(*m);
      }
    }
    if (doc.contains("out_path")) {
      cfg.out_path = doc["out_path"].get<std::string>();
    }
    if (doc.contains("threads")) cfg.threads = doc["threads"].get<int>();
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(std::string("bad sweep config: ") +
                                      e.what());
  }
  return cfg;
}

absl::StatusOr<SweepResult> RunSweep(const SweepConfig& cfg) {
  if (absl::Status s = ValidateSweepConfig(cfg); !s.ok()) return s;
  std::vector<double> grid = cfg.eps_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<SweepMechanism> order = cfg.mechanisms;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  std::vector<InstanceResult> results(cfg.num_instances);
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, cfg.num_instances);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int id = next++; id < cfg.num_instances; id = next++) {
      results[id] = RunInstance(cfg, grid, order, id);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  SweepResult out;
  out.summary.mechanisms = order;
  for (const InstanceResult& r : results) {
    if (!r.status.ok()) return r.status;
    out.summary.max_solve_seconds =
        std::max(out.summary.max_solve_seconds, r.max_solve_seconds);
    out.rows.insert(out.rows.end(), r.rows.begin(), r.rows.end());
  }

  const size_t cells = order.size();
  for (size_t e = 0; e < grid.size(); ++e) {
    EpsSummary s{grid[e], std::vector<double>(cells, 0.0)};
    for (int id = 0; id < cfg.num_instances; ++id) {
      for (size_t m = 0; m < cells; ++m) {
        s.mean_ratio[m] +=
            out.rows[(id * grid.size() + e) * cells + m].ratio;
      }
    }
    for (double& v : s.mean_ratio) v /= cfg.num_instances;
    out.summary.per_eps.push_back(std::move(s));
  }
  double min_mixed = std::numeric_limits<double>::infinity();
  for (const SweepRow& row : out.rows) {
    if (row.mechanism == SweepMechanism::kMixed && !std::isnan(row.ratio)) {
      min_mixed = std::min(min_mixed, row.ratio);
    }
  }
  out.summary.min_mixed_ratio = std::isinf(min_mixed) ? kNaN : min_mixed;
  return out;
}

std::string FormatSweepCsv(const std::vector<SweepRow>& rows) {
  std::string out = "instance_id,eps,mechanism,utility_value,opt_value,ratio\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.instance_id);
    out += ',';
    out += Fmt(r.eps);
    out += ',';
    out += SweepMechanismName(r.mechanism);
    out += ',';
    out += Fmt(r.utility_value);
    out += ',';
    out += Fmt(r.opt_value);
    out += ',';
    out += Fmt(r.ratio);
    out += '\n';
  }
  return out;
}

std::string FormatSweepSummary(const SweepSummary& summary) {
  std::string out = "eps";
  for (SweepMechanism m : summary.mechanisms) {
    out += '\t';
    out += SweepMechanismName(m);
  }
  out += '\n';
  for (const EpsSummary& s : summary.per_eps) {
    out += Fmt(s.eps);
    for (double v : s.mean_ratio) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "\t%.4f", v);
      out += buf;
    }
    out += '\n';
  }
  out += "min_mixed_ratio " + Fmt(summary.min_mixed_ratio) + "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max_solve_seconds %.3f\n",
                summary.max_solve_seconds);
  out += buf;
  return out;
}

}  // namespace staircase
