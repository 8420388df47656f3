#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nframe/instance.hpp"
#include "nframe/kframes.hpp"
#include "nframe/tight.hpp"

namespace nframe {

/// One certified statement id per runnable check family. Numeric ids
/// select the per-theorem certifiers; the word ids select the operator
/// and axiom suites.
std::vector<std::string> known_theorem_ids();

struct RunConfig {
  std::string theorem;
  std::uint64_t seed = 0;
  int count = 200;
  int dim = 0;    // 0 = draw from the default grid
  int arity = 0;  // 0 = draw from the default grid
};

struct CheckResult {
  std::string name;
  std::uint64_t seed = 0;
  bool pass = false;
  double max_residual = 0;
  bool has_bounds = false;
  double lower = 0;  // achieved optimal lower bound or tight constant
  double upper = 0;  // achieved optimal upper or dual Bessel bound
  std::string detail;
};

struct CertificationRun {
  RunConfig cfg;
  std::vector<CheckResult> checks;
  int passed = 0;
  bool pass = false;
  double max_residual = 0;
  double wall_ms = 0;
};

/// Runs `count` seeded instances satisfying the hypotheses of the
/// selected statement. Throws input_error for unknown ids.
CertificationRun run_theorem(const RunConfig& cfg);

/// Deterministic report body; timing (timestamp and wall clock) is
/// attached under a single "timing" key only when requested, so that
/// reports compare equal modulo that block.
nlohmann::json run_to_json(const CertificationRun& run, bool include_timing);

/// Full analysis of one instance file: frame bounds, K-frame report and
/// tightness report (K defaults to the identity when absent).
struct AnalysisReport {
  int q = 0;
  int m = 0;
  bool has_k = false;
  BoundsReport bounds;
  KFrameReport kframe;
  TightnessReport tight;
  bool has_pair = false;
  int pair_m = 0;
};

AnalysisReport analyze_instance(const InstanceSpec& spec);
nlohmann::json analysis_to_json(const InstanceSpec& spec,
                                const AnalysisReport& rep,
                                const std::string& source,
                                bool include_timing);
std::string analysis_summary(const InstanceSpec& spec,
                             const AnalysisReport& rep);

}  // namespace nframe
