#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nframe/certify.hpp"
#include "nframe/generators.hpp"
#include "nframe/instance.hpp"
#include "nframe/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw nframe::input_error(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
}

int cmd_analyze(const std::string& path, const std::string& json_out) {
  const nframe::InstanceSpec spec = nframe::load_instance(path);
  const nframe::AnalysisReport rep = nframe::analyze_instance(spec);
  std::cout << nframe::analysis_summary(spec, rep);
  if (!json_out.empty())
    write_json(nframe::analysis_to_json(spec, rep, path, true), json_out);
  return kExitPass;
}

int cmd_verify(const nframe::RunConfig& cfg, const std::string& json_out) {
  const nframe::CertificationRun run = nframe::run_theorem(cfg);
  std::cout << "verify " << cfg.theorem << ": seed=" << cfg.seed
            << " count=" << run.checks.size() << " passed=" << run.passed
            << "/" << run.checks.size() << " max_residual=" << run.max_residual
            << (run.pass ? " PASS" : " FAIL") << "\n";
  for (const auto& c : run.checks)
    if (!c.pass)
      std::cout << "  FAIL " << c.name << " residual=" << c.max_residual
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  if (!json_out.empty()) write_json(nframe::run_to_json(run, true), json_out);
  return run.pass ? kExitPass : kExitCheckFailure;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, int dim,
                 int arity, int m, const std::string& out) {
  const nframe::InstanceSpec spec =
      nframe::generate_instance(kind, seed, dim, arity, m);
  nframe::save_instance(spec, out);
  std::cout << "wrote " << out << " (kind=" << kind << ", seed=" << seed
            << ", d=" << dim << ", n=" << arity
            << ", m=" << spec.elements.size() << ")\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nframe: frame and K-frame computations over anchored "
               "determinant inner products"};
  app.set_version_flag("--version", nframe::kToolkitVersion);
  app.require_subcommand(1);

  std::string analyze_path, analyze_json;
  auto* analyze = app.add_subcommand(
      "analyze", "Report frame bounds, K-frame bounds and tightness for an "
                 "instance file");
  analyze->add_option("file", analyze_path, "instance JSON file")->required();
  analyze->add_option("--json", analyze_json, "write the report as JSON");

  nframe::RunConfig cfg;
  std::string verify_json;
  auto* verify = app.add_subcommand(
      "verify", "Run seeded certification instances for one statement");
  verify
      ->add_option("theorem", cfg.theorem,
                   "one of: axioms, douglas, range-sum, pinv, note-3.2, 3.3, "
                   "3.4, 3.5, 3.6, 3.7, 3.8, 4.3, 4.4, 4.5, 4.6")
      ->required();
  verify->add_option("--seed", cfg.seed, "base seed (default 0)");
  verify->add_option("--count", cfg.count,
                     "instances (or tuples per combination for axioms)");
  verify->add_option("--dim", cfg.dim, "fix the ambient dimension");
  verify->add_option("--arity", cfg.arity, "fix the arity");
  verify->add_option("--json", verify_json, "write the report as JSON");

  std::string gen_kind, gen_out = "instance.json";
  std::uint64_t gen_seed = 0;
  int gen_dim = 4, gen_arity = 2, gen_m = 0;
  auto* generate = app.add_subcommand(
      "generate", "Write a seeded instance file with a verified property");
  generate
      ->add_option("kind", gen_kind,
                   "one of: frame, kframe, tight-kframe, "
                   "parseval-disjoint-pair")
      ->required();
  generate->add_option("--seed", gen_seed, "seed (default 0)");
  generate->add_option("--dim", gen_dim, "ambient dimension (default 4)");
  generate->add_option("--arity", gen_arity, "arity (default 2)");
  generate->add_option("--m", gen_m,
                       "element count (default: q for frames, rank-driven "
                       "otherwise)");
  generate->add_option("--out", gen_out, "output path (default instance.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, analyze_json);
    if (*verify) return cmd_verify(cfg, verify_json);
    if (*generate) {
      const int q = gen_dim - (gen_arity - 1);
      if (gen_m <= 0) gen_m = q;
      return cmd_generate(gen_kind, gen_seed, gen_dim, gen_arity, gen_m,
                          gen_out);
    }
  } catch (const nframe::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nframe::degenerate_anchor_error& e) {
    std::cerr << "degenerate anchors: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nframe::precondition_error& e) {
    std::cerr << "precondition not met: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitInputError;
}
