// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run directly or through ctest.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nframe/certify.hpp"
#include "nframe/generators.hpp"
#include "nframe/kframes.hpp"
#include "nframe/linop.hpp"
#include "nframe/tight.hpp"

using namespace nframe;

namespace {

int g_failures = 0;

void report(int id, const std::string& label, bool pass,
            const std::string& note) {
  std::printf("%s  %2d. %s (%s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
              note.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::vector<std::pair<int, int>> grid() {
  std::vector<std::pair<int, int>> combos;
  for (int n = 2; n <= 4; ++n)
    for (int d = 3; d <= 8; ++d)
      if (d >= n) combos.emplace_back(d, n);
  return combos;
}

std::string run_command(const std::string& args, int& exit_code) {
  const std::string out_path = "acceptance_cli_output.txt";
  const std::string cmd =
      std::string(NFRAME_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  exit_code = WEXITSTATUS(std::system(cmd.c_str()));
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  return ss.str();
}

// 1. product and norm axiom identities on the full grid
void criterion_axioms() {
  double worst = 0;
  bool pass = true;
  std::size_t combo_index = 0;
  for (const auto& [d, n] : grid()) {
    Rng rng(derive_seed(1001, combo_index++));
    const AmbientSpace space(d, n);
    const AnchorSet anchors = random_anchors(rng, d, n);
    const AxiomReport rep =
        axiom_report(space, anchors, SampleSpec{rng.next_u64(), 1000});
    worst = std::max(worst, rep.max_violation);
    pass = pass && rep.pass;
  }
  std::ostringstream note;
  note << "max relative violation " << worst << " over "
       << grid().size() << " (d,n) combos x 1000 tuples, bound 1e-9";
  report(1, "product and norm axiom suite", pass && worst <= 1e-9, note.str());
}

// 2. factorization and range-sum criteria equivalence
void criterion_factorization() {
  RunConfig douglas{"douglas", 2002, 500};
  RunConfig range_sum{"range-sum", 2003, 500};
  const CertificationRun a = run_theorem(douglas);
  const CertificationRun b = run_theorem(range_sum);
  std::ostringstream note;
  note << "douglas " << a.passed << "/500, range-sum " << b.passed
       << "/500, max factor residual "
       << std::max(a.max_residual, b.max_residual);
  report(2, "inclusion criteria agree and factorizations are exact",
         a.pass && b.pass, note.str());
}

// 3. pseudo-inverse contract
void criterion_pinv() {
  RunConfig cfg{"pinv", 2004, 200};
  const CertificationRun run = run_theorem(cfg);
  std::ostringstream note;
  note << run.passed << "/200 instances, max residual " << run.max_residual
       << ", bound 1e-9";
  report(3, "pseudo-inverse restores ranges and satisfies all four identities",
         run.pass && run.max_residual <= 1e-9, note.str());
}

// 4. exact optimal bounds for constructed sequences
void criterion_exact_bounds() {
  bool pass = true;
  double worst = 0;
  std::size_t combo_index = 0;
  for (const auto& [d, n] : grid()) {
    Rng rng(derive_seed(1004, combo_index++));
    const QuotientSpace qs = random_quotient(rng, d, n);
    const int q = qs.q();

    std::vector<Vector> onb;
    for (int i = 0; i < q; ++i) onb.push_back(qs.lift(Vector::Unit(q, i)));
    const BoundsReport parseval = frame_bounds(FrameSequence(qs, onb));
    worst = std::max({worst, std::abs(parseval.lower - 1.0),
                      std::abs(parseval.upper - 1.0)});
    pass = pass && std::abs(parseval.lower - 1.0) <= 1e-10 &&
           std::abs(parseval.upper - 1.0) <= 1e-10;

    if (q >= 2) {
      std::vector<Vector> doubled = onb;
      doubled.insert(doubled.begin(), onb[0]);  // first element twice
      const BoundsReport rep = frame_bounds(FrameSequence(qs, doubled));
      worst = std::max({worst, std::abs(rep.lower - 1.0),
                        std::abs(rep.upper - 2.0)});
      pass = pass && std::abs(rep.lower - 1.0) <= 1e-10 &&
             std::abs(rep.upper - 2.0) <= 1e-10;
    }
  }
  std::ostringstream note;
  note << "max deviation " << worst << " from (1,1) and (1,2), bound 1e-10";
  report(4, "optimal bounds are exact on constructed sequences", pass,
         note.str());
}

// 5. optimality of the lower constant and the positive-multiple route
void criterion_optimality() {
  bool pass = true;
  for (int k = 0; k < 200; ++k) {
    Rng rng(derive_seed(1005, k));
    const DimDraw dd = draw_dims(rng);
    const QuotientSpace qs = random_quotient(rng, dd.dim, dd.arity);
    const int q = qs.q();
    const Matrix kmat = random_operator(rng, q);
    FrameSequence fs = [&] {
      switch (k % 3) {
        case 0:
          return random_frame(rng, qs, std::max(dd.m, q));
        case 1:
          return random_kframe(rng, qs, kmat, std::max(dd.m, q));
        default: {
          std::vector<Vector> elems;
          const int m = std::max(1, q - 1);
          for (int i = 0; i < m; ++i) elems.push_back(rng.vector(dd.dim));
          return FrameSequence(qs, std::move(elems));
        }
      }
    }();
    const KFrameReport rep = kframe_bounds(fs, kmat);
    const Matrix s = build_operators(fs).frame_op;
    const Matrix kk = kmat * kmat.transpose();

    Matrix aug(q, 2 * q);
    aug.leftCols(q) = s;
    aug.rightCols(q) = kmat;
    const bool inclusion = matrix_rank(aug) == matrix_rank(s);
    pass = pass && (rep.is_kframe == inclusion);

    if (rep.is_kframe && !rep.degenerate_k) {
      pass = pass && is_psd(s - rep.lower * kk);
      pass = pass && !is_psd(s - rep.lower * (1.0 + 1e-6) * kk);
    }
  }
  report(5, "lower constant is feasible, maximal and matches the "
            "positive-multiple criterion",
         pass, "200 instances incl. thin sequences");
}

// 6. inequality chains on range(K) and its image under the frame operator
void criterion_sandwiches() {
  RunConfig cfg{"note-3.2", 2006, 200};
  const CertificationRun run = run_theorem(cfg);
  std::ostringstream note;
  note << run.passed << "/200 instances, max violation " << run.max_residual
       << ", bound 1e-8";
  report(6, "closed-range inequality sandwiches", run.pass, note.str());
}

// 7. transfer theorems with their predicted bounds
void criterion_transfer_theorems() {
  bool pass = true;
  std::ostringstream note;
  for (const std::string id : {"3.3", "3.4", "3.5", "3.6", "3.7", "3.8"}) {
    RunConfig cfg{id, 2007, 200};
    const CertificationRun run = run_theorem(cfg);
    pass = pass && run.pass;
    if (id == "3.8") pass = pass && run.max_residual <= 1e-9;
    note << id << ":" << run.passed << "/200 ";
  }
  report(7, "transfer theorems with predicted vs achieved bounds", pass,
         note.str());
}

// 8. synthesis-range characterization never disagrees
void criterion_synthesis_biconditional() {
  RunConfig cfg{"3.6", 2008, 500};
  const CertificationRun run = run_theorem(cfg);
  std::ostringstream note;
  note << run.passed << "/500 instances incl. engineered failures";
  report(8, "the K-frame verdict equals the synthesis range inclusion",
         run.pass, note.str());
}

// 9. tightness constructions
void criterion_tightness() {
  bool pass = true;
  std::ostringstream note;

  // normalization round trip
  double worst_roundtrip = 0;
  for (int k = 0; k < 200; ++k) {
    Rng rng(derive_seed(1009, k));
    const DimDraw dd = draw_dims(rng);
    const QuotientSpace qs = random_quotient(rng, dd.dim, dd.arity);
    const Matrix kmat = random_operator(rng, qs.q());
    const double constant = 0.5 + 2.0 * rng.uniform01();
    const FrameSequence fs = random_tight_kframe(
        rng, qs, kmat, std::max(dd.m, qs.q()), constant);
    const TightnessReport rep = tightness(scale_to_parseval(fs, kmat), kmat);
    worst_roundtrip = std::max(worst_roundtrip, std::abs(rep.constant - 1.0));
    pass = pass && rep.is_parseval && std::abs(rep.constant - 1.0) <= 1e-10;
  }
  note << "roundtrip dev " << worst_roundtrip << "; ";

  for (const std::string id : {"4.3", "4.4", "4.5"}) {
    RunConfig cfg{id, 2009, 200};
    const CertificationRun run = run_theorem(cfg);
    pass = pass && run.pass;
    if (id != "4.5") pass = pass && run.max_residual <= 1e-9;
    note << id << ":" << run.passed << "/200 ";
  }

  // self-dual family: equality of the product on Parseval inputs
  double worst_product = 0;
  for (int k = 0; k < 100; ++k) {
    Rng rng(derive_seed(1010, k));
    const DimDraw dd = draw_dims(rng);
    const QuotientSpace qs = random_quotient(rng, dd.dim, dd.arity);
    const int q = qs.q();
    const FrameSequence fs =
        random_tight_frame(rng, qs, std::max(dd.m, q), 1.0);
    const DualBesselReport rep =
        dual_bessel(fs, Matrix::Identity(q, q), rng.next_u64(), 10);
    worst_product = std::max(worst_product, std::abs(rep.product - 1.0));
    pass = pass && rep.pass && std::abs(rep.product - 1.0) <= 1e-9;
  }
  note << "self-dual product dev " << worst_product << "; ";

  RunConfig pair_cfg{"4.6", 2011, 100};
  const CertificationRun pair_run = run_theorem(pair_cfg);
  pass = pass && pair_run.pass && pair_run.max_residual <= 1e-8;
  note << "4.6:" << pair_run.passed << "/100 const dev "
       << pair_run.max_residual;

  report(9, "tight K-frame constructions", pass, note.str());
}

// 10. CLI determinism and generation round trip
void criterion_cli() {
  bool pass = true;
  std::ostringstream note;

  int code_a = 0, code_b = 0;
  run_command("verify 3.7 --seed 42 --count 50 --json acceptance_a.json",
              code_a);
  run_command("verify 3.7 --seed 42 --count 50 --json acceptance_b.json",
              code_b);
  pass = pass && code_a == 0 && code_b == 0;
  try {
    std::ifstream fa("acceptance_a.json"), fb("acceptance_b.json");
    auto ja = nlohmann::json::parse(fa);
    auto jb = nlohmann::json::parse(fb);
    ja.erase("timing");
    jb.erase("timing");
    const bool identical = ja.dump() == jb.dump();
    pass = pass && identical;
    note << (identical ? "reports identical modulo timing" : "reports differ");
  } catch (...) {
    pass = false;
    note << "report parse failure";
  }
  std::remove("acceptance_a.json");
  std::remove("acceptance_b.json");

  int roundtrips = 0;
  for (const std::string kind :
       {"frame", "kframe", "tight-kframe", "parseval-disjoint-pair"}) {
    for (int seed = 0; seed < 5; ++seed) {
      const std::string path = "acceptance_gen.json";
      int code = 0;
      run_command("generate " + kind + " --seed " + std::to_string(seed) +
                      " --dim 5 --arity 2 --out " + path,
                  code);
      pass = pass && code == 0;
      if (code == 0) {
        run_command("analyze " + path, code);
        pass = pass && code == 0;
        if (code == 0) ++roundtrips;
      }
      std::remove(path.c_str());
    }
  }
  note << "; " << roundtrips << "/20 generate-analyze round trips";
  report(10, "CLI determinism and instance round trips", pass, note.str());
}

}  // namespace

int main() {
  criterion_axioms();
  criterion_factorization();
  criterion_pinv();
  criterion_exact_bounds();
  criterion_optimality();
  criterion_sandwiches();
  criterion_transfer_theorems();
  criterion_synthesis_biconditional();
  criterion_tightness();
  criterion_cli();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
