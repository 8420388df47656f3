#include "nframe/tight.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "nframe/linop.hpp"
#include "nframe/rng.hpp"
#include "nframe/tolerance.hpp"

namespace nframe {

namespace {

FrameSequence map_elements(const FrameSequence& fs, const Matrix& t) {
  std::vector<Vector> out;
  out.reserve(fs.elements.size());
  for (const Vector& e : fs.elements)
    out.push_back(fs.qspace.lift(t * fs.qspace.orthonormal_coords(e)));
  return FrameSequence(fs.qspace, std::move(out));
}

double rel_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

TightnessReport tightness(const FrameSequence& fs, const Matrix& K,
                          std::uint64_t seed, int samples) {
  const int q = fs.qspace.q();
  require(K.rows() == q && K.cols() == q,
          "tightness: operator must be q x q for this space");

  const FrameOperators ops = build_operators(fs);
  const Matrix& s = ops.frame_op;
  const Matrix kk = K * K.transpose();

  TightnessReport rep;
  const double s_norm = operator_norm(s);
  const double kk_norm = operator_norm(kk);

  if (kk_norm <= kRankRelTol) {
    if (s_norm <= kRankRelTol) {
      rep.degenerate = true;  // nothing to compare on either side
      return rep;
    }
    rep.matrix_residual = 1.0;  // S_F != 0 cannot match A * 0
    return rep;
  }

  // Least-squares constant: the trace-ratio fit of S_F against K K*.
  rep.constant = (s.cwiseProduct(kk)).sum() / (kk.cwiseProduct(kk)).sum();
  const Matrix diff = s - rep.constant * kk;
  rep.matrix_residual =
      diff.norm() / std::max({1.0, s.norm(), rep.constant * kk.norm()});

  const bool identity_ok = rep.matrix_residual <= tol().identity;
  const bool nonvanishing = s_norm > kRankRelTol * (1.0 + kk_norm);
  rep.is_tight = identity_ok && nonvanishing;
  rep.is_parseval = rep.is_tight && std::abs(rep.constant - 1.0) <= tol().identity;

  // Quadratic-form echo of the matrix identity on q (plus a few spare)
  // sampled test vectors: coefficient energy against A ||K* f||^2.
  rep.quadratic_samples = samples > 0 ? samples : q + 3;
  Rng rng(seed);
  for (int i = 0; i < rep.quadratic_samples; ++i) {
    const Vector w = rng.vector(q);
    const double energy = (ops.analysis * w).squaredNorm();
    const double target = rep.constant * (K.transpose() * w).squaredNorm();
    rep.residual = std::max(rep.residual, rel_gap(energy, target));
  }
  return rep;
}

FrameSequence scale_to_parseval(const FrameSequence& fs, const Matrix& K) {
  const TightnessReport rep = tightness(fs, K);
  if (!rep.is_tight || rep.constant <= 0)
    throw precondition_error(
        "scale_to_parseval: sequence is not a tight K-frame");
  const double scale = 1.0 / std::sqrt(rep.constant);
  std::vector<Vector> out;
  out.reserve(fs.elements.size());
  for (const Vector& e : fs.elements) out.push_back(scale * e);
  return FrameSequence(fs.qspace, std::move(out));
}

TightTransformReport tight_frame_to_tight_kframe(const FrameSequence& fs,
                                                 const Matrix& K) {
  const int q = fs.qspace.q();
  require(K.rows() == q && K.cols() == q,
          "tight_frame_to_tight_kframe: operator must be q x q");
  const TightnessReport in = tightness(fs, Matrix::Identity(q, q));
  if (!in.is_tight)
    throw precondition_error(
        "tight_frame_to_tight_kframe: input is not a tight frame");

  TightTransformReport rep{map_elements(fs, K), {}, in.constant, false};
  rep.report = tightness(rep.transformed, K);
  rep.constant_preserved =
      rep.report.is_tight &&
      rel_gap(rep.report.constant, in.constant) <= tol().identity;
  return rep;
}

TightTransformReport transform_tight_kframe(const FrameSequence& fs,
                                            const Matrix& K, const Matrix& T) {
  const int q = fs.qspace.q();
  require(K.rows() == q && K.cols() == q,
          "transform_tight_kframe: K must be q x q");
  require(T.rows() == q && T.cols() == q,
          "transform_tight_kframe: T must be q x q");
  const TightnessReport in = tightness(fs, K);
  if (!in.is_tight)
    throw precondition_error(
        "transform_tight_kframe: input is not a tight K-frame");

  TightTransformReport rep{map_elements(fs, T), {}, in.constant, false};
  rep.report = tightness(rep.transformed, T * K);
  rep.constant_preserved =
      rep.report.is_tight &&
      rel_gap(rep.report.constant, in.constant) <= tol().identity;
  return rep;
}

DualBesselReport dual_bessel(const FrameSequence& fs, const Matrix& K,
                             std::uint64_t seed, int samples) {
  const int q = fs.qspace.q();
  require(K.rows() == q && K.cols() == q, "dual_bessel: K must be q x q");
  const TightnessReport in = tightness(fs, K);
  if (!in.is_tight || in.constant <= 0 || in.degenerate ||
      operator_norm(K) <= kRankRelTol)
    throw precondition_error(
        "dual_bessel: input is not a tight K-frame with positive constant");

  const FrameOperators ops = build_operators(fs);
  // Minimal-norm factor W with K = T W; the duals are the rows of W
  // lifted back to the ambient space.
  const Matrix w = pseudo_inverse(ops.synthesis) * K;  // m x q
  const Matrix dual_coords = w.transpose();            // q x m

  std::vector<Vector> duals;
  duals.reserve(fs.elements.size());
  for (int i = 0; i < fs.size(); ++i)
    duals.push_back(fs.qspace.lift(dual_coords.col(i)));

  DualBesselReport rep{FrameSequence(fs.qspace, std::move(duals)), 0, 0, 0, 0, 0, false};
  rep.tight_constant = in.constant;
  const double wn = operator_norm(w);
  rep.bessel_bound = wn * wn;
  rep.product = rep.tight_constant * rep.bessel_bound;

  // Re-verify both reconstruction identities through the semi-inner
  // product on sampled vectors rather than through the matrices used to
  // build the duals.
  Rng rng(seed);
  const auto& qs = fs.qspace;
  for (int s = 0; s < samples; ++s) {
    const Vector f = rng.vector(qs.dim());
    const Vector wf = qs.orthonormal_coords(f);

    Vector recon = Vector::Zero(qs.dim());
    Vector adj = Vector::Zero(qs.dim());
    for (int i = 0; i < fs.size(); ++i) {
      recon += qs.f_inner(f, rep.duals.elements[i]) * fs.elements[i];
      adj += qs.f_inner(f, fs.elements[i]) * rep.duals.elements[i];
    }
    const Vector target_k = K * wf;
    const Vector target_kt = K.transpose() * wf;
    const Vector got_k = qs.orthonormal_coords(recon);
    const Vector got_kt = qs.orthonormal_coords(adj);
    rep.reconstruction_residual =
        std::max(rep.reconstruction_residual,
                 (got_k - target_k).norm() / std::max(1.0, target_k.norm()));
    rep.adjoint_residual =
        std::max(rep.adjoint_residual,
                 (got_kt - target_kt).norm() / std::max(1.0, target_kt.norm()));
  }

  rep.pass = rep.reconstruction_residual <= tol().inequality &&
             rep.adjoint_residual <= tol().inequality &&
             rep.product >= 1.0 - tol().inequality;
  return rep;
}

DisjointSumReport disjoint_parseval_sum(const FrameSequence& fs,
                                        const FrameSequence& gs,
                                        const Matrix& K, std::uint64_t seed,
                                        int samples) {
  require(fs.qspace.same_context(gs.qspace),
          "disjoint_parseval_sum: sequences live over different anchor sets");
  require(fs.size() == gs.size(),
          "disjoint_parseval_sum: sequences differ in length");
  const int q = fs.qspace.q();
  require(K.rows() == q && K.cols() == q,
          "disjoint_parseval_sum: K must be q x q");

  const TightnessReport tf = tightness(fs, K);
  const TightnessReport tg = tightness(gs, K);
  if (!tf.is_parseval)
    throw precondition_error(
        "disjoint_parseval_sum: first sequence is not a Parseval K-frame");
  if (!tg.is_parseval)
    throw precondition_error(
        "disjoint_parseval_sum: second sequence is not a Parseval K-frame");

  const FrameOperators fo = build_operators(fs);
  const FrameOperators go = build_operators(gs);
  const Matrix cross = fo.synthesis * go.analysis;  // T L*
  const double cross_scale =
      1.0 + operator_norm(fo.synthesis) * operator_norm(go.synthesis);
  const double cross_residual = cross.norm() / cross_scale;
  if (cross_residual > tol().inequality)
    throw precondition_error(
        "disjoint_parseval_sum: synthesis operators are not orthogonal "
        "(T L* != 0)");

  std::vector<Vector> summed;
  summed.reserve(fs.elements.size());
  for (int i = 0; i < fs.size(); ++i)
    summed.push_back(fs.elements[i] + gs.elements[i]);
  DisjointSumReport rep{FrameSequence(fs.qspace, std::move(summed)), {}, 0, 0, false};
  rep.cross_residual = cross_residual;

  // Parseval energy identities: ||K* f||^2 equals both ||T* f||^2 and
  // ||L* f||^2 on sampled vectors.
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vector w = rng.vector(q);
    const double kstar = (K.transpose() * w).squaredNorm();
    const double tstar = (fo.analysis * w).squaredNorm();
    const double lstar = (go.analysis * w).squaredNorm();
    rep.energy_residual = std::max(rep.energy_residual, rel_gap(kstar, tstar));
    rep.energy_residual = std::max(rep.energy_residual, rel_gap(kstar, lstar));
  }

  rep.report = tightness(rep.sum, K);
  rep.pass = rep.report.is_tight &&
             std::abs(rep.report.constant - 2.0) <= tol().inequality &&
             rep.energy_residual <= tol().inequality;
  return rep;
}

}  // namespace nframe
