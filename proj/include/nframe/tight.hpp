#pragma once

#include <cstdint>

#include "nframe/frames.hpp"
#include "nframe/kframes.hpp"
#include "nframe/types.hpp"

namespace nframe {

/// Tightness report. `constant` is the least-squares fit
/// A = trace(S_F K K*) / trace((K K*)^2); tight means the matrix
/// identity S_F = A K K* holds to the identity tolerance, which is
/// equivalent to the coefficient-energy identity
///   sum_i |<f, f_i>_F|^2 = A ||K* f||_F^2 for all f.
/// `residual` is the max quadratic-form mismatch over test vectors,
/// `matrix_residual` the relative matrix-identity mismatch.
struct TightnessReport {
  bool is_tight = false;
  double constant = 0;
  double residual = 0;
  double matrix_residual = 0;
  bool is_parseval = false;
  bool degenerate = false;  // K and S_F both vanish
  int quadratic_samples = 0;
};

TightnessReport tightness(const FrameSequence& fs, const Matrix& K,
                          std::uint64_t seed = 0xD1CE, int samples = 0);

/// {A^{-1/2} f_i} for a tight K-frame with constant A; the result is
/// Parseval. Throws precondition_error when the input is not tight.
FrameSequence scale_to_parseval(const FrameSequence& fs, const Matrix& K);

struct TightTransformReport {
  FrameSequence transformed;
  TightnessReport report;
  double input_constant = 0;
  bool constant_preserved = false;
};

/// {K f_i} for a tight frame (tight with respect to the identity):
/// a tight K-frame with the same constant.
TightTransformReport tight_frame_to_tight_kframe(const FrameSequence& fs,
                                                 const Matrix& K);

/// {T f_i} for a tight K-frame: a tight (T K)-frame with the same
/// constant.
TightTransformReport transform_tight_kframe(const FrameSequence& fs,
                                            const Matrix& K, const Matrix& T);

/// Explicit dual Bessel sequence of a tight K-frame: with synthesis T
/// and the minimal-norm factor W = T^+ K (so K = T W), the duals are
/// g_i = W* e_i. Both reconstruction identities
///   K f = sum_i <f, g_i>_F f_i   and   K* f = sum_i <f, f_i>_F g_i
/// hold by construction and are re-verified through the semi-inner
/// product on sampled f. `bessel_bound` is the optimal Bessel bound of
/// the duals and `product` = constant * bessel_bound, which is at least 1.
struct DualBesselReport {
  FrameSequence duals;
  double tight_constant = 0;
  double bessel_bound = 0;
  double product = 0;
  double reconstruction_residual = 0;  // K f identity
  double adjoint_residual = 0;         // K* f identity
  bool pass = false;
};

DualBesselReport dual_bessel(const FrameSequence& fs, const Matrix& K,
                             std::uint64_t seed = 0, int samples = 25);

/// Elementwise sum of two Parseval K-frames with orthogonal synthesis
/// operators (T L* = 0): a tight K-frame with constant exactly 2.
struct DisjointSumReport {
  FrameSequence sum;
  TightnessReport report;
  double cross_residual = 0;     // ||T L*|| relative
  double energy_residual = 0;    // max | ||K*f||^2 - ||T*f||^2 | and L* twin
  bool pass = false;
};

DisjointSumReport disjoint_parseval_sum(const FrameSequence& fs,
                                        const FrameSequence& gs,
                                        const Matrix& K,
                                        std::uint64_t seed = 0,
                                        int samples = 20);

}  // namespace nframe
