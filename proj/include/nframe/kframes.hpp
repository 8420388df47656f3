#pragma once

#include <cstdint>

#include "nframe/frames.hpp"
#include "nframe/linop.hpp"
#include "nframe/types.hpp"

namespace nframe {

/// Optimal K-frame constants. `lower` is the largest A with
/// S_F >= A K K* (+infinity when K* vanishes identically, flagged
/// degenerate); `upper` is the optimal Bessel bound.
struct KFrameReport {
  double lower = 0;
  double upper = 0;
  bool is_kframe = false;
  double lambda_certificate = 0;  // feasible lambda with S_F >= lambda K K*
  bool degenerate_k = false;
};

/// Computes the optimal constants of the lower inequality measured
/// against ||K* f||_F^2. The infimum of <S_F f, f> / ||K* f||^2 over
/// f with K* f != 0 is the smallest generalized eigenvalue of the
/// Schur complement of S_F onto range(K) against K K* on that range;
/// restricting S_F naively would overestimate whenever S_F couples
/// range(K) with its orthogonal complement.
KFrameReport kframe_bounds(const FrameSequence& fs, const Matrix& K);

/// Sampled verification of the two inequality chains available when K
/// has closed range: on range(K),
///   A ||K^+||^-2 ||f||^2 <= <S_F f, f> <= B ||f||^2,
/// and on S_F(range(K)),
///   B^-1 ||f||^2 <= <S_F^-1 f, f> <= A^-1 ||K^+||^2 ||f||^2,
/// with S_F inverted on the relevant subspace via the pseudo-inverse.
struct SandwichReport {
  int samples = 0;
  double max_violation = 0;
  bool pass = false;
};

SandwichReport closed_range_bounds_check(const FrameSequence& fs,
                                         const Matrix& K,
                                         std::uint64_t seed = 0,
                                         int samples = 100);

/// A K-frame is a T-frame for every T with R(T) inside R(K); the lower
/// bound transfers as A / lambda^2 with lambda from the factorization
/// certificate T = K W.
struct RestrictionReport {
  DouglasCertificate inclusion;  // douglas_check(T, K)
  double base_lower = 0;         // A for (fs, K)
  double predicted_lower = 0;    // A / lambda^2
  KFrameReport achieved;         // bounds for (fs, T)
  bool pass = false;
};

RestrictionReport restrict_to_included_range(const FrameSequence& fs,
                                             const Matrix& K, const Matrix& T);

/// Result of mapping every element through an operator on X_F. The
/// returned elements are the M_F lifts of the transformed coordinates.
struct TransformReport {
  FrameSequence transformed;
  double predicted_lower = 0;
  double predicted_upper = 0;
  KFrameReport achieved;
  bool pass = false;
};

/// {T f_i} for invertible T commuting with K: K-frame with lower bound
/// at least A ||T^-1||^-2 and upper bound at most B ||T||^2.
TransformReport apply_commuting_invertible(const FrameSequence& fs,
                                           const Matrix& K, const Matrix& T);

/// {T f_i} for a co-isometry (T T* = I) commuting with K: the lower
/// bound A is preserved.
TransformReport apply_commuting_coisometry(const FrameSequence& fs,
                                           const Matrix& K, const Matrix& T);

/// The synthesis-operator criterion: the sequence is a K-frame exactly
/// when range(K) lies inside the range of its synthesis operator. Both
/// sides are evaluated independently and compared.
struct SynthesisCharacterization {
  Matrix synthesis;              // q x m, columns are element coordinates
  DouglasCertificate inclusion;  // douglas_check(K, synthesis)
  bool kframe_verdict = false;   // is_kframe from the bounds computation
  bool equivalent = false;       // the two booleans agree
};

SynthesisCharacterization synthesis_characterization(const FrameSequence& fs,
                                                     const Matrix& K);

/// Elementwise sum of two K-frames whose synthesis cross-products T L*
/// and L T* are positive. Lower bound 1/lambda^2 with lambda from the
/// range-sum certificate of (K, T, L); upper bound (sqrt(Bf)+sqrt(Bg))^2
/// from the two optimal Bessel bounds.
struct SumReport {
  FrameSequence sum;
  RangeSumCertificate coverage;
  double predicted_lower = 0;
  double predicted_upper = 0;
  KFrameReport achieved;
  bool pass = false;
};

SumReport kframe_sum(const FrameSequence& fs, const FrameSequence& gs,
                     const Matrix& K);

/// {f_i + U f_i} for positive U. The frame operator of the result is
/// (I+U) S_F (I+U)*, and the K-frame property is certified through the
/// chain (I+U) S_F (I+U)* >= S_F >= A K K*.
struct PerturbationReport {
  FrameSequence perturbed;
  double operator_identity_residual = 0;  // relative
  bool chain_grows = false;   // (I+U) S (I+U)* >= S
  bool chain_bounds = false;  // S >= A K K*
  KFrameReport achieved;
  bool pass = false;
};

PerturbationReport positive_perturbation(const FrameSequence& fs,
                                         const Matrix& K, const Matrix& U);

}  // namespace nframe
