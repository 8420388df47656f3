#pragma once

#include <cstdint>

#include "nframe/frames.hpp"
#include "nframe/instance.hpp"
#include "nframe/quotient.hpp"
#include "nframe/rng.hpp"
#include "nframe/types.hpp"

namespace nframe {

/// Sampled problem sizes. When `fixed_dim` or `fixed_arity` is zero the
/// value is drawn from the default grid d in [3,8], n in [2,4] (with
/// d >= n); m is drawn from [q, 2q+2].
struct DimDraw {
  int dim;
  int arity;
  int q;
  int m;
};

DimDraw draw_dims(Rng& rng, int fixed_dim = 0, int fixed_arity = 0);

/// Independent anchors with a bounded condition ratio (redraws until
/// the singular-value ratio clears 1e-6).
AnchorSet random_anchors(Rng& rng, int dim, int arity);
QuotientSpace random_quotient(Rng& rng, int dim, int arity);

/// Spanning frame of m >= q random ambient elements (redraws until the
/// lower bound clears the rank threshold).
FrameSequence random_frame(Rng& rng, const QuotientSpace& qs, int m);

/// K-frame built as {K v_i} lifts for random coordinates v_i, so the
/// frame operator has exactly the range of K.
FrameSequence random_kframe(Rng& rng, const QuotientSpace& qs,
                            const Matrix& K, int m);

/// Tight frame with constant `constant`: scaled rows of a random
/// orthonormal-column matrix.
FrameSequence random_tight_frame(Rng& rng, const QuotientSpace& qs, int m,
                                 double constant);

/// Tight K-frame with the given constant: elements drawn from the
/// spectral factor of constant * K K*, padded with anchor-span vectors
/// (null in X_F) up to m.
FrameSequence random_tight_kframe(Rng& rng, const QuotientSpace& qs,
                                  const Matrix& K, int m, double constant);

/// Two Parseval K-frames with index-disjoint coefficient supports, so
/// their synthesis operators satisfy T L* = 0 exactly.
struct ParsevalPair {
  FrameSequence first;
  FrameSequence second;
};
ParsevalPair random_parseval_disjoint_pair(Rng& rng, const QuotientSpace& qs,
                                           const Matrix& K);

Matrix random_orthogonal(Rng& rng, int q);
Matrix random_psd(Rng& rng, int q);
/// Operator of the requested rank (outer product of random factors).
Matrix random_operator_with_rank(Rng& rng, int q, int rank);
/// Nonzero operator with a randomly drawn rank in [1, q].
Matrix random_operator(Rng& rng, int q);

/// Invertible polynomial in K (commutes with K by construction).
Matrix random_commuting_invertible(Rng& rng, const Matrix& K);
/// Orthogonal matrix commuting with `base`: sign flips in an eigenbasis
/// of the symmetrized base.
Matrix random_commuting_orthogonal(Rng& rng, const Matrix& base_symmetric);
/// PSD matrix sharing an eigenbasis with the symmetric PSD `base`.
Matrix random_commuting_psd(Rng& rng, const Matrix& base_symmetric);

/// Instance files for the CLI: kind is one of frame, kframe,
/// tight-kframe, parseval-disjoint-pair. The advertised property is
/// verified before the instance is returned.
InstanceSpec generate_instance(const std::string& kind, std::uint64_t seed,
                               int dim, int arity, int m);

}  // namespace nframe
