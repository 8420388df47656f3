#pragma once

#include <vector>

#include "nframe/quotient.hpp"
#include "nframe/types.hpp"

namespace nframe {

/// Finite sequence of ambient vectors viewed as a frame candidate for
/// the derived space X_F. Elements may have nonzero anchor components;
/// only their X_F cosets matter.
struct FrameSequence {
  QuotientSpace qspace;
  std::vector<Vector> elements;

  FrameSequence(QuotientSpace qs, std::vector<Vector> elems);

  int size() const { return static_cast<int>(elements.size()); }
};

/// Analysis, synthesis and frame operator in orthonormal X_F
/// coordinates. Row i of `analysis` is the coordinate vector of f_i, so
/// (analysis * w)_i = <f, f_i>_F for w = orthonormal_coords(f);
/// synthesis = analysis^T and frame_op = synthesis * analysis.
struct FrameOperators {
  Matrix analysis;   // m x q
  Matrix synthesis;  // q x m
  Matrix frame_op;   // q x q, symmetric PSD
};

FrameOperators build_operators(const FrameSequence& fs);

/// Optimal frame bounds: the extreme eigenvalues of the frame operator
/// in orthonormal coordinates.
struct BoundsReport {
  double lower = 0;  // A_opt
  double upper = 0;  // B_opt
  bool is_frame = false;
  bool is_bessel = true;  // finite sequences always are
};

BoundsReport frame_bounds(const FrameSequence& fs);

/// Structural report on the frame operator: symmetry, positivity,
/// invertibility, conditioning.
struct FrameOperatorCertificate {
  double symmetry_residual = 0;
  double min_eigenvalue = 0;
  double condition = 0;  // meaningful when invertible
  bool invertible = false;
  bool is_frame = false;
};

FrameOperatorCertificate frame_operator_certificate(const FrameSequence& fs);

}  // namespace nframe
