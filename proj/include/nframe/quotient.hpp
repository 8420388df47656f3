#pragma once

#include <cstdint>

#include "nframe/nspace.hpp"
#include "nframe/types.hpp"

namespace nframe {

/// The derived Hilbert space X_F. The anchor span L_F is the kernel of
/// the semi-inner product <.,.>_F = n_inner(., ., F); a complement M_F
/// carries an honest inner product. This class keeps a basis of M_F,
/// its Gram matrix in <.,.>_F, and a Cholesky factor R (gram = R^T R)
/// that converts raw basis coordinates to orthonormal coordinates.
///
/// All operator-level computations elsewhere in the library work in the
/// orthonormal coordinates, where <x,y>_F is the plain dot product and
/// adjoints are transposes.
class QuotientSpace {
 public:
  int dim() const { return anchors_.space().dim; }
  int arity() const { return anchors_.space().arity; }
  /// Dimension of X_F: dim - (arity - 1).
  int q() const { return static_cast<int>(basis_.cols()); }

  const AnchorSet& anchor_set() const { return anchors_; }
  /// d x q matrix of basis vectors of the complement M_F.
  const Matrix& basis() const { return basis_; }
  /// q x q Gram matrix gram(i,j) = <b_i, b_j>_F.
  const Matrix& gram() const { return gram_; }
  /// Upper-triangular R with gram = R^T R.
  const Matrix& chol() const { return chol_; }

  /// Raw coordinates of the M_F component of x in `basis` (the anchor
  /// component is dropped; it is null for <.,.>_F).
  Vector project(const Vector& x) const;

  /// Coordinates in which <x,y>_F becomes the dot product: R * project(x).
  Vector orthonormal_coords(const Vector& x) const;

  /// Ambient representative of orthonormal coordinates w, chosen inside
  /// M_F (zero anchor component). orthonormal_coords(lift(w)) == w.
  Vector lift(const Vector& w) const;

  /// Semi-inner product <x, y>_F = n_inner(x, y, anchors).
  double f_inner(const Vector& x, const Vector& y) const;

  /// True when the other instance was built over the same space and
  /// anchor tuple (bitwise-equal anchors).
  bool same_context(const QuotientSpace& other) const;

  friend QuotientSpace build_quotient(const AnchorSet& anchors);
  friend QuotientSpace build_quotient_randomized(const AnchorSet& anchors,
                                                 std::uint64_t seed);

 private:
  QuotientSpace(AnchorSet anchors, Matrix basis);

  AnchorSet anchors_;
  Matrix basis_;  // d x q
  Matrix gram_;   // q x q
  Matrix chol_;   // q x q upper
  Matrix proj_;   // q x d, x -> raw coords of the M_F component
  Matrix lift_;   // d x q, orthonormal coords -> ambient representative
};

/// Builds X_F over the Euclidean orthogonal complement of the anchor
/// span. Deterministic: the basis is selected greedily from the standard
/// basis vectors with their anchor components removed.
QuotientSpace build_quotient(const AnchorSet& anchors);

/// Same derived space over a different (seeded, non-orthogonal)
/// complement. Every X_F-level quantity must agree with the canonical
/// build; used to check complement independence.
QuotientSpace build_quotient_randomized(const AnchorSet& anchors,
                                        std::uint64_t seed);

}  // namespace nframe
