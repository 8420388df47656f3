#pragma once

#include <cstdint>
#include <vector>

#include "nframe/types.hpp"

namespace nframe {

/// Real coordinate space of dimension `dim` carrying an (arity)-argument
/// inner product. `arity` is the n of the n-argument machinery; the
/// product takes two main arguments plus n-1 fixed anchors.
struct AmbientSpace {
  int dim;
  int arity;

  AmbientSpace(int dim_, int arity_);
};

/// The fixed tuple of n-1 linearly independent anchor vectors that
/// closes the n-argument product into a bilinear form.
class AnchorSet {
 public:
  AnchorSet(const AmbientSpace& space, const std::vector<Vector>& anchors);

  const AmbientSpace& space() const { return space_; }
  int count() const { return static_cast<int>(mat_.cols()); }
  /// d x (n-1) matrix whose columns are the anchors.
  const Matrix& matrix() const { return mat_; }
  Vector anchor(int i) const { return mat_.col(i); }

  /// Same anchors in a different order (used by the permutation axiom).
  AnchorSet permuted(const std::vector<int>& order) const;

 private:
  AmbientSpace space_;
  Matrix mat_;
};

/// n-argument inner product <x, y | a_2, ..., a_n>, realized as the
/// determinant of the n x n matrix of Euclidean dot products
///   M(0,0) = <x,y>, M(0,j) = <x,a_j>, M(i,0) = <a_i,y>, M(i,j) = <a_i,a_j>.
/// Degenerates to zero exactly when x (or y) is linearly dependent with
/// the anchors.
double n_inner(const Vector& x, const Vector& y, const AnchorSet& anchors);

/// Induced norm sqrt(n_inner(x, x, anchors)); negative round-off inside
/// the clamp window is treated as zero.
double n_norm(const Vector& x, const AnchorSet& anchors);

struct SampleSpec {
  std::uint64_t seed = 0;
  int count = 1000;
};

/// Max relative violation, over sampled tuples, of each product axiom
/// and induced-norm identity.
struct AxiomReport {
  int samples = 0;
  double permutation = 0;     // invariance under anchor reordering
  double additivity = 0;      // <x+y, z | .> = <x, z | .> + <y, z | .>
  double cauchy_schwarz = 0;  // |<x,y|.>| <= ||x,.|| ||y,.||
  double polarization = 0;    // 4<x,y|.> = ||x+y,.||^2 - ||x-y,.||^2
  double parallelogram = 0;   // sum/difference norm identity
  double max_violation = 0;
  bool pass = false;
};

AxiomReport axiom_report(const AmbientSpace& space, const AnchorSet& anchors,
                         const SampleSpec& samples);

}  // namespace nframe
