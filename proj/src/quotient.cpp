#include "nframe/quotient.hpp"

#include <cmath>
#include <utility>

#include "nframe/rng.hpp"
#include "nframe/tolerance.hpp"

namespace nframe {

namespace {

// Euclidean-orthonormal basis of the orthogonal complement of the
// anchor span, built by pivoted Gram-Schmidt over the standard basis
// vectors with their anchor components removed. Picking the largest
// remaining residual each round keeps the construction well conditioned
// and deterministic.
Matrix orthogonal_complement_basis(const AnchorSet& anchors) {
  const int d = anchors.space().dim;
  const int q = d - anchors.count();
  Eigen::HouseholderQR<Matrix> qr(anchors.matrix());
  const Matrix thin_q =
      qr.householderQ() * Matrix::Identity(d, anchors.count());

  Matrix residuals = Matrix::Identity(d, d);
  residuals -= thin_q * (thin_q.transpose() * residuals);

  Matrix basis(d, q);
  for (int k = 0; k < q; ++k) {
    int best = 0;
    double best_norm = residuals.col(0).norm();
    for (int i = 1; i < d; ++i) {
      const double n = residuals.col(i).norm();
      if (n > best_norm) {
        best = i;
        best_norm = n;
      }
    }
    if (best_norm <= kRankRelTol)
      throw degenerate_anchor_error(
          "quotient: failed to complete a complement basis");
    const Vector b = residuals.col(best) / best_norm;
    basis.col(k) = b;
    residuals -= b * (b.transpose() * residuals);
  }
  return basis;
}

}  // namespace

QuotientSpace::QuotientSpace(AnchorSet anchors, Matrix basis)
    : anchors_(std::move(anchors)), basis_(std::move(basis)) {
  const int d = anchors_.space().dim;
  const int q = static_cast<int>(basis_.cols());
  require(q == d - anchors_.count(), "quotient: basis has wrong size");

  gram_.resize(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) {
      const double v = n_inner(basis_.col(i), basis_.col(j), anchors_);
      gram_(i, j) = v;
      gram_(j, i) = v;
    }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram_);
  const double emax = eig.eigenvalues()(q - 1);
  const double emin = eig.eigenvalues()(0);
  if (emax <= 0 || emin <= kRankRelTol * emax)
    throw degenerate_anchor_error(
        "quotient: Gram matrix of the complement basis is not positive "
        "definite");

  Eigen::LLT<Matrix> llt(gram_);
  if (llt.info() != Eigen::Success)
    throw degenerate_anchor_error("quotient: Cholesky factorization failed");
  chol_ = llt.matrixU();

  // Coordinates along the complement, dropping the anchor component:
  // the first q rows of [basis | anchors]^-1.
  Matrix full(d, d);
  full.leftCols(q) = basis_;
  full.rightCols(anchors_.count()) = anchors_.matrix();
  proj_ = full.inverse().topRows(q);

  lift_ = basis_ *
          chol_.triangularView<Eigen::Upper>().solve(Matrix::Identity(q, q));
}

Vector QuotientSpace::project(const Vector& x) const {
  require(x.size() == dim(), "project: vector has wrong dimension");
  return proj_ * x;
}

Vector QuotientSpace::orthonormal_coords(const Vector& x) const {
  return chol_ * project(x);
}

Vector QuotientSpace::lift(const Vector& w) const {
  require(w.size() == q(), "lift: coordinate vector has wrong length");
  return lift_ * w;
}

double QuotientSpace::f_inner(const Vector& x, const Vector& y) const {
  return n_inner(x, y, anchors_);
}

bool QuotientSpace::same_context(const QuotientSpace& other) const {
  return dim() == other.dim() && arity() == other.arity() &&
         anchors_.matrix() == other.anchors_.matrix();
}

QuotientSpace build_quotient(const AnchorSet& anchors) {
  return QuotientSpace(anchors, orthogonal_complement_basis(anchors));
}

QuotientSpace build_quotient_randomized(const AnchorSet& anchors,
                                        std::uint64_t seed) {
  // Shear the canonical basis by random anchor components. The new
  // columns represent the same cosets, so every X_F-level quantity is
  // unchanged; only the complement differs.
  Matrix basis = orthogonal_complement_basis(anchors);
  Rng rng(seed);
  const Matrix shift =
      rng.matrix(anchors.count(), static_cast<int>(basis.cols()));
  basis += anchors.matrix() * shift;
  return QuotientSpace(anchors, basis);
}

}  // namespace nframe
