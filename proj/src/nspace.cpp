#include "nframe/nspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nframe/rng.hpp"
#include "nframe/tolerance.hpp"

namespace nframe {

AmbientSpace::AmbientSpace(int dim_, int arity_) : dim(dim_), arity(arity_) {
  require(arity >= 2, "ambient space: arity must be at least 2");
  require(dim >= arity, "ambient space: dimension must be at least the arity");
}

AnchorSet::AnchorSet(const AmbientSpace& space,
                     const std::vector<Vector>& anchors)
    : space_(space) {
  require(static_cast<int>(anchors.size()) == space.arity - 1,
          "anchor set: expected arity-1 anchors, got " +
              std::to_string(anchors.size()));
  mat_.resize(space.dim, space.arity - 1);
  for (int i = 0; i < static_cast<int>(anchors.size()); ++i) {
    require(anchors[i].size() == space.dim,
            "anchor set: anchor " + std::to_string(i) + " has wrong dimension");
    require(anchors[i].allFinite(),
            "anchor set: anchor " + std::to_string(i) + " has non-finite entries");
    mat_.col(i) = anchors[i];
  }
  Eigen::JacobiSVD<Matrix> svd(mat_);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smax <= 0 || smin <= kRankRelTol * smax)
    throw degenerate_anchor_error("anchor set: anchors are linearly dependent");
}

AnchorSet AnchorSet::permuted(const std::vector<int>& order) const {
  require(static_cast<int>(order.size()) == count(),
          "anchor permutation: wrong length");
  std::vector<Vector> reordered;
  reordered.reserve(order.size());
  for (int idx : order) {
    require(idx >= 0 && idx < count(), "anchor permutation: index out of range");
    reordered.push_back(mat_.col(idx));
  }
  return AnchorSet(space_, reordered);
}

double n_inner(const Vector& x, const Vector& y, const AnchorSet& anchors) {
  const int d = anchors.space().dim;
  const int n = anchors.space().arity;
  require(x.size() == d, "n_inner: first argument has wrong dimension");
  require(y.size() == d, "n_inner: second argument has wrong dimension");
  const Matrix& a = anchors.matrix();
  Matrix m(n, n);
  m(0, 0) = x.dot(y);
  for (int j = 1; j < n; ++j) {
    m(0, j) = x.dot(a.col(j - 1));
    m(j, 0) = a.col(j - 1).dot(y);
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) m(i, j) = a.col(i - 1).dot(a.col(j - 1));
  return m.determinant();
}

double n_norm(const Vector& x, const AnchorSet& anchors) {
  double g = n_inner(x, x, anchors);
  // Gram determinants are nonnegative; negatives are determinant
  // round-off inside the kGramClampRelTol window and clamp to zero.
  if (g < 0) g = 0;
  return std::sqrt(g);
}

namespace {

double rel_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

AxiomReport axiom_report(const AmbientSpace& space, const AnchorSet& anchors,
                         const SampleSpec& samples) {
  require(anchors.space().dim == space.dim &&
              anchors.space().arity == space.arity,
          "axiom report: anchor set does not belong to the space");
  Rng rng(samples.seed);
  AxiomReport rep;
  rep.samples = samples.count;

  std::vector<int> order(anchors.count());
  for (int s = 0; s < samples.count; ++s) {
    const Vector x = rng.vector(space.dim);
    const Vector y = rng.vector(space.dim);
    const Vector z = rng.vector(space.dim);

    const double ip = n_inner(x, y, anchors);

    // invariance under reordering the anchor tuple
    if (anchors.count() > 1) {
      std::iota(order.begin(), order.end(), 0);
      for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform_int(0, i)]);
      const double ip_perm = n_inner(x, y, anchors.permuted(order));
      rep.permutation = std::max(rep.permutation, rel_gap(ip, ip_perm));
    }

    // additivity in the first argument
    const double lhs_add = n_inner(x + y, z, anchors);
    const double rhs_add = n_inner(x, z, anchors) + n_inner(y, z, anchors);
    rep.additivity = std::max(rep.additivity, rel_gap(lhs_add, rhs_add));

    // Cauchy-Schwarz against the induced norm
    const double nx = n_norm(x, anchors);
    const double ny = n_norm(y, anchors);
    const double cs = std::abs(ip) - nx * ny;
    rep.cauchy_schwarz =
        std::max(rep.cauchy_schwarz, std::max(0.0, cs) / std::max(1.0, nx * ny));

    // polarization and parallelogram, on squared norms to avoid sqrt noise
    const double gpp = n_inner(x + y, x + y, anchors);
    const double gmm = n_inner(x - y, x - y, anchors);
    const double gx = n_inner(x, x, anchors);
    const double gy = n_inner(y, y, anchors);
    rep.polarization = std::max(rep.polarization, rel_gap(4.0 * ip, gpp - gmm));
    rep.parallelogram =
        std::max(rep.parallelogram, rel_gap(gpp + gmm, 2.0 * (gx + gy)));
  }

  rep.max_violation =
      std::max({rep.permutation, rep.additivity, rep.cauchy_schwarz,
                rep.polarization, rep.parallelogram});
  rep.pass = rep.max_violation <= tol().identity;
  return rep;
}

}  // namespace nframe
