#include "nframe/generators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "nframe/kframes.hpp"
#include "nframe/linop.hpp"
#include "nframe/tight.hpp"
#include "nframe/tolerance.hpp"
#include "nframe/version.hpp"

namespace nframe {

namespace {

constexpr int kMaxRedraws = 64;

}  // namespace

DimDraw draw_dims(Rng& rng, int fixed_dim, int fixed_arity) {
  DimDraw d{};
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    d.dim = fixed_dim > 0 ? fixed_dim : rng.uniform_int(3, 8);
    d.arity = fixed_arity > 0 ? fixed_arity : rng.uniform_int(2, 4);
    if (d.dim >= d.arity) break;
    if (fixed_dim > 0 && fixed_arity > 0)
      throw input_error("dimension must be at least the arity");
  }
  require(d.dim >= d.arity, "dimension must be at least the arity");
  d.q = d.dim - (d.arity - 1);
  d.m = rng.uniform_int(d.q, 2 * d.q + 2);
  return d;
}

AnchorSet random_anchors(Rng& rng, int dim, int arity) {
  const AmbientSpace space(dim, arity);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<Vector> anchors;
    for (int i = 0; i < arity - 1; ++i) anchors.push_back(rng.vector(dim));
    const Matrix m = [&] {
      Matrix out(dim, arity - 1);
      for (int i = 0; i < arity - 1; ++i) out.col(i) = anchors[i];
      return out;
    }();
    Eigen::JacobiSVD<Matrix> svd(m);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    if (smax > 0 && smin > 1e-6 * smax) return AnchorSet(space, anchors);
  }
  throw degenerate_anchor_error("random_anchors: no well-conditioned draw");
}

QuotientSpace random_quotient(Rng& rng, int dim, int arity) {
  return build_quotient(random_anchors(rng, dim, arity));
}

FrameSequence random_frame(Rng& rng, const QuotientSpace& qs, int m) {
  require(m >= qs.q(), "random_frame: m must be at least q to span");
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<Vector> elems;
    for (int i = 0; i < m; ++i) elems.push_back(rng.vector(qs.dim()));
    FrameSequence fs(qs, std::move(elems));
    const BoundsReport b = frame_bounds(fs);
    if (b.is_frame && b.lower > 1e-4 * std::max(1.0, b.upper)) return fs;
  }
  throw input_error("random_frame: no well-conditioned draw");
}

FrameSequence random_kframe(Rng& rng, const QuotientSpace& qs, const Matrix& K,
                            int m) {
  const int q = qs.q();
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<Vector> elems;
    for (int i = 0; i < m; ++i) elems.push_back(qs.lift(K * rng.vector(q)));
    FrameSequence fs(qs, std::move(elems));
    if (m >= q && kframe_bounds(fs, K).is_kframe) return fs;
    if (m < q) return fs;  // caller accepts non-spanning sequences
  }
  throw input_error("random_kframe: no well-conditioned draw");
}

FrameSequence random_tight_frame(Rng& rng, const QuotientSpace& qs, int m,
                                 double constant) {
  const int q = qs.q();
  require(m >= q, "random_tight_frame: m must be at least q");
  const Matrix cols = random_orthogonal(rng, m).leftCols(q);  // m x q
  std::vector<Vector> elems;
  const double scale = std::sqrt(constant);
  for (int i = 0; i < m; ++i)
    elems.push_back(qs.lift(scale * cols.row(i).transpose()));
  return FrameSequence(qs, std::move(elems));
}

FrameSequence random_tight_kframe(Rng& rng, const QuotientSpace& qs,
                                  const Matrix& K, int m, double constant) {
  const int q = qs.q();
  const Matrix kk = K * K.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(kk);
  int r = 0;
  const double emax = eig.eigenvalues()(q - 1);
  for (int i = 0; i < q; ++i)
    if (eig.eigenvalues()(i) > kRankRelTol * std::max(1.0, emax)) ++r;
  require(r >= 1, "random_tight_kframe: K must be nonzero");
  require(m >= r, "random_tight_kframe: m must be at least rank(K)");

  // Columns of sqrt(constant * K K*) spread over an orthonormal set of
  // m coefficient directions reproduce constant * K K* exactly.
  Matrix w(q, r);
  for (int i = 0; i < r; ++i) {
    const double lam = eig.eigenvalues()(q - r + i);
    w.col(i) = std::sqrt(constant * lam) * eig.eigenvectors().col(q - r + i);
  }
  const Matrix coeff = random_orthogonal(rng, m).leftCols(r);  // m x r
  const Matrix synth = w * coeff.transpose();                  // q x m

  std::vector<Vector> elems;
  for (int i = 0; i < m; ++i) {
    Vector e = qs.lift(synth.col(i));
    // pad with anchor-span noise: null in X_F, nonzero in the ambient
    e += qs.anchor_set().matrix() * rng.vector(qs.arity() - 1) * 0.25;
    elems.push_back(e);
  }
  return FrameSequence(qs, std::move(elems));
}

ParsevalPair random_parseval_disjoint_pair(Rng& rng, const QuotientSpace& qs,
                                           const Matrix& K) {
  const int q = qs.q();
  const Matrix kk = K * K.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(kk);
  int r = 0;
  const double emax = eig.eigenvalues()(q - 1);
  for (int i = 0; i < q; ++i)
    if (eig.eigenvalues()(i) > kRankRelTol * std::max(1.0, emax)) ++r;
  require(r >= 1, "random_parseval_disjoint_pair: K must be nonzero");

  Matrix w(q, r);
  for (int i = 0; i < r; ++i) {
    const double lam = eig.eigenvalues()(q - r + i);
    w.col(i) = std::sqrt(lam) * eig.eigenvectors().col(q - r + i);
  }

  // Index-disjoint supports: the first sequence occupies the leading
  // block of coefficient indices, the second the trailing block.
  const int m1 = r + rng.uniform_int(0, 2);
  const int m2 = r + rng.uniform_int(0, 2);
  const int m = m1 + m2;
  const Matrix c1 = random_orthogonal(rng, m1).leftCols(r);
  const Matrix c2 = random_orthogonal(rng, m2).leftCols(r);

  std::vector<Vector> first(m, Vector::Zero(qs.dim()));
  std::vector<Vector> second(m, Vector::Zero(qs.dim()));
  for (int i = 0; i < m1; ++i)
    first[i] = qs.lift(w * c1.row(i).transpose());
  for (int i = 0; i < m2; ++i)
    second[m1 + i] = qs.lift(w * c2.row(i).transpose());

  return ParsevalPair{FrameSequence(qs, std::move(first)),
                      FrameSequence(qs, std::move(second))};
}

Matrix random_orthogonal(Rng& rng, int q) {
  const Matrix g = rng.matrix(q, q);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix out = qr.householderQ();
  // fix signs so the factor is unique given the draw
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < q; ++i)
    if (r(i, i) < 0) out.col(i) = -out.col(i);
  return out;
}

Matrix random_psd(Rng& rng, int q) {
  const Matrix g = rng.matrix(q, q);
  return g * g.transpose() / q;
}

Matrix random_operator_with_rank(Rng& rng, int q, int rank) {
  require(rank >= 0 && rank <= q, "random_operator_with_rank: bad rank");
  if (rank == 0) return Matrix::Zero(q, q);
  // controlled spectrum: singular values in [0.3, 1.5], so rank gaps and
  // restricted condition numbers stay decisive
  const Matrix u = random_orthogonal(rng, q);
  const Matrix v = random_orthogonal(rng, q);
  Vector sv = Vector::Zero(q);
  for (int i = 0; i < rank; ++i) sv[i] = 0.3 + 1.2 * rng.uniform01();
  return u * sv.asDiagonal() * v.transpose();
}

Matrix random_operator(Rng& rng, int q) {
  return random_operator_with_rank(rng, q, rng.uniform_int(1, q));
}

Matrix random_commuting_invertible(Rng& rng, const Matrix& K) {
  const int q = static_cast<int>(K.rows());
  const double kn = std::max(1.0, operator_norm(K));
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const double c0 = rng.uniform_pm1();
    const double c1 = rng.uniform_pm1() / kn;
    const double c2 = rng.uniform_pm1() / (kn * kn);
    const Matrix t = c0 * Matrix::Identity(q, q) + c1 * K + c2 * K * K;
    Eigen::JacobiSVD<Matrix> svd(t);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(q - 1);
    if (smax > 0 && smin > 1e-3 * smax) return t;
  }
  throw input_error("random_commuting_invertible: no invertible draw");
}

Matrix random_commuting_orthogonal(Rng& rng, const Matrix& base_symmetric) {
  const int q = static_cast<int>(base_symmetric.rows());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(base_symmetric);
  Vector signs(q);
  for (int i = 0; i < q; ++i) signs[i] = rng.uniform01() < 0.5 ? -1.0 : 1.0;
  return eig.eigenvectors() * signs.asDiagonal() *
         eig.eigenvectors().transpose();
}

Matrix random_commuting_psd(Rng& rng, const Matrix& base_symmetric) {
  const int q = static_cast<int>(base_symmetric.rows());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(base_symmetric);
  Vector diag(q);
  for (int i = 0; i < q; ++i) diag[i] = rng.uniform01() * 2.0;
  return eig.eigenvectors() * diag.asDiagonal() *
         eig.eigenvectors().transpose();
}

InstanceSpec generate_instance(const std::string& kind, std::uint64_t seed,
                               int dim, int arity, int m) {
  Rng rng(seed);
  const int q = dim - (arity - 1);
  require(q >= 1, "generate_instance: arity leaves no room for the quotient");

  InstanceSpec spec;
  spec.kind = kind;
  spec.seed = seed;
  spec.dim = dim;
  spec.arity = arity;

  const AnchorSet anchors = random_anchors(rng, dim, arity);
  for (int i = 0; i < anchors.count(); ++i)
    spec.anchors.push_back(anchors.anchor(i));
  const QuotientSpace qs = build_quotient(anchors);

  if (kind == "frame") {
    if (m < q)
      throw input_error("generate_instance: a frame needs at least q = " +
                        std::to_string(q) + " elements, got " +
                        std::to_string(m));
    const FrameSequence fs = random_frame(rng, qs, m);
    spec.elements = fs.elements;
    require(frame_bounds(fs).is_frame, "generate_instance: frame check failed");
  } else if (kind == "kframe") {
    if (m < 1) throw input_error("generate_instance: need at least 1 element");
    const Matrix k = random_operator(rng, q);
    const FrameSequence fs = random_kframe(rng, qs, k, std::max(m, q));
    spec.elements = fs.elements;
    spec.operators["K"] = k;
    require(kframe_bounds(fs, k).is_kframe,
            "generate_instance: K-frame check failed");
  } else if (kind == "tight-kframe") {
    const Matrix k = random_operator(rng, q);
    const double constant = 0.5 + 2.0 * rng.uniform01();
    const FrameSequence fs = random_tight_kframe(rng, qs, k, std::max(m, q),
                                                 constant);
    spec.elements = fs.elements;
    spec.operators["K"] = k;
    require(tightness(fs, k).is_tight,
            "generate_instance: tightness check failed");
  } else if (kind == "parseval-disjoint-pair") {
    const Matrix k = random_operator(rng, q);
    const ParsevalPair pair = random_parseval_disjoint_pair(rng, qs, k);
    spec.elements = pair.first.elements;
    spec.pair_elements = pair.second.elements;
    spec.operators["K"] = k;
    const DisjointSumReport rep =
        disjoint_parseval_sum(pair.first, pair.second, k);
    require(rep.pass, "generate_instance: disjoint pair check failed");
  } else {
    throw input_error("generate_instance: unknown kind '" + kind +
                      "' (expected frame, kframe, tight-kframe or "
                      "parseval-disjoint-pair)");
  }
  return spec;
}

}  // namespace nframe
