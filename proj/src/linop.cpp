#include "nframe/linop.hpp"

#include <algorithm>
#include <cmath>

#include "nframe/tolerance.hpp"

namespace nframe {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

namespace {

// rank with the cutoff pinned to an external scale, so that inclusion
// tests judge all operands against the same notion of "zero"
int rank_at_scale(const Matrix& m, double sigma_ref) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = kRankRelTol * sigma_ref;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

}  // namespace

int matrix_rank(const Matrix& m) {
  return rank_at_scale(m, operator_norm(m));
}

Matrix pseudo_inverse(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() > 0 ? kRankRelTol * sv(0) : 0.0;
  Vector inv = Vector::Zero(sv.size());
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

bool is_psd(const Matrix& m) {
  require(m.rows() == m.cols(), "is_psd: matrix is not square");
  if (m.size() == 0) return true;
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues()(0);
  const double hi = eig.eigenvalues()(eig.eigenvalues().size() - 1);
  const double mag = std::max(std::abs(lo), std::abs(hi));
  return lo >= -kRankRelTol * (mag + 1.0);
}

DouglasCertificate douglas_check(const Matrix& U, const Matrix& V) {
  require(U.rows() == V.rows(), "douglas_check: codomains differ");
  DouglasCertificate cert;

  Matrix aug(V.rows(), V.cols() + U.cols());
  aug.leftCols(V.cols()) = V;
  aug.rightCols(U.cols()) = U;
  const double scale = operator_norm(aug);
  cert.holds = rank_at_scale(aug, scale) == rank_at_scale(V, scale);

  cert.witness = pseudo_inverse(V) * U;
  cert.lambda = operator_norm(cert.witness);
  cert.residual = (U - V * cert.witness).norm();
  cert.inequality_psd = is_psd(cert.lambda * cert.lambda * V * V.transpose() -
                               U * U.transpose());
  return cert;
}

RangeSumCertificate range_sum_check(const Matrix& S, const Matrix& T,
                                    const Matrix& U) {
  require(S.rows() == T.rows() && S.rows() == U.rows(),
          "range_sum_check: codomains differ");
  RangeSumCertificate cert;

  Matrix tu(T.rows(), T.cols() + U.cols());
  tu.leftCols(T.cols()) = T;
  tu.rightCols(U.cols()) = U;
  Matrix aug(T.rows(), tu.cols() + S.cols());
  aug.leftCols(tu.cols()) = tu;
  aug.rightCols(S.cols()) = S;
  const double scale = operator_norm(aug);
  cert.holds = rank_at_scale(aug, scale) == rank_at_scale(tu, scale);

  const Matrix stacked = pseudo_inverse(tu) * S;
  cert.factor_a = stacked.topRows(T.cols());
  cert.factor_b = stacked.bottomRows(U.cols());
  cert.lambda = operator_norm(stacked);
  cert.residual = (S - (T * cert.factor_a + U * cert.factor_b)).norm();
  cert.inequality_psd = is_psd(
      cert.lambda * cert.lambda * (T * T.transpose() + U * U.transpose()) -
      S * S.transpose());
  return cert;
}

}  // namespace nframe
