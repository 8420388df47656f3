#pragma once

#include "nframe/types.hpp"

namespace nframe {

/// Largest singular value (0 for an empty matrix).
double operator_norm(const Matrix& m);

/// Rank with the relative singular-value cutoff kRankRelTol.
int matrix_rank(const Matrix& m);

/// Moore-Penrose inverse via SVD; singular values at or below
/// kRankRelTol * sigma_max are dropped.
Matrix pseudo_inverse(const Matrix& m);

/// Positive semidefiniteness of the symmetrized matrix (m + m^T)/2,
/// with an absolute-plus-relative eigenvalue tolerance.
bool is_psd(const Matrix& m);

/// Certificate for range inclusion R(U) subset R(V) and its two
/// equivalent forms: the operator inequality U U* <= lambda^2 V V* and
/// the factorization U = V W.
struct DouglasCertificate {
  bool holds = false;     // criterion I: rank test on [V | U] vs V
  double lambda = 0;      // minimal certificate ||V^+ U||
  Matrix witness;         // W = V^+ U
  double residual = 0;    // ||U - V W||
  bool inequality_psd = false;  // criterion II at the reported lambda
};

DouglasCertificate douglas_check(const Matrix& U, const Matrix& V);

/// Certificate for R(S) subset R(T) + R(U) with factorization
/// S = T A + U B through the stacked solve [A; B] = [T U]^+ S.
struct RangeSumCertificate {
  bool holds = false;
  double lambda = 0;  // ||[A; B]||, certifies S S* <= lambda^2 (T T* + U U*)
  Matrix factor_a;
  Matrix factor_b;
  double residual = 0;  // ||S - (T A + U B)||
  bool inequality_psd = false;
};

RangeSumCertificate range_sum_check(const Matrix& S, const Matrix& T,
                                    const Matrix& U);

}  // namespace nframe
