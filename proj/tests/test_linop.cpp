#include <doctest.h>

#include <cmath>

#include "nframe/linop.hpp"
#include "nframe/rng.hpp"
#include "nframe/tolerance.hpp"
#include "oracles.hpp"

using namespace nframe;

TEST_CASE("pseudo-inverse of simple matrices") {
  Matrix d(2, 2);
  d << 2, 0, 0, 0;
  Matrix expected(2, 2);
  expected << 0.5, 0, 0, 0;
  CHECK((pseudo_inverse(d) - expected).norm() ==
        doctest::Approx(0.0).epsilon(1e-12));

  // invertible matrices invert
  Rng rng(5);
  const Matrix g = rng.matrix(4, 4);
  CHECK((pseudo_inverse(g) - g.inverse()).norm() <=
        1e-9 * std::max(1.0, g.inverse().norm()));

  // zero maps to zero, with transposed shape
  const Matrix z = Matrix::Zero(3, 5);
  const Matrix zdag = pseudo_inverse(z);
  CHECK(zdag.rows() == 5);
  CHECK(zdag.cols() == 3);
  CHECK(zdag.norm() == 0.0);
}

TEST_CASE("Moore-Penrose identities across ranks") {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = rng.uniform_int(2, 7);
    const int cols = rng.uniform_int(2, 7);
    const int rank = rng.uniform_int(0, std::min(rows, cols));
    Matrix m = Matrix::Zero(rows, cols);
    if (rank > 0)
      m = rng.matrix(rows, rank) * rng.matrix(cols, rank).transpose();
    const Matrix dag = pseudo_inverse(m);

    CHECK((m * dag * m - m).norm() <= 1e-9 * std::max(1.0, m.norm()));
    CHECK((dag * m * dag - dag).norm() <= 1e-9 * std::max(1.0, dag.norm()));
    const Matrix mdag = m * dag;
    const Matrix dagm = dag * m;
    CHECK((mdag - mdag.transpose()).norm() <=
          1e-9 * std::max(1.0, mdag.norm()));
    CHECK((dagm - dagm.transpose()).norm() <=
          1e-9 * std::max(1.0, dagm.norm()));

    // restores range vectors, relative to each sample
    for (int s = 0; s < 20; ++s) {
      const Vector x = m * rng.vector(cols);
      if (x.norm() > 0)
        CHECK((m * dag * x - x).norm() <= 1e-9 * x.norm());
    }
  }
}

TEST_CASE("psd detection") {
  CHECK(is_psd(Matrix::Identity(3, 3)));
  Matrix indef(2, 2);
  indef << 1, 0, 0, -1;
  CHECK_FALSE(is_psd(indef));

  Rng rng(53);
  const Matrix g = rng.matrix(5, 5);
  CHECK(is_psd(g.transpose() * g));

  CHECK_THROWS_AS(is_psd(Matrix::Zero(2, 3)), input_error);
}

TEST_CASE("operator norm examples and power-iteration oracle") {
  CHECK(operator_norm(Matrix::Identity(4, 4)) == doctest::Approx(1.0));
  Matrix d(2, 2);
  d << 3, 0, 0, -4;
  CHECK(operator_norm(d) == doctest::Approx(4.0));

  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix g = rng.matrix(rng.uniform_int(2, 6), rng.uniform_int(2, 6));
    const double got = operator_norm(g);
    const double want = oracles::power_iteration_norm(g);
    CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, want));
  }
}

TEST_CASE("factorization certificate on diagonal instances") {
  Matrix u(2, 2), v(2, 2);
  u << 1, 0, 0, 0;
  v << 2, 0, 0, 0;
  const DouglasCertificate cert = douglas_check(u, v);
  CHECK(cert.holds);
  Matrix w_expected(2, 2);
  w_expected << 0.5, 0, 0, 0;
  CHECK((cert.witness - w_expected).norm() <= 1e-12);
  CHECK(cert.lambda == doctest::Approx(0.5));
  CHECK(cert.residual <= 1e-12);
  CHECK(cert.inequality_psd);
}

TEST_CASE("inclusion fails on a rank deficit") {
  Matrix v(2, 2);
  v << 1, 0, 0, 0;
  const DouglasCertificate cert = douglas_check(Matrix::Identity(2, 2), v);
  CHECK_FALSE(cert.holds);
  CHECK_FALSE(cert.inequality_psd);
  CHECK(cert.residual > 0.5);
}

TEST_CASE("self inclusion factors through the row-space projection") {
  Rng rng(61);
  const Matrix v = rng.matrix(3, 2) * rng.matrix(3, 2).transpose();
  const DouglasCertificate cert = douglas_check(v, v);
  CHECK(cert.holds);
  CHECK(cert.lambda <= 1.0 + 1e-9);
  // witness is idempotent and symmetric: the projection onto the row space
  CHECK((cert.witness * cert.witness - cert.witness).norm() <= 1e-9);
  CHECK((cert.witness - cert.witness.transpose()).norm() <= 1e-9);
}

TEST_CASE("three equivalent inclusion criteria agree on random pairs") {
  Rng rng(67);
  for (int trial = 0; trial < 500; ++trial) {
    const int q = rng.uniform_int(2, 6);
    Matrix v, u;
    switch (trial % 3) {
      case 0: {
        const int r = rng.uniform_int(1, q);
        v = rng.matrix(q, r) * rng.matrix(q, r).transpose();
        u = v * rng.matrix(q, q);
        break;
      }
      case 1:
        v = rng.matrix(q, 1) * rng.matrix(q, 1).transpose();
        u = rng.matrix(q, q);
        break;
      default:
        v = rng.matrix(q, q);
        u = rng.matrix(q, q);
        break;
    }
    const DouglasCertificate cert = douglas_check(u, v);
    const bool factor_ok = cert.residual <= 1e-8 * std::max(1.0, u.norm());
    CHECK(cert.holds == cert.inequality_psd);
    CHECK(cert.holds == factor_ok);
  }
}

TEST_CASE("range-sum certificate on block-diagonal instances") {
  Matrix t(2, 2), u(2, 2);
  t << 1, 0, 0, 0;
  u << 0, 0, 0, 1;
  const RangeSumCertificate cert =
      range_sum_check(Matrix::Identity(2, 2), t, u);
  CHECK(cert.holds);
  CHECK((cert.factor_a - t).norm() <= 1e-12);
  CHECK((cert.factor_b - u).norm() <= 1e-12);
  CHECK(cert.residual <= 1e-12);
  CHECK(cert.inequality_psd);
}

TEST_CASE("range-sum fails outside the combined span") {
  Matrix s = Matrix::Zero(3, 3);
  s(2, 2) = 1;
  Matrix t = Matrix::Zero(3, 3);
  t(0, 0) = 1;
  Matrix u = Matrix::Zero(3, 3);
  u(1, 1) = 1;
  const RangeSumCertificate cert = range_sum_check(s, t, u);
  CHECK_FALSE(cert.holds);
  CHECK_FALSE(cert.inequality_psd);
}

TEST_CASE("range-sum with a null second operator reduces to inclusion") {
  Rng rng(71);
  const Matrix t = rng.matrix(3, 3);
  const RangeSumCertificate cert =
      range_sum_check(t, t, Matrix::Zero(3, 3));
  CHECK(cert.holds);
  CHECK(cert.factor_b.norm() <= 1e-12);
  CHECK(cert.residual <= 1e-9 * std::max(1.0, t.norm()));
}
