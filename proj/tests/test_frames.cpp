#include <doctest.h>

#include <cmath>

#include "nframe/frames.hpp"
#include "nframe/generators.hpp"
#include "nframe/rng.hpp"
#include "oracles.hpp"

using namespace nframe;

namespace {

QuotientSpace canonical_3_2() {
  const AmbientSpace space(3, 2);
  Vector a(3);
  a << 0, 0, 1;
  return build_quotient(AnchorSet(space, {a}));
}

FrameSequence parseval_pair(const QuotientSpace& qs) {
  Vector e1(3), e2(3);
  e1 << 1, 0, 0;
  e2 << 0, 1, 0;
  return FrameSequence(qs, {e1, e2});
}

FrameSequence doubled_first(const QuotientSpace& qs) {
  Vector e1(3), e2(3);
  e1 << 1, 0, 0;
  e2 << 0, 1, 0;
  return FrameSequence(qs, {e1, e1, e2});
}

}  // namespace

TEST_CASE("orthonormal pair gives identity operators") {
  const QuotientSpace qs = canonical_3_2();
  const FrameOperators ops = build_operators(parseval_pair(qs));
  CHECK((ops.analysis - Matrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK((ops.frame_op - Matrix::Identity(2, 2)).norm() <= 1e-12);

  const BoundsReport b = frame_bounds(parseval_pair(qs));
  CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(b.is_frame);
}

TEST_CASE("doubled element weights the operator diagonal") {
  const QuotientSpace qs = canonical_3_2();
  const FrameOperators ops = build_operators(doubled_first(qs));
  Matrix expected(2, 2);
  expected << 2, 0, 0, 1;
  CHECK((ops.frame_op - expected).norm() <= 1e-12);

  const BoundsReport b = frame_bounds(doubled_first(qs));
  CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(b.upper == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("anchor-span elements produce the zero operator") {
  const QuotientSpace qs = canonical_3_2();
  Vector a1(3), a2(3);
  a1 << 0, 0, 1;
  a2 << 0, 0, -2;
  const FrameSequence fs(qs, {a1, a2});
  const FrameOperators ops = build_operators(fs);
  CHECK(ops.analysis.norm() <= 1e-12);
  CHECK(ops.frame_op.norm() <= 1e-12);
  CHECK_FALSE(frame_bounds(fs).is_frame);
}

TEST_CASE("a single element cannot span a plane") {
  const QuotientSpace qs = canonical_3_2();
  Vector e1(3);
  e1 << 1, 0, 0;
  const BoundsReport b = frame_bounds(FrameSequence(qs, {e1}));
  CHECK(b.lower == doctest::Approx(0.0));
  CHECK_FALSE(b.is_frame);
  CHECK(b.is_bessel);
}

TEST_CASE("analysis rows evaluate the anchored pairing") {
  Rng rng(73);
  const QuotientSpace qs = random_quotient(rng, 6, 3);
  const FrameSequence fs = random_frame(rng, qs, 7);
  const FrameOperators ops = build_operators(fs);
  for (int s = 0; s < 50; ++s) {
    const Vector f = rng.vector(6);
    const Vector w = qs.orthonormal_coords(f);
    const Vector predicted = ops.analysis * w;
    for (int i = 0; i < fs.size(); ++i) {
      const double direct = qs.f_inner(f, fs.elements[i]);
      CHECK(std::abs(predicted[i] - direct) <=
            1e-10 * std::max({1.0, std::abs(direct), std::abs(predicted[i])}));
    }
  }
}

TEST_CASE("sandwich property with equality at the extremes") {
  Rng rng(79);
  const QuotientSpace qs = random_quotient(rng, 5, 2);
  const FrameSequence fs = random_frame(rng, qs, 6);
  const FrameOperators ops = build_operators(fs);
  const BoundsReport b = frame_bounds(fs);

  for (int s = 0; s < 500; ++s) {
    const Vector f = rng.vector(5);
    const double norm2 = std::pow(n_norm(f, qs.anchor_set()), 2);
    double energy = 0;
    for (const Vector& e : fs.elements)
      energy += std::pow(qs.f_inner(f, e), 2);
    CHECK(energy >= b.lower * norm2 - 1e-8 * std::max(1.0, energy));
    CHECK(energy <= b.upper * norm2 + 1e-8 * std::max(1.0, energy));
  }

  // eigenvectors attain the bounds
  Eigen::SelfAdjointEigenSolver<Matrix> eig(ops.frame_op);
  const Vector fmin = qs.lift(eig.eigenvectors().col(0));
  const Vector fmax = qs.lift(eig.eigenvectors().col(qs.q() - 1));
  auto energy_of = [&](const Vector& f) {
    double e = 0;
    for (const Vector& el : fs.elements) e += std::pow(qs.f_inner(f, el), 2);
    return e;
  };
  const double nmin = std::pow(n_norm(fmin, qs.anchor_set()), 2);
  const double nmax = std::pow(n_norm(fmax, qs.anchor_set()), 2);
  CHECK(energy_of(fmin) ==
        doctest::Approx(b.lower * nmin).epsilon(1e-8));
  CHECK(energy_of(fmax) ==
        doctest::Approx(b.upper * nmax).epsilon(1e-8));
}

TEST_CASE("quadratic form of the frame operator equals coefficient energy") {
  Rng rng(83);
  const QuotientSpace qs = random_quotient(rng, 6, 4);
  const FrameSequence fs = random_frame(rng, qs, 5);
  const Matrix s = build_operators(fs).frame_op;
  for (int trial = 0; trial < 100; ++trial) {
    const Vector f = rng.vector(6);
    const Vector w = qs.orthonormal_coords(f);
    const double quad = w.dot(s * w);
    double energy = 0;
    for (const Vector& e : fs.elements) energy += std::pow(qs.f_inner(f, e), 2);
    CHECK(std::abs(quad - energy) <=
          1e-9 * std::max({1.0, quad, energy}));
  }
}

TEST_CASE("bounds agree with the raw-pairing generalized eigenvalues") {
  Rng rng(89);
  const QuotientSpace qs = random_quotient(rng, 5, 3);
  const FrameSequence fs = random_frame(rng, qs, 6);
  const BoundsReport b = frame_bounds(fs);

  // assemble the quadratic forms entirely through the ambient pairing
  const int q = qs.q();
  Matrix quad(q, q), gram(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      gram(i, j) = qs.f_inner(qs.basis().col(i), qs.basis().col(j));
      double acc = 0;
      for (const Vector& e : fs.elements)
        acc += qs.f_inner(qs.basis().col(i), e) *
               qs.f_inner(qs.basis().col(j), e);
      quad(i, j) = acc;
    }
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> geig(quad, gram);
  CHECK(geig.eigenvalues()(0) == doctest::Approx(b.lower).epsilon(1e-9));
  CHECK(geig.eigenvalues()(q - 1) == doctest::Approx(b.upper).epsilon(1e-9));
}

TEST_CASE("bounds are independent of the complement choice") {
  Rng rng(97);
  const AmbientSpace space(6, 3);
  const AnchorSet f(space, {rng.vector(6), rng.vector(6)});
  const QuotientSpace canonical = build_quotient(f);
  const QuotientSpace sheared = build_quotient_randomized(f, 1234);

  std::vector<Vector> elems;
  for (int i = 0; i < 6; ++i) elems.push_back(rng.vector(6));
  const BoundsReport a = frame_bounds(FrameSequence(canonical, elems));
  const BoundsReport b = frame_bounds(FrameSequence(sheared, elems));
  CHECK(std::abs(a.lower - b.lower) <= 1e-8 * std::max(1.0, a.lower));
  CHECK(std::abs(a.upper - b.upper) <= 1e-8 * std::max(1.0, a.upper));
}

TEST_CASE("operator certificate flags conditioning and invertibility") {
  const QuotientSpace qs = canonical_3_2();

  const FrameOperatorCertificate parseval =
      frame_operator_certificate(parseval_pair(qs));
  CHECK(parseval.invertible);
  CHECK(parseval.condition == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(parseval.symmetry_residual <= 1e-12);

  const FrameOperatorCertificate doubled =
      frame_operator_certificate(doubled_first(qs));
  CHECK(doubled.condition == doctest::Approx(2.0).epsilon(1e-10));

  Vector e1(3);
  e1 << 1, 0, 0;
  const FrameOperatorCertificate thin =
      frame_operator_certificate(FrameSequence(qs, {e1}));
  CHECK_FALSE(thin.invertible);
}

TEST_CASE("element validation") {
  const QuotientSpace qs = canonical_3_2();
  CHECK_THROWS_AS(FrameSequence(qs, {}), input_error);
  Vector bad(2);
  bad << 1, 0;
  CHECK_THROWS_AS(FrameSequence(qs, {bad}), input_error);
}
