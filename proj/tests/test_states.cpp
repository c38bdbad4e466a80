#include <cmath>

#include <doctest.h>

#include "oqs/states.hpp"

using namespace oqs;

TEST_CASE("make_density accepts valid states") {
  auto rho = make_density(Mat::Identity(2, 2) / 2.0);
  CHECK(rho.dim == 2);
  CHECK(std::abs(rho.m.trace().real() - 1.0) < 1e-14);

  auto bell = make_density(max_entangled_projector(2));
  CHECK(bell.dim == 4);
  CHECK(is_pure(bell));
}

TEST_CASE("make_density rejects invalid states") {
  Mat bad = Mat::Zero(2, 2);
  bad(0, 0) = 1.2;
  bad(1, 1) = -0.2;
  CHECK_THROWS_WITH_AS(make_density(bad), doctest::Contains("NotPSD"),
                       ValidationError);

  Mat nh = Mat::Zero(2, 2);
  nh(0, 0) = 0.5;
  nh(1, 1) = 0.5;
  nh(0, 1) = cplx(0.3, 0.1);  // no conjugate partner
  CHECK_THROWS_WITH_AS(make_density(nh), doctest::Contains("NotHermitian"),
                       ValidationError);

  CHECK_THROWS_WITH_AS(make_density(0.9 * Mat::Identity(2, 2) / 2.0),
                       doctest::Contains("NotUnitTrace"), ValidationError);
}

TEST_CASE("make_density sanitize clips rounding-level negatives only") {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0 + 5e-11;
  m(1, 1) = -5e-11;
  // Within the positivity tolerance the state is accepted either way;
  // sanitize additionally clips the negative eigenvalue.
  CHECK_NOTHROW(make_density(m));
  auto rho = make_density(m, true);
  CHECK(rho.m(1, 1).real() >= 0.0);
  CHECK(std::abs(rho.m.trace().real() - 1.0) < 1e-14);

  Mat bad = Mat::Zero(2, 2);
  bad(0, 0) = 1.2;
  bad(1, 1) = -0.2;
  CHECK_THROWS_AS(make_density(bad, true), ValidationError);
}

TEST_CASE("von Neumann entropy") {
  for (int n : {2, 3, 4}) {
    auto rho = make_density(Mat::Identity(n, n) / double(n));
    CHECK(von_neumann_entropy(rho) == doctest::Approx(std::log(n)).epsilon(1e-12));
  }
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  const double want = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25));
  CHECK(von_neumann_entropy(make_density(d)) ==
        doctest::Approx(want).epsilon(1e-12));
  // Pure states have zero entropy.
  Vec psi(2);
  psi << cplx(1, 0), cplx(0, 1);
  CHECK(von_neumann_entropy(pure_state(psi)) == doctest::Approx(0.0));
}

TEST_CASE("entropy is additive on tensor products") {
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = 0.7;
  a(1, 1) = 0.3;
  Mat b = Mat::Zero(3, 3);
  b(0, 0) = 0.5;
  b(1, 1) = 0.3;
  b(2, 2) = 0.2;
  auto ra = make_density(a), rb = make_density(b);
  CHECK(von_neumann_entropy(tensor(ra, rb)) ==
        doctest::Approx(von_neumann_entropy(ra) + von_neumann_entropy(rb))
            .epsilon(1e-12));
}

TEST_CASE("partial trace recovers tensor factors") {
  auto ra = bloch_to_density(Vec3(0.2, -0.3, 0.4));
  Mat b = Mat::Zero(3, 3);
  b(0, 0) = 0.6;
  b(1, 1) = 0.3;
  b(2, 2) = 0.1;
  auto rb = make_density(b);
  auto prod = tensor(ra, rb);
  CHECK((partial_trace(prod, 2, 3, 'A').m - ra.m).cwiseAbs().maxCoeff() <
        1e-13);
  CHECK((partial_trace(prod, 2, 3, 'B').m - rb.m).cwiseAbs().maxCoeff() <
        1e-13);
}

TEST_CASE("maximally entangled reductions are maximally mixed") {
  auto bell = make_density(max_entangled_projector(3));
  auto red = partial_trace(bell, 3, 3, 'A');
  CHECK((red.m - Mat::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Bloch parametrization") {
  const Vec3 r(0.5, 0.5, 0.5);
  auto rho = bloch_to_density(r);
  CHECK((density_to_bloch(rho) - r).norm() < 1e-13);
  // det rho = (1 - |r|^2)/4 = 1/16.
  const cplx det = rho.m(0, 0) * rho.m(1, 1) - rho.m(0, 1) * rho.m(1, 0);
  CHECK(std::abs(det - cplx(1.0 / 16.0, 0)) < 1e-14);
  // Unit vectors are pure, interior points are not.
  CHECK(is_pure(bloch_to_density(Vec3(0, 0, 1))));
  CHECK(!is_pure(rho));
  CHECK_THROWS_WITH_AS(bloch_to_density(Vec3(0.8, 0.8, 0.8)),
                       doctest::Contains("BlochOutOfBall"), ValidationError);
}

TEST_CASE("pure_state normalizes and projects") {
  Vec psi(3);
  psi << cplx(2, 0), cplx(0, 1), cplx(1, 1);
  auto rho = pure_state(psi);
  CHECK(is_pure(rho));
  CHECK(std::abs(rho.m.trace().real() - 1.0) < 1e-13);
  CHECK((rho.m * rho.m - rho.m).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("max_entangled_projector is a unit-trace projector") {
  for (int n : {2, 3}) {
    Mat p = max_entangled_projector(n);
    CHECK(std::abs(p.trace().real() - 1.0) < 1e-13);
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-13);
  }
}
