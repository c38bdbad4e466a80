#include <cmath>
#include <random>

#include <doctest.h>

#include "oqs/entanglement.hpp"

using namespace oqs;

namespace {

Mat random_unitary(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ();
}

DensityMatrix singlet() {
  Vec psi(4);
  psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  return pure_state(psi);
}

}  // namespace

TEST_CASE("partial transpose of product matrices") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat a(2, 2), b(3, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = cplx(nd(rng), nd(rng));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = cplx(nd(rng), nd(rng));
  Mat prod = kron(a, b);
  CHECK((partial_transpose(prod, 2, 3, 'A') - kron(a.transpose(), b))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CHECK((partial_transpose(prod, 2, 3, 'B') - kron(a, b.transpose()))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  // Transposing twice restores the matrix.
  CHECK((partial_transpose(partial_transpose(prod, 2, 3, 'A'), 2, 3, 'A') -
         prod)
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("PPT verdicts") {
  auto mixed = make_density(Mat::Identity(4, 4) / 4.0);
  auto v1 = ppt_verdict(mixed, 2, 2);
  CHECK(v1.conclusive);
  CHECK(v1.result == PptVerdict::Result::separable);

  auto v2 = ppt_verdict(singlet(), 2, 2);
  CHECK(v2.conclusive);
  CHECK(v2.result == PptVerdict::Result::entangled);
  CHECK(v2.min_pt_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));

  // 3x3 PPT states are inconclusive under this criterion alone.
  auto v3 = ppt_verdict(werner_state(3, 0.5), 3, 3);
  CHECK(v3.min_pt_eigenvalue > -1e-12);
  CHECK(!v3.conclusive);
  CHECK(v3.result == PptVerdict::Result::inconclusive);
}

TEST_CASE("concurrence of Bell and product states") {
  auto bells = bell_basis();
  for (const auto& b : bells)
    CHECK(concurrence(b) == doctest::Approx(1.0).epsilon(1e-12));
  auto prod = tensor(bloch_to_density(Vec3(0, 0, 1)),
                     bloch_to_density(Vec3(1, 0, 0)));
  CHECK(concurrence(prod) == doctest::Approx(0.0));
}

TEST_CASE("concurrence is invariant under local unitaries") {
  std::mt19937_64 rng(22);
  auto rho = werner_state(2, -0.6);
  const double c0 = concurrence(rho);
  for (int k = 0; k < 5; ++k) {
    Mat u = kron(random_unitary(rng, 2), random_unitary(rng, 2));
    auto rotated = make_density(u * rho.m * u.adjoint(), true);
    CHECK(concurrence(rotated) == doctest::Approx(c0).epsilon(1e-10));
  }
}

TEST_CASE("two-qubit Werner family") {
  const double F = 0.3;
  auto w = werner_state(2, F);
  Mat want(4, 4);
  want << 1 + F, 0, 0, 0,
          0, 2 - F, 2 * F - 1, 0,
          0, 2 * F - 1, 2 - F, 0,
          0, 0, 0, 1 + F;
  want /= 6.0;
  CHECK((w.m - want).cwiseAbs().maxCoeff() < 1e-13);
  // Flip expectation reproduces F.
  CHECK((flip_operator(2) * w.m).trace().real() ==
        doctest::Approx(F).epsilon(1e-12));
  CHECK_THROWS_WITH_AS(werner_state(2, 1.5), doctest::Contains("FOutOfRange"),
                       ValidationError);
}

TEST_CASE("Werner states commute with U tensor U") {
  std::mt19937_64 rng(23);
  for (int n : {2, 3}) {
    auto w = werner_state(n, -0.4);
    Mat u = random_unitary(rng, n);
    Mat uu = kron(u, u);
    CHECK((uu * w.m - w.m * uu).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Werner entanglement threshold at F = 0") {
  CHECK(concurrence(werner_state(2, -0.5)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(concurrence(werner_state(2, 0.2)) == doctest::Approx(0.0));
  CHECK(ppt_verdict(werner_state(2, -0.1), 2, 2).result ==
        PptVerdict::Result::entangled);
  CHECK(ppt_verdict(werner_state(2, 0.1), 2, 2).result ==
        PptVerdict::Result::separable);
}

TEST_CASE("Bell basis is an orthogonal resolution of identity") {
  auto bells = bell_basis();
  Mat sum = Mat::Zero(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    sum += bells[i].m;
    for (std::size_t j = 0; j < 4; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      CHECK(std::abs((bells[i].m * bells[j].m).trace().real() - want) <
            1e-13);
    }
  }
  CHECK((sum - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("flip operator") {
  Mat v = flip_operator(3);
  CHECK((v * v - Mat::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-14);
  Vec a(3), b(3);
  a << 1, 0, 0;
  b << 0, cplx(0, 1), 0;
  CHECK((v * kron(a, b) - kron(b, a)).cwiseAbs().maxCoeff() < 1e-14);
}
