#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "oqs/atomfield.hpp"
#include "oqs/entanglement.hpp"

using namespace oqs;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("thermal Wightman transform in four dimensions") {
  // Closed form (zeta/2pi) / (1 - e^{-beta zeta}).
  for (double beta : {0.7, 2.0})
    for (double z : {-1.3, -0.2, 0.4, 2.5}) {
      const double want = z / (2.0 * kPi) / (1.0 - std::exp(-beta * z));
      CHECK(wightman_fourier(z, beta) == doctest::Approx(want).epsilon(1e-13));
    }
  // Zero-frequency limit 1/(2 pi beta).
  CHECK(wightman_fourier(0.0, 2.0) ==
        doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-13));
  // Detailed balance.
  CHECK(wightman_fourier(-0.7, 2.0) ==
        doctest::Approx(std::exp(-1.4) * wightman_fourier(0.7, 2.0))
            .epsilon(1e-13));
}

TEST_CASE("Wightman transform at zero temperature") {
  CHECK(wightman_fourier(1.2, kInf) ==
        doctest::Approx(1.2 / (2.0 * kPi)).epsilon(1e-13));
  CHECK(wightman_fourier(-1.2, kInf) == doctest::Approx(0.0));
  CHECK(wightman_fourier(0.0, kInf) == doctest::Approx(0.0));
}

TEST_CASE("Wightman transform in other dimensions") {
  // d >= 5 vanishes at zero frequency; d = 2, 3 diverges there.
  CHECK(wightman_fourier(0.0, 2.0, 5) == doctest::Approx(0.0));
  CHECK(wightman_fourier(0.0, 2.0, 6) == doctest::Approx(0.0));
  CHECK_THROWS_WITH_AS(wightman_fourier(0.0, 2.0, 2),
                       doctest::Contains("ZeroFrequencyLimitDivergent"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(wightman_fourier(0.0, 2.0, 3),
                       doctest::Contains("ZeroFrequencyLimitDivergent"),
                       ValidationError);
  // Detailed balance holds in every dimension.
  CHECK(wightman_fourier(-0.9, 1.5, 6) ==
        doctest::Approx(std::exp(-1.35) * wightman_fourier(0.9, 1.5, 6))
            .epsilon(1e-12));
}

TEST_CASE("single-atom coefficients") {
  AtomParams p;
  p.omega = std::log(3.0);  // beta omega = ln 3 at beta = 1
  p.beta = 1.0;
  auto cc = single_atom_coeffs(p);
  CHECK(cc.R == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(cc.R == doctest::Approx(cc.B / cc.A).epsilon(1e-13));
  // Zero temperature: R = 1 and C = -A.
  AtomParams pz;
  pz.omega = 1.0;
  pz.beta = kInf;
  auto ccz = single_atom_coeffs(pz);
  CHECK(ccz.R == doctest::Approx(1.0));
  CHECK(ccz.A == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-13));
  CHECK(ccz.C == doctest::Approx(-ccz.A).epsilon(1e-13));
}

TEST_CASE("parameter validation") {
  AtomParams p;
  p.omega = -1.0;
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("OmegaNotPositive"),
                       ValidationError);
  p.omega = 1.0;
  p.beta = -2.0;
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("BetaNotPositive"),
                       ValidationError);
}

TEST_CASE("Kossakowski matrix structure") {
  AtomParams p;
  p.omega = 1.4;
  p.beta = 1.7;
  p.n = Vec3(1, 2, 2).normalized();
  auto cc = single_atom_coeffs(p);
  Mat3c c = single_atom_kossakowski(p);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx want = cc.C * p.n[i] * p.n[j];
      if (i == j) want += cc.A;
      for (int k = 0; k < 3; ++k)
        want += cplx(0, -cc.B) * levi_civita(i, j, k) * p.n[k];
      CHECK(std::abs(c(i, j) - want) < 1e-13);
    }
  CHECK(hermiticity_defect(Mat(c)) < 1e-13);
}

TEST_CASE("single-atom generator: stationary state and decay spectrum") {
  AtomParams p;
  p.omega = 1.0;
  p.beta = 2.0;
  p.n = Vec3(0.0, 0.6, 0.8);
  auto cc = single_atom_coeffs(p);
  auto g = single_atom_generator(p);
  auto sts = stationary_states(g);
  REQUIRE(sts.size() == 1);
  CHECK((density_to_bloch(sts[0]) + cc.R * p.n).norm() < 1e-9);
  Eigen::SelfAdjointEigenSolver<Mat3> es(to_bloch_affine(g).D3());
  std::array<double, 3> want{2.0 * cc.A, 2.0 * cc.A + cc.C,
                             2.0 * cc.A + cc.C};
  std::sort(want.begin(), want.end());
  for (int i = 0; i < 3; ++i)
    CHECK(es.eigenvalues()[i] == doctest::Approx(want[i]).epsilon(1e-10));
}

TEST_CASE("transition probability matches the evolved overlap") {
  AtomParams p;
  p.omega = 1.3;
  p.beta = 2.0;
  p.n = Vec3(0.0, 0.6, 0.8);
  auto g = single_atom_generator(p);
  const Vec3 ri = Vec3(1, 1, 1).normalized();
  const Vec3 rf = Vec3(-1, 2, 0.5).normalized();
  auto rho_f = bloch_to_density(rf);
  for (double t : {0.0, 0.3, 1.7, 6.0}) {
    const double direct =
        (rho_f.m * evolve(g, bloch_to_density(ri), t).m).trace().real();
    CHECK(transition_probability(p, ri, rf, t) ==
          doctest::Approx(direct).epsilon(1e-10));
  }
  // t = 0 reduces to the overlap of the pure states.
  CHECK(transition_probability(p, ri, rf, 0.0) ==
        doctest::Approx((1.0 + ri.dot(rf)) / 2.0).epsilon(1e-12));
  CHECK_THROWS_WITH_AS(transition_probability(p, 0.5 * ri, rf, 1.0),
                       doctest::Contains("BlochOutOfBall"), ValidationError);
}

TEST_CASE("excitation and decay rates from log-linear fits") {
  AtomParams p;
  p.omega = 1.0;
  p.beta = 2.0;
  auto cc = single_atom_coeffs(p);
  auto d = to_bloch_affine(single_atom_generator(p));
  // Longitudinal relaxation at 4A, transverse at 2(2A + C): fit the decay
  // of the matching component of the distance to equilibrium (rotation
  // about the axis preserves the transverse norm).
  const double t1 = 1.0, t2 = 2.0;
  Vec3 a1 = evolve_bloch(d, Vec3(0, 0, 1), t1);
  Vec3 a2 = evolve_bloch(d, Vec3(0, 0, 1), t2);
  const double along =
      std::log((a1[2] + cc.R) / (a2[2] + cc.R)) / (t2 - t1);
  Vec3 b1 = evolve_bloch(d, Vec3(1, 0, 0), t1);
  Vec3 b2 = evolve_bloch(d, Vec3(1, 0, 0), t2);
  const double across = std::log(std::hypot(b1[0], b1[1]) /
                                 std::hypot(b2[0], b2[1])) /
                        (t2 - t1);
  CHECK(along == doctest::Approx(4.0 * cc.A).epsilon(1e-8));
  CHECK(across ==
        doctest::Approx(2.0 * (2.0 * cc.A + cc.C)).epsilon(1e-8));
}

TEST_CASE("collective operator algebra") {
  // Sigma_i Sigma_j = 2 delta_ij + i eps_ijk Sigma_k + S_ij
  // (operators indexed 1..3 like the Pauli matrices).
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Mat want = s_two(i, j);
      if (i == j) want += 2.0 * Mat::Identity(4, 4);
      for (int k = 1; k <= 3; ++k)
        want += cplx(0, levi_civita(i - 1, j - 1, k - 1)) * sigma_two(k);
      CHECK((sigma_two(i) * sigma_two(j) - want).cwiseAbs().maxCoeff() <
            1e-13);
    }
  // P = (1/4)(1 - S/2) with S = sum_i S_ii projects onto the singlet and
  // annihilates the collective operators.
  Mat S = s_two(1, 1) + s_two(2, 2) + s_two(3, 3);
  Mat P = 0.25 * (Mat::Identity(4, 4) - 0.5 * S);
  CHECK((P * P - P).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(std::abs(P.trace().real() - 1.0) < 1e-13);
  for (int i = 1; i <= 3; ++i) {
    CHECK((sigma_two(i) * P).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((P * sigma_two(i)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("two-atom component maps are mutually inverse") {
  TwoAtomState s;
  s.v1 = Vec3(0.1, -0.2, 0.25);
  s.v2 = Vec3(-0.05, 0.15, 0.1);
  s.M << 0.1, 0.05, -0.02, 0.03, -0.2, 0.04, -0.01, 0.06, 0.15;
  auto back = two_atom_components(reconstruct_two_atom(s));
  CHECK((back.v1 - s.v1).norm() < 1e-14);
  CHECK((back.v2 - s.v2).norm() < 1e-14);
  CHECK((back.M - s.M).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("two-atom derivative matches the operator-form generator") {
  AtomParams p;
  p.omega = 1.3;
  p.beta = 2.0;
  p.n = Vec3(0.0, 0.6, 0.8);
  TwoAtomState s;
  s.v1 = Vec3(0.1, -0.2, 0.25);
  s.v2 = Vec3(-0.05, 0.15, 0.1);
  s.M << 0.1, 0.05, -0.02, 0.03, -0.2, 0.04, -0.01, 0.06, 0.15;
  Mat lhs = apply_generator(two_atom_generator(p), reconstruct_two_atom(s));
  // The component map adds 1/4 identity; a derivative has zero weight there.
  Mat rhs = reconstruct_two_atom(two_atom_rhs(p, s)) -
            Mat::Identity(4, 4) / 4.0;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
  // tau is conserved: the derivative of M is traceless.
  CHECK(std::abs(two_atom_rhs(p, s).M.trace()) < 1e-13);
}

TEST_CASE("singlet is exactly stationary") {
  AtomParams p;
  p.omega = 1.0;
  p.beta = 1.5;
  TwoAtomState singlet;
  singlet.M = -Mat3::Identity();
  auto d = two_atom_rhs(p, singlet);
  CHECK(d.v1.norm() < 1e-14);
  CHECK(d.v2.norm() < 1e-14);
  CHECK(d.M.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("two-atom evolution approaches the projected asymptote") {
  AtomParams p;
  p.omega = 1.0;
  p.beta = 2.0;
  p.n = Vec3(0, 0, 1);
  auto cc = single_atom_coeffs(p);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ud(-0.2, 0.2);
  TwoAtomState s0;
  s0.v1 = Vec3(ud(rng), ud(rng), ud(rng));
  s0.v2 = Vec3(ud(rng), ud(rng), ud(rng));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s0.M(i, j) = ud(rng);
  auto traj = evolve_two_atom(p, s0, {0.0, 60.0 / cc.A});
  auto want = asymptotic_from_projection(p, s0);
  CHECK((traj.back().v1 - want.v1).norm() < 1e-8);
  CHECK((traj.back().v2 - want.v2).norm() < 1e-8);
  CHECK((traj.back().M - want.M).cwiseAbs().maxCoeff() < 1e-8);
  // And the closed-form stationary family agrees at the conserved tau.
  auto fam = asymptotic_state(s0.tau(), cc.R, p.n);
  CHECK((want.M - fam.M).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((want.v1 - fam.v1).norm() < 1e-10);
}

TEST_CASE("evolution rejects bad time grids") {
  AtomParams p;
  TwoAtomState s;
  s.M = -Mat3::Identity();
  CHECK_THROWS_WITH_AS(evolve_two_atom(p, s, {-1.0, 2.0}),
                       doctest::Contains("NegativeTime"), ValidationError);
  CHECK_THROWS_WITH_AS(evolve_two_atom(p, s, {0.0, 2.0, 1.0}),
                       doctest::Contains("GridNotIncreasing"),
                       ValidationError);
}

TEST_CASE("asymptotic family") {
  CHECK_THROWS_WITH_AS(asymptotic_state(1.5, 0.5, Vec3(0, 0, 1)),
                       doctest::Contains("TauOutOfRange"), ValidationError);
  CHECK_THROWS_WITH_AS(asymptotic_state(-3.5, 0.5, Vec3(0, 0, 1)),
                       doctest::Contains("TauOutOfRange"), ValidationError);
  const double R = 0.6;
  auto st = asymptotic_state(-1.0, R, Vec3(0, 0, 1));
  // Stationary under the dynamics at matching R.
  AtomParams p;
  p.omega = 1.0;
  p.beta = 2.0 * std::atanh(R);  // R = tanh(beta omega / 2)
  p.n = Vec3(0, 0, 1);
  CHECK(single_atom_coeffs(p).R == doctest::Approx(R).epsilon(1e-12));
  auto d = two_atom_rhs(p, st);
  CHECK(d.v1.norm() < 1e-12);
  CHECK(d.M.cwiseAbs().maxCoeff() < 1e-12);
  // Concurrence formula: 2R^2/(3+R^2) on the antiparallel branch, clamped
  // to zero when tau is large.
  CHECK(asymptotic_concurrence(-1.0, R) ==
        doctest::Approx(2.0 * R * R / (3.0 + R * R)).epsilon(1e-12));
  CHECK(asymptotic_concurrence(0.9, 0.3) == doctest::Approx(0.0));
  // Concurrence of the assembled density matrix agrees.
  auto rho = make_density(reconstruct_two_atom(st), true);
  CHECK(concurrence(rho) ==
        doctest::Approx(asymptotic_concurrence(-1.0, R)).epsilon(1e-10));
}

TEST_CASE("entanglement generation test") {
  AtomParams p;
  p.omega = 1.3;
  p.beta = 2.0;
  p.n = Vec3(0.0, 0.6, 0.8);
  auto cc = single_atom_coeffs(p);
  Eigen::Vector2cd minus(0, 1), plus(1, 0);
  auto et = entanglement_generation_test(p, minus, plus);
  CHECK(et.fires);
  CHECK(et.rhs - et.lhs ==
        doctest::Approx(cc.B * p.n[2] * cc.B * p.n[2]).epsilon(1e-12));
  // Parallel ground-state pair along the axis: no entanglement production.
  AtomParams pz = p;
  pz.n = Vec3(0, 0, 1);
  CHECK(!entanglement_generation_test(pz, minus, minus).fires);
  // Inputs must be normalized.
  CHECK_THROWS_WITH_AS(
      entanglement_generation_test(p, 0.7 * minus, plus),
      doctest::Contains("InputNotPure"), ValidationError);
}
