#include <cmath>
#include <random>

#include <doctest.h>

#include "oqs/channels.hpp"
#include "oqs/states.hpp"

using namespace oqs;

namespace {

Mat random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(nd(rng), nd(rng));
  return m;
}

DensityMatrix random_state(std::mt19937_64& rng, int n) {
  Mat a = random_matrix(rng, n);
  Mat m = a * a.adjoint();
  return make_density(m / m.trace().real());
}

QuantumChannel depolarizing(double p) {
  std::vector<Mat> ks;
  ks.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * pauli(0));
  for (int i = 1; i <= 3; ++i) ks.push_back(std::sqrt(p / 4.0) * pauli(i));
  return QuantumChannel::from_kraus(std::move(ks));
}

}  // namespace

TEST_CASE("identity channel acts trivially and has the entangled Choi") {
  auto id = identity_channel(3);
  std::mt19937_64 rng(5);
  Mat x = random_matrix(rng, 3);
  CHECK((oqs::apply(id, x) - x).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((choi_of(id) - max_entangled_projector(3)).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK(is_completely_positive(id).cp);
}

TEST_CASE("transposition is positive but not completely positive") {
  auto t = transposition_channel(2);
  std::mt19937_64 rng(6);
  Mat x = random_matrix(rng, 2);
  CHECK((oqs::apply(t, x) - x.transpose()).cwiseAbs().maxCoeff() < 1e-14);

  Eigen::SelfAdjointEigenSolver<Mat> es(choi_of(t));
  CHECK(es.eigenvalues()[0] == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(es.eigenvalues()[3] == doctest::Approx(0.5).epsilon(1e-13));

  auto cp = is_completely_positive(t);
  CHECK(!cp.cp);
  CHECK(cp.min_choi_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(is_positive_map(t).positive);
}

TEST_CASE("transposition tensor products stay positive on states") {
  // T acting on one factor of a product state keeps it a state.
  auto t = transposition_channel(2);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    auto rho = random_state(rng, 2);
    Mat out = oqs::apply(t, rho.m);
    Eigen::SelfAdjointEigenSolver<Mat> es(out);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }
}

TEST_CASE("depolarizing channel") {
  const double p = 0.3;
  auto ch = depolarizing(p);
  CHECK(is_completely_positive(ch).cp);
  std::mt19937_64 rng(8);
  auto rho = random_state(rng, 2);
  Mat want = (1.0 - p) * rho.m + p * Mat::Identity(2, 2) / 2.0;
  CHECK((oqs::apply(ch, rho.m) - want).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("reduction map X -> Tr(X) 1 - X is positive but not CP") {
  // Build its Choi matrix directly.
  Mat choi = Mat::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat e = Mat::Zero(2, 2);
      e(i, j) = 1.0;
      Mat le = e.trace() * Mat::Identity(2, 2) - e;
      choi += 0.5 * kron(le, e);
    }
  auto ch = QuantumChannel::from_choi(choi, 2, true);
  CHECK(!is_completely_positive(ch).cp);
  CHECK(is_positive_map(ch).positive);
  std::mt19937_64 rng(9);
  auto rho = random_state(rng, 2);
  Mat want = Mat::Identity(2, 2) - rho.m;
  CHECK((oqs::apply(ch, rho.m) - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("negative product witness certifies non-positivity") {
  // X -> Tr(X) 1/2 - X is not even positive on pure states.
  Mat choi = Mat::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat e = Mat::Zero(2, 2);
      e(i, j) = 1.0;
      Mat le = 0.5 * e.trace() * Mat::Identity(2, 2) - e;
      choi += 0.5 * kron(le, e);
    }
  auto v = is_positive_map(QuantumChannel::from_choi(choi, 2, false));
  CHECK(!v.positive);
  // Best violation is -1/2 on the map, -1/4 on the trace-1 Choi form.
  CHECK(v.worst_product_value < -0.2);
}

TEST_CASE("kraus_from_choi round-trips CP channels") {
  auto ch = depolarizing(0.45);
  auto ks = kraus_from_choi(choi_of(ch));
  auto rebuilt = QuantumChannel::from_kraus(ks);
  std::mt19937_64 rng(10);
  for (int k = 0; k < 5; ++k) {
    Mat x = random_matrix(rng, 2);
    CHECK((oqs::apply(ch, x) - oqs::apply(rebuilt, x)).cwiseAbs().maxCoeff() <
          1e-12);
  }
  CHECK_THROWS_WITH_AS(kraus_from_choi(choi_of(transposition_channel(2))),
                       doctest::Contains("ChoiNotPSD"), ValidationError);
}

TEST_CASE("Pauli-form coefficient matrices") {
  // C = diag(1, 0, 0, 0): identity.
  PauliFormMap id;
  id.C = Eigen::Matrix4cd::Zero();
  id.C(0, 0) = 1.0;
  auto ch_id = pauli_form_to_channel(id);
  // C = diag(1/2, 1/2, -1/2, 1/2): transposition.
  PauliFormMap tr;
  tr.C = Eigen::Matrix4cd::Zero();
  tr.C(0, 0) = 0.5;
  tr.C(1, 1) = 0.5;
  tr.C(2, 2) = -0.5;
  tr.C(3, 3) = 0.5;
  auto ch_tr = pauli_form_to_channel(tr);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    Mat x = random_matrix(rng, 2);
    CHECK((oqs::apply(ch_id, x) - x).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((oqs::apply(ch_tr, x) - x.transpose()).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("composition") {
  auto t = transposition_channel(2);
  auto both = compose(t, t);
  std::mt19937_64 rng(12);
  Mat x = random_matrix(rng, 2);
  CHECK((oqs::apply(both, x) - x).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("from_kraus validates trace preservation") {
  std::vector<Mat> ks{0.5 * pauli(0)};
  CHECK_THROWS_WITH_AS(QuantumChannel::from_kraus(ks, true),
                       doctest::Contains("KrausNotTracePreserving"),
                       ValidationError);
  CHECK_NOTHROW(QuantumChannel::from_kraus(ks, false));
}
