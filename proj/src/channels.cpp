#include "oqs/channels.hpp"

#include <cmath>
#include <random>

#include "oqs/states.hpp"

namespace oqs {

QuantumChannel QuantumChannel::from_kraus(std::vector<Mat> ops,
                                          bool trace_preserving) {
  if (ops.empty()) throw ValidationError("DimensionMismatch", 0.0);
  const Eigen::Index n = ops.front().rows();
  Mat norm = Mat::Zero(n, n);
  for (const Mat& k : ops) {
    if (k.rows() != n || k.cols() != n)
      throw ValidationError("DimensionMismatch",
                            static_cast<double>(k.rows() - n));
    norm += k.adjoint() * k;
  }
  if (trace_preserving) {
    const double defect = (norm - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > kTol) throw ValidationError("KrausNotTracePreserving", defect);
  }
  QuantumChannel ch;
  ch.dim = static_cast<int>(n);
  ch.kraus = std::move(ops);
  ch.trace_preserving = trace_preserving;
  return ch;
}

QuantumChannel QuantumChannel::from_choi(const Mat& choi, int dim,
                                         bool trace_preserving) {
  if (choi.rows() != choi.cols() ||
      choi.rows() != static_cast<Eigen::Index>(dim) * dim)
    throw ValidationError("DimensionMismatch",
                          static_cast<double>(choi.rows() - dim * dim));
  const double herm = hermiticity_defect(choi);
  if (herm > kTol) throw ValidationError("NotHermitian", herm);
  QuantumChannel ch;
  ch.dim = dim;
  ch.choi = (choi + choi.adjoint()) / 2.0;
  ch.trace_preserving = trace_preserving;
  return ch;
}

Mat apply(const QuantumChannel& ch, const Mat& X) {
  const int n = ch.dim;
  if (X.rows() != n || X.cols() != n)
    throw ValidationError("DimensionMismatch",
                          static_cast<double>(X.rows() - n));
  if (ch.has_kraus()) {
    Mat out = Mat::Zero(n, n);
    for (const Mat& k : ch.kraus) out += k * X * k.adjoint();
    return out;
  }
  // Lambda[X] = n Tr_2[ Choi (1 (x) X^T) ]; index (a i) = a*n + i.
  Mat out = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cplx s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s += ch.choi(a * n + i, b * n + j) * X(i, j);
      out(a, b) = double(n) * s;
    }
  return out;
}

Mat choi_of(const QuantumChannel& ch) {
  if (ch.has_choi()) return ch.choi;
  const int n = ch.dim;
  // (Lambda (x) id)[P+] assembled from Lambda on matrix units.
  Mat choi = Mat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat unit = Mat::Zero(n, n);
      unit(i, j) = 1.0;
      Mat img = oqs::apply(ch, unit);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          choi(a * n + i, b * n + j) += img(a, b) / double(n);
    }
  return choi;
}

CpVerdict is_completely_positive(const QuantumChannel& ch) {
  Eigen::SelfAdjointEigenSolver<Mat> es(choi_of(ch));
  const double min_eig = es.eigenvalues().minCoeff();
  return CpVerdict{min_eig >= -kTolPsd, min_eig};
}

namespace {

Vec random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(g(rng), g(rng));
  return v / v.norm();
}

}  // namespace

PositiveMapVerdict is_positive_map(const QuantumChannel& ch, int trials,
                                   std::uint64_t seed) {
  const int n = ch.dim;
  const Mat choi = choi_of(ch);
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  Vec best_psi, best_phi;
  for (int trial = 0; trial < std::max(trials, 1); ++trial) {
    Vec psi = random_unit(rng, n), phi = random_unit(rng, n);
    double value = 0.0, prev = std::numeric_limits<double>::infinity();
    // Alternating exact minimization: for fixed phi the optimal psi is the
    // minimal eigenvector of the contracted Choi block, and vice versa.
    for (int it = 0; it < 200; ++it) {
      Mat contracted_psi = Mat::Zero(n, n);  // acts on psi, phi fixed
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          cplx s = 0.0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              s += std::conj(phi[i]) * choi(a * n + i, b * n + j) * phi[j];
          contracted_psi(a, b) = s;
        }
      Eigen::SelfAdjointEigenSolver<Mat> es1(contracted_psi);
      int idx = 0;
      es1.eigenvalues().minCoeff(&idx);
      psi = es1.eigenvectors().col(idx);

      Mat contracted_phi = Mat::Zero(n, n);  // acts on phi, psi fixed
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          cplx s = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              s += std::conj(psi[a]) * choi(a * n + i, b * n + j) * psi[b];
          contracted_phi(i, j) = s;
        }
      Eigen::SelfAdjointEigenSolver<Mat> es2(contracted_phi);
      es2.eigenvalues().minCoeff(&idx);
      phi = es2.eigenvectors().col(idx);
      value = es2.eigenvalues()[idx];
      if (std::abs(prev - value) < 1e-15) break;
      prev = value;
    }
    if (value < best) {
      best = value;
      best_psi = psi;
      best_phi = phi;
    }
  }
  PositiveMapVerdict v;
  v.worst_product_value = best;
  v.positive = best >= -kTolPsd;
  v.psi = best_psi;
  v.phi = best_phi;
  return v;
}

std::vector<Mat> kraus_from_choi(const Mat& choi) {
  const int n = static_cast<int>(std::lround(std::sqrt(double(choi.rows()))));
  Eigen::SelfAdjointEigenSolver<Mat> es((choi + choi.adjoint()) / 2.0);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kTolPsd) throw ValidationError("ChoiNotPSD", -min_eig);
  std::vector<Mat> ops;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double lam = std::max(es.eigenvalues()[k], 0.0);
    if (lam <= 0.0) continue;
    const double scale = std::sqrt(double(n) * lam);
    Mat K(n, n);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i) K(a, i) = scale * es.eigenvectors()(a * n + i, k);
    ops.push_back(K);
  }
  return ops;
}

QuantumChannel pauli_form_to_channel(const PauliFormMap& m) {
  // X -> sum C_{ab} sigma_a X sigma_b represented through its Choi matrix.
  QuantumChannel ch;
  ch.dim = 2;
  Mat choi = Mat::Zero(4, 4);
  const Mat pplus = max_entangled_projector(2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (m.C(a, b) == cplx(0.0)) continue;
      Mat left = kron(pauli(a), Mat::Identity(2, 2));
      Mat right = kron(pauli(b), Mat::Identity(2, 2));
      choi += m.C(a, b) * left * pplus * right;
    }
  ch.choi = (choi + choi.adjoint()) / 2.0;
  const double herm = hermiticity_defect(choi);
  if (herm > kTol) throw ValidationError("NotHermitian", herm);
  return ch;
}

QuantumChannel identity_channel(int n) {
  return QuantumChannel::from_kraus({Mat::Identity(n, n)});
}

QuantumChannel transposition_channel(int n) {
  // Choi = V/n with V the flip operator.
  Mat choi = Mat::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) choi(a * n + i, i * n + a) = 1.0 / double(n);
  QuantumChannel ch = QuantumChannel::from_choi(choi, n, true);
  return ch;
}

QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner) {
  if (outer.dim != inner.dim)
    throw ValidationError("DimensionMismatch",
                          static_cast<double>(outer.dim - inner.dim));
  const int n = outer.dim;
  QuantumChannel ch;
  ch.dim = n;
  ch.trace_preserving = outer.trace_preserving && inner.trace_preserving;
  // Build the Choi matrix of the composition from its action on matrix units.
  Mat choi = Mat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat unit = Mat::Zero(n, n);
      unit(i, j) = 1.0;
      Mat img = oqs::apply(outer, oqs::apply(inner, unit));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          choi(a * n + i, b * n + j) += img(a, b) / double(n);
    }
  ch.choi = choi;
  return ch;
}

}  // namespace oqs
