#include "oqs/states.hpp"

#include <cmath>

namespace oqs {

DensityMatrix make_density(const Mat& entries, bool sanitize) {
  if (entries.rows() != entries.cols() || entries.rows() == 0)
    throw ValidationError("DimensionMismatch",
                          static_cast<double>(entries.rows() - entries.cols()));
  const double herm = hermiticity_defect(entries);
  if (herm > kTol) throw ValidationError("NotHermitian", herm);
  Mat h = (entries + entries.adjoint()) / 2.0;
  const double trdef = std::abs(h.trace().real() - 1.0) +
                       std::abs(h.trace().imag());
  if (trdef > kTol) throw ValidationError("NotUnitTrace", trdef);

  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kTolPsd) throw ValidationError("NotPSD", -min_eig);
  if (sanitize && min_eig < 0.0) {
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    ev /= ev.sum();
    h = es.eigenvectors() * ev.asDiagonal().toDenseMatrix().cast<cplx>() *
        es.eigenvectors().adjoint();
  }
  return DensityMatrix{static_cast<int>(h.rows()), h};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.m);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()[i];
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int nA, int nB,
                            char keep) {
  if (nA * nB != rho.dim)
    throw ValidationError("DimensionMismatch",
                          static_cast<double>(nA * nB - rho.dim));
  // Index convention: |a b> at position a*nB + b.
  Mat out;
  if (keep == 'A') {
    out = Mat::Zero(nA, nA);
    for (int a = 0; a < nA; ++a)
      for (int ap = 0; ap < nA; ++ap)
        for (int b = 0; b < nB; ++b)
          out(a, ap) += rho.m(a * nB + b, ap * nB + b);
  } else if (keep == 'B') {
    out = Mat::Zero(nB, nB);
    for (int b = 0; b < nB; ++b)
      for (int bp = 0; bp < nB; ++bp)
        for (int a = 0; a < nA; ++a)
          out(b, bp) += rho.m(a * nB + b, a * nB + bp);
  } else {
    throw ValidationError("DimensionMismatch", 0.0);
  }
  return make_density(out, true);
}

DensityMatrix bloch_to_density(const Vec3& r) {
  const double n = r.norm();
  if (n > 1.0 + 1e-12) throw ValidationError("BlochOutOfBall", n - 1.0);
  Mat m = 0.5 * (Mat::Identity(2, 2) + dot_sigma(r));
  return make_density(m, true);
}

Vec3 density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim != 2) throw ValidationError("NotQubit", rho.dim);
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = (rho.m * pauli(i + 1)).trace().real();
  return r;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix{a.dim * b.dim, kron(a.m, b.m)};
}

bool is_pure(const DensityMatrix& rho) {
  return (rho.m * rho.m - rho.m).cwiseAbs().maxCoeff() <= kTol;
}

DensityMatrix pure_state(const Vec& psi) {
  const double n = psi.norm();
  if (n < 1e-14) throw ValidationError("InputNotPure", n);
  Vec v = psi / n;
  return DensityMatrix{static_cast<int>(v.size()), v * v.adjoint()};
}

Mat max_entangled_projector(int n) {
  Vec psi = Vec::Zero(n * n);
  for (int i = 0; i < n; ++i) psi[i * n + i] = 1.0 / std::sqrt(double(n));
  return psi * psi.adjoint();
}

}  // namespace oqs
