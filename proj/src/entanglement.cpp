#include "oqs/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace oqs {

Mat partial_transpose(const Mat& rho, int nA, int nB, char which) {
  if (rho.rows() != static_cast<Eigen::Index>(nA) * nB || rho.rows() != rho.cols())
    throw ValidationError("DimensionMismatch",
                          static_cast<double>(rho.rows() - nA * nB));
  Mat out(rho.rows(), rho.cols());
  for (int a = 0; a < nA; ++a)
    for (int ap = 0; ap < nA; ++ap)
      for (int b = 0; b < nB; ++b)
        for (int bp = 0; bp < nB; ++bp) {
          if (which == 'A')
            out(ap * nB + b, a * nB + bp) = rho(a * nB + b, ap * nB + bp);
          else if (which == 'B')
            out(a * nB + bp, ap * nB + b) = rho(a * nB + b, ap * nB + bp);
          else
            throw ValidationError("DimensionMismatch", 0.0);
        }
  return out;
}

PptVerdict ppt_verdict(const DensityMatrix& rho, int nA, int nB) {
  Mat pt = partial_transpose(rho.m, nA, nB, 'B');
  Eigen::SelfAdjointEigenSolver<Mat> es((pt + pt.adjoint()) / 2.0);
  PptVerdict v;
  v.min_pt_eigenvalue = es.eigenvalues().minCoeff();
  const bool low_dim = (nA == 2 && nB == 2) || (nA == 2 && nB == 3) ||
                       (nA == 3 && nB == 2);
  if (v.min_pt_eigenvalue < -kTolPsd) {
    v.result = PptVerdict::Result::entangled;
    v.conclusive = true;
  } else if (low_dim) {
    v.result = PptVerdict::Result::separable;
    v.conclusive = true;
  } else {
    v.result = PptVerdict::Result::inconclusive;
    v.conclusive = false;
  }
  return v;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim != 4) throw ValidationError("DimensionMismatch", rho.dim - 4);
  const Mat yy = kron(pauli(2), pauli(2));
  // Eigenvalues of rho yy rho* yy equal those of the hermitian form
  // sqrt(rho) yy rho* yy sqrt(rho); use the latter for numerical reality.
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.m);
  Mat sqrt_rho = es.operatorSqrt();
  Mat herm = sqrt_rho * yy * rho.m.conjugate() * yy * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Mat> es2((herm + herm.adjoint()) / 2.0);
  std::array<double, 4> r{};
  for (int i = 0; i < 4; ++i)
    r[static_cast<std::size_t>(i)] = std::sqrt(std::max(es2.eigenvalues()[i], 0.0));
  std::sort(r.begin(), r.end(), std::greater<double>());
  return std::clamp(r[0] - r[1] - r[2] - r[3], 0.0, 1.0);
}

Mat flip_operator(int n) {
  Mat v = Mat::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) v(b * n + a, a * n + b) = 1.0;
  return v;
}

DensityMatrix werner_state(int n, double F) {
  if (F < -1.0 - 1e-12 || F > 1.0 + 1e-12)
    throw ValidationError("FOutOfRange", std::max(F - 1.0, -1.0 - F));
  const double denom = double(n) * (double(n) * n - 1.0);
  const double alpha = (n - F) / denom;
  const double beta = (n * F - 1.0) / denom;
  Mat m = alpha * Mat::Identity(n * n, n * n) + beta * flip_operator(n);
  return make_density(m, true);
}

std::array<DensityMatrix, 4> bell_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Vec pp(4), pm(4), qp(4), qm(4);
  pp << s, 0, 0, s;    // (|00> + |11>)/sqrt2
  pm << s, 0, 0, -s;   // (|00> - |11>)/sqrt2
  qp << 0, s, s, 0;    // (|01> + |10>)/sqrt2
  qm << 0, s, -s, 0;   // (|01> - |10>)/sqrt2 (singlet)
  return {pure_state(pp), pure_state(pm), pure_state(qp), pure_state(qm)};
}

DensityMatrix SeparableDecomposition::assemble() const {
  if (weights.empty() || weights.size() != factors.size())
    throw ValidationError("DimensionMismatch",
                          double(weights.size()) - double(factors.size()));
  double sum = 0.0;
  for (double w : weights) {
    if (w < -kTol) throw ValidationError("NotPSD", -w);
    sum += w;
  }
  if (std::abs(sum - 1.0) > kTol) throw ValidationError("NotUnitTrace", sum - 1.0);
  const int d = factors.front().first.dim * factors.front().second.dim;
  Mat m = Mat::Zero(d, d);
  for (std::size_t k = 0; k < weights.size(); ++k)
    m += weights[k] * kron(factors[k].first.m, factors[k].second.m);
  return make_density(m, true);
}

}  // namespace oqs
