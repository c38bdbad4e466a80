#pragma once

// Shared linear-algebra aliases and small helpers used across the library.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace oqs {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat3c = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

// Tolerances: tol for trace/hermiticity acceptance, tol_psd for positivity.
inline constexpr double kTol = 1e-9;
inline constexpr double kTolPsd = 1e-10;

// Validation failure; `invariant` names the violated condition and
// `magnitude` the offending size. CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, double magnitude)
      : std::runtime_error(invariant + " (violation magnitude " +
                           std::to_string(magnitude) + ")"),
        invariant_(std::move(invariant)),
        magnitude_(magnitude) {}
  const std::string& invariant() const { return invariant_; }
  double magnitude() const { return magnitude_; }

 private:
  std::string invariant_;
  double magnitude_;
};

// Numerical failure inside an algorithm (quadrature, integration).
class NumericsError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Column-major vectorization and its inverse; vec(AXB) = (B^T (x) A) vec(X).
inline Vec vectorize(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

inline Mat unvectorize(const Vec& v, Eigen::Index n) {
  return Eigen::Map<const Mat>(v.data(), n, n);
}

// Pauli matrices sigma_0..sigma_3.
inline const Mat& pauli(int i) {
  static const std::array<Mat, 4> sigma = [] {
    std::array<Mat, 4> s;
    s[0] = Mat::Identity(2, 2);
    s[1] = Mat(2, 2);
    s[1] << 0, 1, 1, 0;
    s[2] = Mat(2, 2);
    s[2] << 0, cplx(0, -1), cplx(0, 1), 0;
    s[3] = Mat(2, 2);
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(i));
}

// w . sigma for a real 3-vector w.
inline Mat dot_sigma(const Vec3& w) {
  return w[0] * pauli(1) + w[1] * pauli(2) + w[2] * pauli(3);
}

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }
inline Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

inline Mat dagger(const Mat& m) { return m.adjoint(); }

inline double hermiticity_defect(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Levi-Civita symbol for indices in {0,1,2}.
inline double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) ||
      (i == 2 && j == 0 && k == 1))
    return 1.0;
  return -1.0;
}

}  // namespace oqs
