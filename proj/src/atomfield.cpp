#include "oqs/atomfield.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace oqs {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Overflow-safe 1 / (1 - e^{-x}).
double bose_factor(double x) {
  if (x > 0.0) return 1.0 / (-std::expm1(-x));
  return std::exp(x) / std::expm1(x);
}
}  // namespace

void AtomParams::validate() const {
  if (!(omega > 0.0)) throw ValidationError("OmegaNotPositive", -omega);
  if (!(beta > 0.0)) throw ValidationError("BetaNotPositive", -beta);
  const double defect = std::abs(n.norm() - 1.0);
  if (defect > 1e-12) throw ValidationError("DirectionNotUnit", defect);
}

double wightman_fourier(double zeta, double beta, int d) {
  if (d < 2) throw ValidationError("DimensionOutOfRange", 2.0 - d);
  if (!(beta > 0.0)) throw ValidationError("BetaNotPositive", -beta);
  if (zeta == 0.0) {
    if (d == 4) return std::isinf(beta) ? 0.0 : 1.0 / (2.0 * kPi * beta);
    if (d >= 5) return 0.0;
    throw ValidationError("ZeroFrequencyLimitDivergent", static_cast<double>(d));
  }
  const double norm = 2.0 * std::pow(std::abs(zeta), d - 2) /
                      (std::pow(4.0 * kPi, (d - 1) / 2.0) *
                       std::exp(std::lgamma((d - 1) / 2.0)));
  const double pref = norm * kPi / zeta;
  if (std::isinf(beta)) return zeta > 0.0 ? pref : 0.0;
  return pref * bose_factor(beta * zeta);
}

SingleAtomCoeffs single_atom_coeffs(const AtomParams& p) {
  p.validate();
  SingleAtomCoeffs c;
  if (p.zero_temperature()) {
    c.A = p.omega / (4.0 * kPi);
    c.B = c.A;
    c.C = -c.A;  // G(0) = 0 at zero temperature
    c.R = 1.0;
    return c;
  }
  const double gp = wightman_fourier(p.omega, p.beta);
  const double gm = wightman_fourier(-p.omega, p.beta);
  c.A = (gp + gm) / 2.0;
  c.B = (gp - gm) / 2.0;
  c.C = wightman_fourier(0.0, p.beta) - c.A;
  c.R = c.B / c.A;
  return c;
}

Mat3c single_atom_kossakowski(const AtomParams& p) {
  const SingleAtomCoeffs c = single_atom_coeffs(p);
  Mat3c K = Mat3c::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx v = c.C * p.n[i] * p.n[j];
      if (i == j) v += c.A;
      for (int k = 0; k < 3; ++k)
        v += cplx(0.0, -c.B * levi_civita(i, j, k) * p.n[k]);
      K(i, j) = v;
    }
  return K;
}

LindbladGenerator single_atom_generator(const AtomParams& p) {
  return LindbladGenerator::qubit((p.omega / 2.0) * dot_sigma(p.n),
                                  single_atom_kossakowski(p));
}

double transition_probability(const AtomParams& p, const Vec3& rho_i,
                              const Vec3& rho_f, double t) {
  p.validate();
  if (t < 0.0) throw ValidationError("NegativeTime", -t);
  const double di = std::abs(rho_i.norm() - 1.0);
  const double df = std::abs(rho_f.norm() - 1.0);
  if (di > 1e-9) throw ValidationError("BlochOutOfBall", di);
  if (df > 1e-9) throw ValidationError("BlochOutOfBall", df);

  const SingleAtomCoeffs c = single_atom_coeffs(p);
  const Vec3& n = p.n;
  const double fi_n = rho_i.dot(n), ff_n = rho_f.dot(n);
  const double e4 = std::exp(-4.0 * c.A * t);
  const double et = std::exp(-2.0 * (2.0 * c.A + c.C) * t);
  const double prob =
      0.5 * (1.0 - ff_n * (1.0 - e4) * c.R + e4 * fi_n * ff_n +
             et * ((rho_i.dot(rho_f) - fi_n * ff_n) * std::cos(p.omega * t) +
                   n.dot(rho_i.cross(rho_f)) * std::sin(p.omega * t)));
  return std::clamp(prob, 0.0, 1.0);
}

Mat reconstruct_two_atom(const TwoAtomState& s) {
  Mat rho = Mat::Identity(4, 4);
  for (int i = 0; i < 3; ++i) {
    rho += s.v1[i] * kron(pauli(0), pauli(i + 1));
    rho += s.v2[i] * kron(pauli(i + 1), pauli(0));
    for (int j = 0; j < 3; ++j)
      rho += s.M(i, j) * kron(pauli(i + 1), pauli(j + 1));
  }
  return rho / 4.0;
}

TwoAtomState two_atom_components(const Mat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw ValidationError("DimensionMismatch",
                          static_cast<double>(rho.rows() - 4));
  TwoAtomState s;
  for (int i = 0; i < 3; ++i) {
    s.v1[i] = (rho * kron(pauli(0), pauli(i + 1))).trace().real();
    s.v2[i] = (rho * kron(pauli(i + 1), pauli(0))).trace().real();
    for (int j = 0; j < 3; ++j)
      s.M(i, j) = (rho * kron(pauli(i + 1), pauli(j + 1))).trace().real();
  }
  return s;
}

Mat sigma_two(int i) {
  return kron(pauli(i), pauli(0)) + kron(pauli(0), pauli(i));
}

Mat s_two(int i, int j) {
  return kron(pauli(i), pauli(j)) + kron(pauli(j), pauli(i));
}

LindbladGenerator two_atom_generator(const AtomParams& p) {
  LindbladGenerator g;
  g.dim = 4;
  g.H = Mat::Zero(4, 4);
  // Tr(Sigma_i Sigma_j) = 8 delta_ij, so F_i = Sigma_i / (2 sqrt 2) is
  // orthonormal and the coefficient matrix rescales by 8.
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  g.basis = {s * sigma_two(1), s * sigma_two(2), s * sigma_two(3)};
  g.C = 8.0 * single_atom_kossakowski(p);
  return g;
}

TwoAtomState two_atom_rhs(const AtomParams& p, const TwoAtomState& s) {
  const SingleAtomCoeffs c = single_atom_coeffs(p);
  const double A = c.A, B = c.B, C = c.C;
  const Vec3& n = p.n;
  const double tau = s.tau();
  const Mat3 K =
      (2.0 * A + C) * Mat3::Identity() - C * (n * n.transpose());

  TwoAtomState d;
  d.v1 = -2.0 * (K * s.v1 - B * (s.M * n)) - 2.0 * B * (2.0 + tau) * n;
  d.v2 = -2.0 * (K * s.v2 - B * (s.M.transpose() * n)) -
         2.0 * B * (2.0 + tau) * n;

  const Mat3 I3 = Mat3::Identity();
  d.M = -4.0 * ((2.0 * A + C) * s.M + (A + C) * s.M.transpose() -
                ((A + C) * I3 - C * (n * n.transpose())) * tau);
  d.M += -4.0 * B * (n * s.v1.transpose() + s.v2 * n.transpose());
  d.M += -2.0 * B * (n * s.v2.transpose() + s.v1 * n.transpose());
  d.M += 2.0 * B * n.dot(s.v1 + s.v2) * I3;
  d.M += 2.0 * C * (n * (s.M.transpose() * n + 2.0 * s.M * n).transpose());
  d.M += 2.0 * C * ((s.M * n + 2.0 * s.M.transpose() * n) * n.transpose());
  d.M += -4.0 * C * n.dot(s.M * n) * I3;
  return d;
}

namespace {

using State15 = Eigen::Matrix<double, 15, 1>;

State15 pack(const TwoAtomState& s) {
  State15 y;
  y.segment<3>(0) = s.v1;
  y.segment<3>(3) = s.v2;
  for (int i = 0; i < 3; ++i) y.segment<3>(6 + 3 * i) = s.M.row(i);
  return y;
}

TwoAtomState unpack(const State15& y) {
  TwoAtomState s;
  s.v1 = y.segment<3>(0);
  s.v2 = y.segment<3>(3);
  for (int i = 0; i < 3; ++i) s.M.row(i) = y.segment<3>(6 + 3 * i);
  return s;
}

// Dormand-Prince 5(4) embedded pair with adaptive step control.
template <typename Rhs>
State15 rk45_to(const Rhs& rhs, State15 y, double t0, double t1, double rtol) {
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  const double atol = 1e-12;
  double t = t0;
  double h = std::min(1e-3, (t1 - t0) > 0 ? (t1 - t0) : 1e-3);
  long steps = 0;
  while (t < t1) {
    if (++steps > 20000000)
      throw NumericsError("IntegrationToleranceExceeded (step budget)");
    if (h < 1e-14 * std::max(1.0, std::abs(t)))
      throw NumericsError("IntegrationToleranceExceeded (step underflow)");
    bool last = false;
    if (t + h >= t1) {
      h = t1 - t;
      last = true;
    }
    const State15 k1 = rhs(y);
    const State15 k2 = rhs(y + h * (a21 * k1));
    const State15 k3 = rhs(y + h * (a31 * k1 + a32 * k2));
    const State15 k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const State15 k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const State15 k6 =
        rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const State15 ynew =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const State15 k7 = rhs(ynew);
    const State15 err =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double enorm = 0.0;
    for (int i = 0; i < 15; ++i) {
      const double sc =
          atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      enorm = std::max(enorm, std::abs(err[i]) / sc);
    }
    if (enorm <= 1.0) {
      t = last ? t1 : t + h;
      y = ynew;
    }
    const double factor =
        std::clamp(0.9 * std::pow(std::max(enorm, 1e-16), -0.2), 0.2, 5.0);
    h *= factor;
  }
  return y;
}

}  // namespace

std::vector<TwoAtomState> evolve_two_atom(const AtomParams& p,
                                          const TwoAtomState& s0,
                                          const std::vector<double>& grid,
                                          double rtol) {
  auto rhs = [&p](const State15& y) {
    return pack(two_atom_rhs(p, unpack(y)));
  };
  std::vector<TwoAtomState> out;
  out.reserve(grid.size());
  State15 y = pack(s0);
  double t = 0.0;
  for (double tk : grid) {
    if (tk < 0.0) throw ValidationError("NegativeTime", -tk);
    if (tk < t) throw ValidationError("GridNotIncreasing", t - tk);
    if (tk > t) y = rk45_to(rhs, y, t, tk, rtol);
    t = tk;
    out.push_back(unpack(y));
  }
  return out;
}

TwoAtomState asymptotic_from_projection(const AtomParams& p,
                                        const TwoAtomState& s0) {
  const SingleAtomCoeffs c = single_atom_coeffs(p);
  const Mat q =
      (pauli(0) - c.R * dot_sigma(p.n)) / 2.0;  // single-atom stationary state
  const Mat rho0 = kron(q, q);
  Mat S = Mat::Zero(4, 4);
  for (int i = 1; i <= 3; ++i) S += s_two(i, i);
  const Mat P = (Mat::Identity(4, 4) - S / 2.0) / 4.0;
  const Mat Q = Mat::Identity(4, 4) - P;
  const Mat rho_init = reconstruct_two_atom(s0);
  const Mat pp = P * rho0 * P, qq = Q * rho0 * Q;
  const Mat asym = pp / pp.trace() * (P * rho_init).trace() +
                   qq / qq.trace() * (Q * rho_init).trace();
  return two_atom_components(asym);
}

TwoAtomState asymptotic_state(double tau, double R, const Vec3& n) {
  if (tau < -3.0 - 1e-12 || tau > 1.0 + 1e-12)
    throw ValidationError("TauOutOfRange", std::max(-3.0 - tau, tau - 1.0));
  if (R < 0.0 || R > 1.0 + 1e-12)
    throw ValidationError("RatioOutOfRange", std::max(-R, R - 1.0));
  const double den = 3.0 + R * R;
  TwoAtomState s;
  s.v1 = -(R * (tau + 3.0) / den) * n;
  s.v2 = s.v1;
  // Symmetric-expansion coefficients; the sigma_i x sigma_j component is
  // twice each symmetrized coefficient.
  const Mat3 rho_ij = ((tau - R * R) * Mat3::Identity() +
                       R * R * (tau + 3.0) * (n * n.transpose())) /
                      (2.0 * den);
  s.M = 2.0 * rho_ij;
  return s;
}

double asymptotic_concurrence(double tau, double R) {
  if (tau < -3.0 - 1e-12 || tau > 1.0 + 1e-12)
    throw ValidationError("TauOutOfRange", std::max(-3.0 - tau, tau - 1.0));
  const double r2 = R * R;
  const double val =
      (3.0 - r2) / (2.0 * (3.0 + r2)) * ((5.0 * r2 - 3.0) / (3.0 - r2) - tau);
  return std::max(val, 0.0);
}

namespace {

// Adapted frame vector for a pure state phi: with U = [phi_perp, phi]
// (so U maps the reference lower state to phi), U_ij = Tr(sigma_j U^dag
// sigma_i U) / 2 and u_i = U_i1 - i U_i2 (v uses the + i combination).
Eigen::Vector3cd frame_vector(const Eigen::Vector2cd& state, bool plus_i) {
  Eigen::Matrix2cd U;
  U.col(0) << -std::conj(state[1]), std::conj(state[0]);
  U.col(1) = state;
  Eigen::Matrix3d R;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Mat prod = pauli(j + 1) * U.adjoint() * pauli(i + 1) * U;
      R(i, j) = prod.trace().real() / 2.0;
    }
  Eigen::Vector3cd out;
  const double sgn = plus_i ? 1.0 : -1.0;
  for (int i = 0; i < 3; ++i) out[i] = cplx(R(i, 0), sgn * R(i, 1));
  return out / out.norm();
}

}  // namespace

EntangleTestResult entanglement_generation_test(
    const AtomParams& p, const Eigen::Vector2cd& phi,
    const Eigen::Vector2cd& psi, const std::optional<Mat3c>& H12) {
  const double dphi = std::abs(phi.norm() - 1.0);
  const double dpsi = std::abs(psi.norm() - 1.0);
  if (dphi > 1e-6) throw ValidationError("InputNotPure", dphi);
  if (dpsi > 1e-6) throw ValidationError("InputNotPure", dpsi);

  const Mat3c A = single_atom_kossakowski(p);
  const Eigen::Vector3cd u = frame_vector(phi / phi.norm(), false);
  const Eigen::Vector3cd v = frame_vector(psi / psi.norm(), true);

  EntangleTestResult r;
  r.lhs = (u.adjoint() * A * u)(0).real() *
          (v.adjoint() * A.transpose() * v)(0).real();
  Mat3c mid = (A + A.conjugate()) / 2.0;  // real part of A
  if (H12) mid += cplx(0.0, 1.0) * (*H12);
  r.rhs = std::norm((u.adjoint() * mid * v)(0));
  r.fires = r.rhs - r.lhs > 1e-12;
  return r;
}

}  // namespace oqs
