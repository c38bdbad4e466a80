#include "oqs/markov.hpp"

#include <cmath>

#include "oqs/quadrature.hpp"

namespace oqs {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

BathCorrelation BathCorrelation::thermal(double beta, double eps) {
  BathCorrelation b;
  b.kind = Kind::thermal_scalar_derivative;
  b.beta = beta;
  b.eps = eps;
  if (beta <= 0 || eps <= 0) throw ValidationError("BathParamsOutOfRange", 0.0);
  return b;
}

BathCorrelation BathCorrelation::ohmic(double eps) {
  BathCorrelation b;
  b.kind = Kind::ohmic_cutoff;
  b.eps = eps;
  if (eps <= 0) throw ValidationError("BathParamsOutOfRange", 0.0);
  return b;
}

BathCorrelation BathCorrelation::white_noise_bath(double g) {
  BathCorrelation b;
  b.kind = Kind::white_noise;
  b.g = g;
  if (g < 0) throw ValidationError("CovarianceNotPSD", -g);
  return b;
}

BathCorrelation BathCorrelation::exponential(double B2, double lambda_decay) {
  BathCorrelation b;
  b.kind = Kind::exponential_single_axis;
  b.B2 = B2;
  b.lambda_decay = lambda_decay;
  if (B2 < 0 || lambda_decay <= 0)
    throw ValidationError("BathParamsOutOfRange", 0.0);
  return b;
}

BathCorrelation BathCorrelation::custom(std::function<cplx(double)> evaluator,
                                        double eta) {
  BathCorrelation b;
  b.kind = Kind::custom_tabulated;
  b.evaluator = std::move(evaluator);
  b.eta = eta;
  if (eta <= 0.0)
    throw ValidationError("BathDecayExponentNotPositive", eta);
  return b;
}

cplx BathCorrelation::G(double t) const {
  if (t < 0.0) return std::conj(G(-t));
  switch (kind) {
    case Kind::thermal_scalar_derivative: {
      // Inverse Fourier transform of ghat(z) = 2 (z / (1 - e^{-beta z}))
      // e^{-eps |z|}, in closed form through the complex trigamma.
      const cplx z(eps, t);
      const cplx vac = 1.0 / (z * z);
      const double th = 2.0 / (beta * beta) * trigamma(1.0 + z / beta).real();
      return (vac + th) / kPi;
    }
    case Kind::ohmic_cutoff: {
      const cplx z(eps, t);
      return 1.0 / (kPi * z * z);
    }
    case Kind::white_noise:
      throw NumericsError("white-noise correlation is a delta distribution");
    case Kind::exponential_single_axis:
      return B2 * std::exp(-lambda_decay * t);
    case Kind::custom_tabulated:
      return evaluator(t);
  }
  throw NumericsError("unknown bath kind");
}

bool BathCorrelation::has_spectral() const {
  return kind != Kind::custom_tabulated;
}

double BathCorrelation::spectral(double zeta) const {
  switch (kind) {
    case Kind::thermal_scalar_derivative: {
      const double reg = std::exp(-eps * std::abs(zeta));
      if (std::abs(zeta) < 1e-12) return 2.0 * reg / beta;
      return 2.0 * zeta / (1.0 - std::exp(-beta * zeta)) * reg;
    }
    case Kind::ohmic_cutoff:
      return zeta > 0.0 ? 2.0 * zeta * std::exp(-eps * zeta) : 0.0;
    case Kind::white_noise:
      return g;
    case Kind::exponential_single_axis:
      return 2.0 * B2 * lambda_decay /
             (lambda_decay * lambda_decay + zeta * zeta);
    case Kind::custom_tabulated:
      break;
  }
  throw NumericsError("spectral form unavailable for this bath kind");
}

cplx halfline_fourier(const BathCorrelation& bath, double zeta) {
  if (bath.is_delta()) return cplx(bath.g / 2.0, 0.0);
  auto reG = [&bath](double t) { return bath.G(t).real(); };
  auto imG = [&bath](double t) { return bath.G(t).imag(); };
  const double icc = fourier_cos(reG, zeta);
  const double iss = fourier_sin(imG, zeta);
  const double isc = fourier_sin(reG, zeta);
  const double ics = fourier_cos(imG, zeta);
  return cplx(icc - iss, isc + ics);
}

MarkovCoeffs markov_coeffs(double Omega, const BathCorrelation& bath,
                           double lambda) {
  const double l2 = lambda * lambda;
  MarkovCoeffs out;
  if (bath.is_delta()) {
    // Half-line delta convention: int_0^inf delta(t) f(t) dt = f(0)/2.
    out.alpha = l2 * bath.g;
    out.b = 0.0;
    out.d = 0.0;
    return out;
  }
  auto reG = [&bath](double t) { return bath.G(t).real(); };
  auto imG = [&bath](double t) { return bath.G(t).imag(); };
  out.alpha = 2.0 * l2 * fourier_cos(reG, Omega);
  out.b = 2.0 * l2 * fourier_sin(reG, Omega);
  out.d = -2.0 * l2 * fourier_sin(imG, Omega);
  return out;
}

BlochAffine redfield_generator(double Omega, const BathCorrelation& bath,
                               double lambda) {
  const MarkovCoeffs c = markov_coeffs(Omega, bath, lambda);
  Mat3 d3;
  d3 << 0, c.b, 0, 0, c.alpha, 0, 0, 0, c.alpha;
  return BlochAffine::from_parts(Vec3(0, 0, Omega / 2.0), d3,
                                 Vec3(0, 0, c.d));
}

BlochAffine weak_coupling_generator(double Omega, const BathCorrelation& bath,
                                    double lambda) {
  const MarkovCoeffs c = markov_coeffs(Omega, bath, lambda);
  Mat3 d3;  // ergodic average: symmetric diag(alpha/2, alpha/2, alpha)
            // plus the antisymmetric +-b/2 Hamiltonian correction
  d3 << c.alpha / 2.0, c.b / 2.0, 0, -c.b / 2.0, c.alpha / 2.0, 0, 0, 0,
      c.alpha;
  return BlochAffine::from_parts(Vec3(0, 0, Omega / 2.0), d3,
                                 Vec3(0, 0, c.d));
}

BlochAffine singular_coupling_generator(double Omega,
                                        const BathCorrelation& bath,
                                        double lambda) {
  const MarkovCoeffs c = markov_coeffs(0.0, bath, lambda);
  Mat3 d3;
  d3 << 0, 0, 0, 0, c.alpha, 0, 0, 0, c.alpha;
  return BlochAffine::from_parts(Vec3(0, 0, Omega / 2.0), d3, Vec3::Zero());
}

BlochAffine convolutionless_generator(double Omega,
                                      const BathCorrelation& bath,
                                      double lambda) {
  const MarkovCoeffs c = markov_coeffs(Omega, bath, lambda);
  Mat3 d3;
  d3 << 0, 0, 0, -c.b, c.alpha, 0, 0, 0, c.alpha;
  return BlochAffine::from_parts(Vec3(0, 0, Omega / 2.0), d3,
                                 Vec3(0, 0, c.d));
}

double dephasing_gamma(double t, const SpinBosonDephasing& m) {
  if (t < 0.0) throw ValidationError("NegativeTime", -t);
  if (t == 0.0) return 0.0;
  const double l2 = m.lambda * m.lambda;
  const double vac = (l2 / kPi) * std::log1p(t * t / (m.eps * m.eps));
  const double x = 1.0 + m.eps / m.beta;
  const double thermal =
      -(4.0 * l2 / kPi) * (log_abs_gamma(x, t / m.beta) - log_abs_gamma(x, 0.0));
  return vac + thermal;
}

double dephasing_gamma_quadrature(double t, const SpinBosonDephasing& m) {
  if (t < 0.0) throw ValidationError("NegativeTime", -t);
  if (t == 0.0) return 0.0;
  const double l2 = m.lambda * m.lambda;
  const double beta = m.beta, eps = m.eps;
  // Thermal piece: (1-cos wt)/w * 2/(e^{beta w}-1) * e^{-eps w}, decaying on
  // the 1/beta scale; adaptive quadrature over a bounded window.
  auto thermal_integrand = [t, beta, eps](double w) {
    if (w < 1e-12) return t * t / beta;  // small-w limit of the product
    const double bose = 2.0 / std::expm1(beta * w);
    return (1.0 - std::cos(w * t)) / w * bose * std::exp(-eps * w);
  };
  const double wmax = 60.0 / beta + 5.0;
  const double thermal = integrate(thermal_integrand, 0.0, wmax, 1e-12, 1e-11);
  // Vacuum piece int_0^inf (1-cos wt) e^{-eps w} / w dw evaluated without
  // closed forms: differentiate under the integral sign in t and integrate
  // the resulting sine transform back over [0, t].
  auto slope = [eps](double tau) {
    auto f = [eps](double w) { return std::exp(-eps * w); };
    // QAWF loses accuracy when the period far exceeds the decay scale;
    // the integrand is then barely oscillatory and plain adaptive
    // quadrature on the half line is more reliable.
    if (tau <= 2.0 * eps)
      return integrate_to_inf(
          [eps, tau](double w) { return std::exp(-eps * w) * std::sin(tau * w); },
          0.0, 1e-13, 1e-12);
    return fourier_sin(f, tau, 1e-12);
  };
  const double vacuum = integrate(slope, 0.0, t, 1e-13, 1e-12);
  return (2.0 * l2 / kPi) * (vacuum + thermal);
}

LindbladGenerator dephasing_markov_generator(const SpinBosonDephasing& m) {
  // Weak-coupling limit of the dephasing model: only the sigma_3 component
  // survives, C_33 = lambda^2 G_beta(0) = lambda^2 / beta.
  Mat3c C = Mat3c::Zero();
  C(2, 2) = m.lambda * m.lambda / m.beta;
  Mat H = (m.Omega / 2.0) * pauli(3);
  return LindbladGenerator::qubit(H, C);
}

StochasticFieldResult stochastic_field_generator(
    double Omega, const StochasticCovariance& cov) {
  StochasticFieldResult out;
  if (cov.kind == StochasticCovariance::Kind::white_noise) {
    Eigen::SelfAdjointEigenSolver<Mat3> es(cov.G);
    if (es.eigenvalues().minCoeff() < -kTolPsd)
      throw ValidationError("CovarianceNotPSD", -es.eigenvalues().minCoeff());
    out.kappa = Mat3::Zero();
    out.C = cov.G;  // delta correlation: the stochastic average is exact
  } else {
    // Single-axis <B1(t) B1(0)> = B2 e^{-lambda |t|}; free rotation
    // U(s) = Rot_z(Omega s) acting on the sigma components.
    const double B2 = cov.B2, lam = cov.lambda_decay;
    auto expdec = [B2, lam](double s) { return B2 * std::exp(-lam * s); };
    const double ic = fourier_cos(expdec, Omega);  // int e^{-lam s} cos
    const double is = fourier_sin(expdec, Omega);  // int e^{-lam s} sin
    // M1 = int G(s) U(-s), M2 = int U(s) G(-s); C = M1 + M2,
    // kappa = (M1 - M2)/2.
    Mat3 M1 = Mat3::Zero(), M2 = Mat3::Zero();
    M1(0, 0) = ic;
    M1(0, 1) = is;
    M2(0, 0) = ic;
    M2(1, 0) = is;
    out.C = M1 + M2;
    out.kappa = (M1 - M2) / 2.0;
  }
  LindbladGenerator g =
      LindbladGenerator::qubit((Omega / 2.0) * pauli(3), out.C.cast<cplx>());
  out.generator = to_bloch_affine(g);
  return out;
}

}  // namespace oqs
