#pragma once

// The four Markov-approximation generators for the qubit bath models, the
// exact dephasing solution, and the stochastic-field generators.

#include <functional>

#include "oqs/lindblad.hpp"

namespace oqs {

// Environment two-point function G(t) = <B(t) B>. Hermiticity G(-t) = G*(t)
// holds for every kind; thermal kinds satisfy the KMS condition, expressed
// spectrally as ghat(-z) = exp(-beta z) ghat(z).
struct BathCorrelation {
  enum class Kind {
    thermal_scalar_derivative,  // ghat(z) = 2 G_beta(z) e^{-eps|z|},
                                // G_beta(z) = z / (1 - e^{-beta z})
    ohmic_cutoff,               // zero-temperature limit of the above
    white_noise,                // G(t) = g delta(t)
    exponential_single_axis,    // G(t) = B2 e^{-lambda_decay |t|}
    custom_tabulated            // user evaluator, decay exponent eta required
  };
  Kind kind = Kind::white_noise;
  double beta = 1.0;
  double eps = 0.1;  // i-eps regulator, kept finite (frequency-domain cutoff)
  double g = 1.0;
  double B2 = 1.0;
  double lambda_decay = 1.0;
  double eta = 0.0;  // |G(t)| (1+t)^eta bounded; must be > 0 for custom kind
  std::function<cplx(double)> evaluator;

  static BathCorrelation thermal(double beta, double eps);
  static BathCorrelation ohmic(double eps);
  static BathCorrelation white_noise_bath(double g);
  static BathCorrelation exponential(double B2, double lambda_decay);
  static BathCorrelation custom(std::function<cplx(double)> evaluator,
                                double eta);

  bool is_delta() const { return kind == Kind::white_noise; }
  cplx G(double t) const;  // any sign of t
  bool has_spectral() const;
  double spectral(double zeta) const;  // full Fourier transform ghat(zeta)
};

// Spin-boson dephasing model parameters (level splitting Omega is a
// spectator for the decoherence function).
struct SpinBosonDephasing {
  double lambda = 1.0;  // coupling
  double eps = 0.1;     // cutoff time
  double beta = 1.0;    // inverse temperature
  double Omega = 1.0;   // level splitting
};

// Exact decoherence exponent: |rho_10(t)| = e^{-Gamma(t)} |rho_10(0)|.
// Closed form: vacuum part (lambda^2/pi) ln(1 + t^2/eps^2) plus thermal part
// -(4 lambda^2/pi) ln[ |Gamma(1 + eps/beta + i t/beta)| / Gamma(1 + eps/beta) ].
double dephasing_gamma(double t, const SpinBosonDephasing& m);
// Direct quadrature of
// (2 lambda^2/pi) int_0^inf dw (1-cos wt)/w coth(beta w/2) e^{-eps w}.
double dephasing_gamma_quadrature(double t, const SpinBosonDephasing& m);

// Markovian (weak-coupling) limit of the dephasing model: pure sigma_3
// dissipator with C_33 = lambda^2 / beta, off-diagonal decay rate
// 2 lambda^2 / beta.
LindbladGenerator dephasing_markov_generator(const SpinBosonDephasing& m);

// int_0^inf dt e^{i zeta t} G(t) = h(zeta)/2 + i s(zeta).
cplx halfline_fourier(const BathCorrelation& bath, double zeta);

// Quadrature results shared by the generator constructions:
//   alpha = lam^2 int_0^inf cos(Omega s) (G(s)+G(-s)) ds
//   b     = lam^2 int_0^inf sin(Omega s) (G(s)+G(-s)) ds
//   d     = i lam^2 int_0^inf sin(Omega s) (G(s)-G(-s)) ds
struct MarkovCoeffs {
  double alpha = 0.0, b = 0.0, d = 0.0;
};
MarkovCoeffs markov_coeffs(double Omega, const BathCorrelation& bath,
                           double lambda = 1.0);

// Redfield: D1 = [[0,0,0,0],[0,0,b,0],[0,0,alpha,0],[d,0,0,alpha]] on top of
// the free precession; antisymmetric part split into the Hamiltonian block.
BlochAffine redfield_generator(double Omega, const BathCorrelation& bath,
                               double lambda = 1.0);
// Ergodic average of the Redfield matrix: D2 = diag(alpha/2, alpha/2, alpha)
// with drive d; CP by construction; Gibbs equilibrium.
BlochAffine weak_coupling_generator(double Omega, const BathCorrelation& bath,
                                    double lambda = 1.0);
// D3 = diag(0, alpha, alpha), alpha = 2 Re int_0^inf G; b = d = 0.
BlochAffine singular_coupling_generator(double Omega,
                                        const BathCorrelation& bath,
                                        double lambda = 1.0);
// Redfield with b -> -b.
BlochAffine convolutionless_generator(double Omega,
                                      const BathCorrelation& bath,
                                      double lambda = 1.0);

// Stochastic magnetic fields: covariance spec is either white noise with a
// PSD real matrix G_ij or the single-axis exponential kind.
struct StochasticCovariance {
  enum class Kind { white_noise, exponential_single_axis };
  Kind kind = Kind::white_noise;
  Mat3 G = Mat3::Identity();  // white-noise weights (PSD)
  double B2 = 1.0;            // single-axis <B(t)B(0)> = B2 e^{-lambda|t|}
  double lambda_decay = 1.0;
};
struct StochasticFieldResult {
  Mat3 kappa = Mat3::Zero();  // Hamiltonian (Lamb-type) correction
  Mat3 C = Mat3::Zero();      // Kossakowski matrix (Pauli convention)
  BlochAffine generator;      // with the free precession Omega included
};
StochasticFieldResult stochastic_field_generator(double Omega,
                                                 const StochasticCovariance& cov);

}  // namespace oqs
