#pragma once

// Two-level atoms weakly coupled to a thermal scalar field: the Fourier
// transform of the field two-point function, single-atom Kossakowski matrix
// and transition probabilities, and the two-atom dynamics with its
// entanglement-generation test and asymptotic states.

#include <optional>
#include <vector>

#include "oqs/lindblad.hpp"

namespace oqs {

// System Hamiltonian H = (omega/2) n . sigma at inverse temperature beta;
// beta = +infinity is accepted as the zero-temperature flag.
struct AtomParams {
  double omega = 1.0;
  Vec3 n = Vec3(0, 0, 1);
  double beta = 1.0;

  bool zero_temperature() const { return std::isinf(beta); }
  void validate() const;  // throws ValidationError on bad fields
};

// Fourier transform of the thermal Wightman function of a free scalar field
// in d spacetime dimensions:
//   G_beta(zeta) = [2 |zeta|^{d-2} / ((4 pi)^{(d-1)/2} Gamma((d-1)/2))]
//                  (pi / zeta) / (1 - e^{-beta zeta}).
// zeta = 0 returns the finite limit where it exists (d = 4: 1/(2 pi beta);
// d >= 5: 0) and throws ValidationError("ZeroFrequencyLimitDivergent") for
// d = 2, 3. beta may be +infinity.
double wightman_fourier(double zeta, double beta, int d = 4);

// Kossakowski data C_ij = A delta_ij - i B eps_ijk n_k + C n_i n_j with
//   A = [G(omega) + G(-omega)]/2, B = [G(omega) - G(-omega)]/2,
//   C = G(0) - A, R = B/A.
struct SingleAtomCoeffs {
  double A = 0.0, B = 0.0, C = 0.0, R = 0.0;
};
SingleAtomCoeffs single_atom_coeffs(const AtomParams& p);

// 3x3 Kossakowski matrix (Pauli convention) built from the coefficients.
Mat3c single_atom_kossakowski(const AtomParams& p);

// Qubit generator with H = (omega/2) n . sigma and the matrix above.
// Dissipative Bloch block has eigenvalues {2A, 2A+C, 2A+C}; the unique
// stationary state has Bloch vector -R n (the Gibbs state of H).
LindbladGenerator single_atom_generator(const AtomParams& p);

// Probability of finding the pure state with Bloch vector rho_f after
// evolving the pure state rho_i for time t. Closed form; matches
// Tr[rho_f gamma_t[rho_i]]. Throws ValidationError("BlochOutOfBall") unless
// both vectors are unit within 1e-9.
double transition_probability(const AtomParams& p, const Vec3& rho_i,
                              const Vec3& rho_f, double t);

// Two-atom state components: rho = (1/4)[1x1 + sum v1_i 1xsigma_i
// + sum v2_i sigma_ix1 + sum M_ij sigma_i x sigma_j], all real.
struct TwoAtomState {
  Vec3 v1 = Vec3::Zero();  // coefficients of 1 x sigma_i
  Vec3 v2 = Vec3::Zero();  // coefficients of sigma_i x 1
  Mat3 M = Mat3::Zero();   // coefficients of sigma_i x sigma_j

  double tau() const { return M.trace(); }
};

// 4x4 matrix from components and back (exact linear maps).
Mat reconstruct_two_atom(const TwoAtomState& s);
TwoAtomState two_atom_components(const Mat& rho);

// Collective operators Sigma_i = sigma_i x 1 + 1 x sigma_i and
// S_ij = sigma_i x sigma_j + sigma_j x sigma_i.
Mat sigma_two(int i);
Mat s_two(int i, int j);

// Generator D[rho] = sum_ij A_ij (Sigma_j rho Sigma_i
// - 1/2 {Sigma_i Sigma_j, rho}) with A the single-atom Kossakowski matrix.
LindbladGenerator two_atom_generator(const AtomParams& p);

// Component-wise time derivative under the generator above. tau is conserved
// exactly by construction.
TwoAtomState two_atom_rhs(const AtomParams& p, const TwoAtomState& s);

// Adaptive embedded Runge-Kutta integration of the component ODEs, sampled
// on the given time grid (must be nondecreasing, starting at >= 0). Throws
// NumericsError("IntegrationToleranceExceeded") if the step size collapses.
std::vector<TwoAtomState> evolve_two_atom(const AtomParams& p,
                                          const TwoAtomState& s0,
                                          const std::vector<double>& grid,
                                          double rtol = 1e-10);

// Exact asymptotic state of an initial state via the spectral projections
// P = (1/4)[1x1 - S/2], Q = 1 - P applied to the maximal-rank stationary
// product state (1/2)(1 - R n.sigma) x (1/2)(1 - R n.sigma).
TwoAtomState asymptotic_from_projection(const AtomParams& p,
                                        const TwoAtomState& s0);

// Closed-form stationary family indexed by the conserved tau:
//   rho_i = -R (tau+3) n_i / (3+R^2),
//   rho_ij = [(tau - R^2) delta_ij + R^2 (tau+3) n_i n_j] / (2 (3+R^2)),
// returned in the sigma x sigma component convention (M = 2 rho_ij).
// Throws ValidationError("TauOutOfRange") unless -3 <= tau <= 1.
TwoAtomState asymptotic_state(double tau, double R, const Vec3& n);

// Concurrence of the stationary family:
// max{ ((3-R^2)/(2(3+R^2))) [ (5R^2-3)/(3-R^2) - tau ], 0 }.
double asymptotic_concurrence(double tau, double R);

// Dissipative entanglement-generation test for an initial product state
// phi x psi (pure qubit states as amplitude 2-vectors): entanglement is
// created at t = 0+ iff <u|A|u><v|A^T|v> < |<u|(Re A + i H12)|v>|^2 with
// unit-normalized u, v built from the frames mapping |-> to phi and psi.
// H12 defaults to zero (no vacuum-induced direct coupling).
struct EntangleTestResult {
  bool fires = false;
  double lhs = 0.0;  // <u|A|u> <v|A^T|v>
  double rhs = 0.0;  // |<u|(Re A + i H12)|v>|^2
};
EntangleTestResult entanglement_generation_test(
    const AtomParams& p, const Eigen::Vector2cd& phi,
    const Eigen::Vector2cd& psi,
    const std::optional<Mat3c>& H12 = std::nullopt);

}  // namespace oqs
