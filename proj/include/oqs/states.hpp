#pragma once

// Finite-dimensional quantum states: validation, entropy, partial trace,
// Bloch parametrization, tensor products.

#include "oqs/linalg.hpp"

namespace oqs {

// Hermitian, unit-trace, positive-semidefinite matrix. Construct through
// make_density so the invariants are enforced at the boundary.
struct DensityMatrix {
  int dim = 0;
  Mat m;
};

// Validates `entries` as a density matrix. Throws ValidationError with
// invariant one of {NotHermitian, NotUnitTrace, NotPSD, DimensionMismatch}.
// With sanitize=true, eigenvalues in (-kTolPsd, 0) are clipped to zero and
// the state renormalized; genuine violations still throw.
DensityMatrix make_density(const Mat& entries, bool sanitize = false);

// S(rho) = -Tr(rho log rho) in nats, via the eigenvalue formula.
double von_neumann_entropy(const DensityMatrix& rho);

// Traces out one factor of a state on C^{nA} (x) C^{nB}.
// keep is 'A' or 'B'.
DensityMatrix partial_trace(const DensityMatrix& rho, int nA, int nB,
                            char keep);

// rho = (1/2)(1 + r . sigma); requires ||r|| <= 1 (BlochOutOfBall otherwise).
DensityMatrix bloch_to_density(const Vec3& r);
Vec3 density_to_bloch(const DensityMatrix& rho);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// True iff rho^2 = rho within kTol.
bool is_pure(const DensityMatrix& rho);

// Projector onto a (normalized) pure state vector.
DensityMatrix pure_state(const Vec& psi);

// Maximally entangled projector P+ on C^n (x) C^n (trace 1).
Mat max_entangled_projector(int n);

}  // namespace oqs
