#pragma once

// Entanglement detection and quantification: partial transposition / PPT,
// concurrence, Werner family, Bell basis, separable constructions.

#include <array>
#include <utility>
#include <vector>

#include "oqs/states.hpp"

namespace oqs {

// Transposes the chosen factor ('A' or 'B') of a matrix on C^{nA} (x) C^{nB}.
Mat partial_transpose(const Mat& rho, int nA, int nB, char which);

struct PptVerdict {
  double min_pt_eigenvalue = 0.0;
  enum class Result { separable, entangled, inconclusive } result =
      Result::inconclusive;
  bool conclusive = false;
};
// Conclusive both ways for 2x2 and 2x3; otherwise a negative partial
// transpose certifies entanglement and a positive one is inconclusive.
PptVerdict ppt_verdict(const DensityMatrix& rho, int nA, int nB);

// Two-qubit concurrence from the square-rooted eigenvalues of
// rho (sigma2 (x) sigma2) rho* (sigma2 (x) sigma2), clamped to [0,1].
double concurrence(const DensityMatrix& rho);

// U (x) U invariant family on C^n (x) C^n with flip expectation F.
DensityMatrix werner_state(int n, double F);

// The four Bell projectors: P+, P-, Q+, Q-.
std::array<DensityMatrix, 4> bell_basis();

struct SeparableDecomposition {
  std::vector<double> weights;
  std::vector<std::pair<DensityMatrix, DensityMatrix>> factors;
  DensityMatrix assemble() const;
};

// Flip operator V |a b> = |b a> on C^n (x) C^n.
Mat flip_operator(int n);

}  // namespace oqs
