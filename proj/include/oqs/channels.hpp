#pragma once

// Linear maps on matrix algebras: Kraus and Choi representations,
// complete-positivity and (heuristic) positivity tests.

#include <cstdint>
#include <vector>

#include "oqs/linalg.hpp"

namespace oqs {

// A linear map carried as Kraus operators and/or a Choi matrix.
// Choi convention: Lambda (x) id applied to the maximally entangled
// projector P+ (trace 1 for trace-preserving maps).
struct QuantumChannel {
  int dim = 0;
  std::vector<Mat> kraus;  // may be empty when only choi is known
  Mat choi;                // 0x0 when not yet computed
  bool trace_preserving = false;

  static QuantumChannel from_kraus(std::vector<Mat> ops,
                                   bool trace_preserving = true);
  static QuantumChannel from_choi(const Mat& choi, int dim,
                                  bool trace_preserving = false);
  bool has_kraus() const { return !kraus.empty(); }
  bool has_choi() const { return choi.size() > 0; }
};

// Coefficients of the qubit map X -> sum C_{ab} sigma_a X sigma_b.
struct PauliFormMap {
  Eigen::Matrix4cd C;
};

Mat apply(const QuantumChannel& ch, const Mat& X);

// Lambda (x) id [P+]; computed from Kraus form when the Choi matrix is not
// stored. Hermitian whenever the map is hermiticity-preserving.
Mat choi_of(const QuantumChannel& ch);

struct CpVerdict {
  bool cp = false;
  double min_choi_eigenvalue = 0.0;
};
CpVerdict is_completely_positive(const QuantumChannel& ch);

// Multi-start minimization of <psi (x) phi| Choi |psi (x) phi> over product
// unit vectors. A found negative value is a certificate of non-positivity;
// a non-negative minimum is heuristic evidence of positivity.
struct PositiveMapVerdict {
  bool positive = false;  // heuristic when true, conclusive when false
  double worst_product_value = 0.0;
  Vec psi, phi;  // argmin product witness
};
PositiveMapVerdict is_positive_map(const QuantumChannel& ch, int trials = 32,
                                   std::uint64_t seed = 20240811);

// Diagonalization of a PSD Choi matrix into Kraus operators.
// Eigenvalues in (-kTolPsd, 0) are clipped; below, ChoiNotPSD is thrown.
std::vector<Mat> kraus_from_choi(const Mat& choi);

QuantumChannel pauli_form_to_channel(const PauliFormMap& m);

QuantumChannel identity_channel(int n);
// X -> X^T on C^n.
QuantumChannel transposition_channel(int n);
// Composition: first `inner`, then `outer`.
QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner);

}  // namespace oqs
