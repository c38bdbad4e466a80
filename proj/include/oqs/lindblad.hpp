#pragma once

// Kossakowski-Lindblad generators: construction, CP/positivity
// classification, Bloch-affine form for qubits, semigroup evolution,
// stationary states, and the positivity-violation witness.

#include <optional>
#include <vector>

#include "oqs/states.hpp"

namespace oqs {

// L[rho] = -i[H, rho] + sum_{ij} C_{ij} (F_j rho F_i^dag
//          - 1/2 {F_i^dag F_j, rho}) over a traceless orthonormal basis F_i.
struct LindbladGenerator {
  int dim = 0;
  Mat H;                   // effective Hamiltonian, hermitian
  Mat C;                   // Kossakowski matrix, hermitian, (n^2-1)^2
  std::vector<Mat> basis;  // traceless, Tr(F_i^dag F_j) = delta_ij

  // Qubit generator in the Pauli convention
  // D[rho] = sum C^pauli_{ij} (sigma_j rho sigma_i - 1/2 {sigma_i sigma_j, rho});
  // stored over F_i = sigma_i / sqrt(2), i.e. C = 2 C^pauli.
  static LindbladGenerator qubit(const Mat& H, const Mat3c& C_pauli);
  Mat3c pauli_kossakowski() const;  // C / 2 for qubit generators
};

Mat apply_generator(const LindbladGenerator& g, const Mat& rho);

struct GeneratorCpVerdict {
  bool cp = false;
  double min_C_eigenvalue = 0.0;
};
GeneratorCpVerdict is_cp_generator(const LindbladGenerator& g);

// n^2 x n^2 matrix M with vec(L[rho]) = M vec(rho), column-major.
Mat superoperator(const LindbladGenerator& g);

DensityMatrix evolve(const LindbladGenerator& g, const DensityMatrix& rho0,
                     double t);
std::vector<DensityMatrix> trajectory(const LindbladGenerator& g,
                                      const DensityMatrix& rho0,
                                      const std::vector<double>& grid);

// Qubit coherence-vector representation: d|rho>/dt = -2 (Hmat + Dmat) |rho>
// on |rho> = (1, r1, r2, r3), with H = w . sigma giving the antisymmetric
// Hmat and Dmat = [[0,0,0,0],[u,a,b,c],[v,b,alpha,beta],[w,c,beta,gamma]]
// (3x3 block symmetric; any antisymmetric part belongs in Hmat).
struct BlochAffine {
  Mat4 Hmat = Mat4::Zero();
  Mat4 Dmat = Mat4::Zero();

  double a() const { return Dmat(1, 1); }
  double b() const { return Dmat(1, 2); }
  double c() const { return Dmat(1, 3); }
  double alpha() const { return Dmat(2, 2); }
  double beta() const { return Dmat(2, 3); }
  double gamma() const { return Dmat(3, 3); }
  Vec3 drive() const { return Vec3(Dmat(1, 0), Dmat(2, 0), Dmat(3, 0)); }
  Mat3 D3() const { return Dmat.bottomRightCorner<3, 3>(); }

  // Assembles Dmat (moving any antisymmetric part of d3 into Hmat) from the
  // 3x3 dissipative block and the drive column.
  static BlochAffine from_parts(const Vec3& omega, const Mat3& d3,
                                const Vec3& drive = Vec3::Zero());
  // Full flow matrix -2 (Hmat + Dmat).
  Mat4 flow() const { return -2.0 * (Hmat + Dmat); }
};

// Numeric extraction of the affine form from the operator form (qubit only).
BlochAffine to_bloch_affine(const LindbladGenerator& g);
// Inverse via the C <-> D dictionary; the drive column maps to the
// imaginary antisymmetric part of the Kossakowski matrix.
LindbladGenerator from_bloch_affine(const BlochAffine& d);

// Evolution of the coherence 4-vector under the affine flow.
Vec3 evolve_bloch(const BlochAffine& d, const Vec3& r0, double t);

// Complete-positivity ledger (inequalities on the symmetric block) and the
// weaker positivity conditions a,alpha,gamma >= 0, pairwise products,
// Det D3 >= 0.
struct CPLedger {
  double R = 0, S = 0, T = 0;
  bool r_nonneg = false, s_nonneg = false, t_nonneg = false;
  bool rs_b2 = false, rt_c2 = false, st_beta2 = false, triple = false;
  bool pos_a = false, pos_alpha = false, pos_gamma = false;
  bool pos_ab = false, pos_ac = false, pos_albe = false, pos_det = false;
  bool cp_ok() const {
    return r_nonneg && s_nonneg && t_nonneg && rs_b2 && rt_c2 && st_beta2 &&
           triple;
  }
  bool positivity_ok() const {
    return pos_a && pos_alpha && pos_gamma && pos_ab && pos_ac && pos_albe &&
           pos_det;
  }
};
CPLedger cp_ledger(const BlochAffine& d, double tol = 1e-12);

// Basis of (approximate) stationary states; every returned state satisfies
// ||L[rho]|| <= 1e-9. At least one state is returned.
std::vector<DensityMatrix> stationary_states(const LindbladGenerator& g);

// Searches the unit Bloch sphere for a pure state whose determinant
// derivative xi(n) = n^T (2 D^s - diag D^s) n + drive . n is negative.
struct PositivityWitness {
  Vec3 n = Vec3::Zero();
  double ddet = 0.0;
};
std::optional<PositivityWitness> positivity_witness(const BlochAffine& d,
                                                    int restarts = 64,
                                                    std::uint64_t seed = 7);

}  // namespace oqs
