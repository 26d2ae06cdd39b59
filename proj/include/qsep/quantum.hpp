#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qsep/classical.hpp"
#include "qsep/matrix_ops.hpp"

namespace qsep {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

// Validated density matrix with a fixed bipartition (d_a, d_b).
// Single systems use d_b == 1. Construction checks hermiticity,
// unit trace and positive semidefiniteness.
class DensityMatrix {
 public:
  DensityMatrix(Eigen::MatrixXcd m, int d_a, int d_b);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  int dim_a() const { return d_a_; }
  int dim_b() const { return d_b_; }
  int dim() const { return d_a_ * d_b_; }
  bool bipartite() const { return d_a_ >= 2 && d_b_ >= 2; }

 private:
  Eigen::MatrixXcd m_;
  int d_a_;
  int d_b_;
};

// |psi><psi| from a state vector. Throws DimensionMismatch if the
// length is not d_a * d_b, NotNormalized if the norm is off by more
// than 1e-10; the projector is built from the renormalized vector.
DensityMatrix from_pure(const Eigen::VectorXcd& psi, int d_a, int d_b);

// two-qubit singlet (|01> - |10>) / sqrt(2)
DensityMatrix singlet_state();

// Convex mixture sum_k w_k rho_k(A) (x) rho_k(B). Factor dimensions
// must agree across terms.
struct SeparableSpec {
  ProbVector weights;
  std::vector<std::pair<DensityMatrix, DensityMatrix>> factors;
};

DensityMatrix assemble_separable(const SeparableSpec& spec);

// Reduced state of one factor; the result is a single-system matrix.
DensityMatrix marginal(const DensityMatrix& rho, Subsystem keep);

// Zero out eigenvalues in [-1e-10, 0); anything below the floor means
// the matrix is not a state and throws NotDensityMatrix.
Eigen::VectorXd clip_spectrum(const Eigen::VectorXd& eigenvalues);

// Descending, clipped eigenvalue spectrum of a state.
Eigen::VectorXd spectrum_probs(const DensityMatrix& rho);

// Entropies of the eigenvalue spectrum.
double tsallis_entropy(const DensityMatrix& rho, const QIndex& q);

// S_q(B|A) for given == A, S_q(A|B) for given == B. Throws
// NotBipartite when either factor is one-dimensional.
double conditional_tsallis(const DensityMatrix& rho, Subsystem given,
                           const QIndex& q);

double pseudoadditivity_residual(const DensityMatrix& rho, const QIndex& q);

}  // namespace qsep
