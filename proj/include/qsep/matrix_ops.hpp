#pragma once

#include <Eigen/Dense>

namespace qsep {

// Which tensor factor of a bipartite object an operation applies to.
// Composite index convention throughout: for dims (d_a, d_b) the flat
// index is i = a * d_b + b, i.e. subsystem A varies slowest.
enum class Subsystem { A, B };

inline constexpr double kHermitianTol = 1e-10;

// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
// Column k of eigenvectors pairs with eigenvalues[k].
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

// max |m - m^dagger| entrywise within tol; false for non-square input
bool is_hermitian(const Eigen::MatrixXcd& m, double tol = kHermitianTol);

// Throws NotSquare / NotHermitian on bad input, NoConvergence if the
// solver fails.
Spectrum hermitian_eigen(const Eigen::MatrixXcd& m, double tol = kHermitianTol);

// Kronecker product a (x) b.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Trace out the complement of `keep` from an n x n matrix with
// n = d_a * d_b. Result is d_a x d_a (keep == A) or d_b x d_b (keep == B).
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& m, int d_a, int d_b,
                               Subsystem keep);

// Transpose the `on` factor only: for on == B,
// (a,b),(a',b') -> (a,b'),(a',b). Same size as the input.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& m, int d_a, int d_b,
                                   Subsystem on);

}  // namespace qsep
