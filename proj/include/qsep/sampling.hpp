#pragma once

#include <random>

#include <Eigen/Dense>

#include "qsep/classical.hpp"
#include "qsep/quantum.hpp"

namespace qsep {

using Rng = std::mt19937_64;

// Uniform (flat Dirichlet) point on the probability simplex.
ProbVector random_prob_vector(int n, Rng& rng);

JointProbTable random_joint_table(int rows, int cols, Rng& rng);

// Hilbert-Schmidt sample: G G^dagger for a complex Gaussian G,
// symmetrized and trace-normalized. Use d_b == 1 for a single system.
DensityMatrix random_density_matrix(int d_a, int d_b, Rng& rng);

// Haar-distributed unitary via QR with phase-fixed diagonal.
Eigen::MatrixXcd random_unitary(int d, Rng& rng);

// Mixture whose A factors are all diagonal in one random basis and
// whose B factors are all diagonal in another; term count is drawn
// from 1..6.
SeparableSpec random_separable_shared_basis(int d_a, int d_b, Rng& rng);

// Mixture of independently drawn product terms; term count from 1..6.
SeparableSpec random_separable_general(int d_a, int d_b, Rng& rng);

}  // namespace qsep
