#include "qsep/sampling.hpp"

#include <complex>
#include <string>

#include "qsep/errors.hpp"

namespace qsep {

namespace {

void check_positive(int n, const char* what) {
  if (n < 1) {
    throw DimensionMismatch(std::string(what) + " must be positive, got " +
                            std::to_string(n));
  }
}

Eigen::VectorXd dirichlet_flat(int n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = expo(rng);
  return v / v.sum();
}

// rho = U diag(p) U^dagger
Eigen::MatrixXcd rotate_diagonal(const Eigen::MatrixXcd& u,
                                 const Eigen::VectorXd& p) {
  return u * p.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
         u.adjoint();
}

}  // namespace

ProbVector random_prob_vector(int n, Rng& rng) {
  check_positive(n, "vector size");
  return ProbVector(dirichlet_flat(n, rng));
}

JointProbTable random_joint_table(int rows, int cols, Rng& rng) {
  check_positive(rows, "row count");
  check_positive(cols, "column count");
  Eigen::VectorXd flat = dirichlet_flat(rows * cols, rng);
  return JointProbTable(
      Eigen::Map<const Eigen::MatrixXd>(flat.data(), rows, cols));
}

DensityMatrix random_density_matrix(int d_a, int d_b, Rng& rng) {
  check_positive(d_a, "dimension of A");
  check_positive(d_b, "dimension of B");
  int d = d_a * d_b;
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::MatrixXcd m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint().eval());
  m /= m.trace().real();
  return DensityMatrix(m, d_a, d_b);
}

Eigen::MatrixXcd random_unitary(int d, Rng& rng) {
  check_positive(d, "dimension");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd u = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // absorb the phases of R's diagonal so the distribution is Haar
  for (int j = 0; j < d; ++j) {
    std::complex<double> rj = r(j, j);
    double mag = std::abs(rj);
    u.col(j) *= mag > 0.0 ? rj / mag : std::complex<double>(1.0, 0.0);
  }
  return u;
}

SeparableSpec random_separable_shared_basis(int d_a, int d_b, Rng& rng) {
  check_positive(d_a, "dimension of A");
  check_positive(d_b, "dimension of B");
  std::uniform_int_distribution<int> term_count(1, 6);
  int terms = term_count(rng);
  Eigen::MatrixXcd u_a = random_unitary(d_a, rng);
  Eigen::MatrixXcd u_b = random_unitary(d_b, rng);
  SeparableSpec spec{random_prob_vector(terms, rng), {}};
  spec.factors.reserve(static_cast<size_t>(terms));
  for (int k = 0; k < terms; ++k) {
    Eigen::VectorXd p = dirichlet_flat(d_a, rng);
    Eigen::VectorXd r = dirichlet_flat(d_b, rng);
    spec.factors.emplace_back(
        DensityMatrix(rotate_diagonal(u_a, p), d_a, 1),
        DensityMatrix(rotate_diagonal(u_b, r), d_b, 1));
  }
  return spec;
}

SeparableSpec random_separable_general(int d_a, int d_b, Rng& rng) {
  check_positive(d_a, "dimension of A");
  check_positive(d_b, "dimension of B");
  std::uniform_int_distribution<int> term_count(1, 6);
  int terms = term_count(rng);
  SeparableSpec spec{random_prob_vector(terms, rng), {}};
  spec.factors.reserve(static_cast<size_t>(terms));
  for (int k = 0; k < terms; ++k) {
    spec.factors.emplace_back(random_density_matrix(d_a, 1, rng),
                              random_density_matrix(d_b, 1, rng));
  }
  return spec;
}

}  // namespace qsep
