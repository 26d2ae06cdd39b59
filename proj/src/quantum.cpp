#include "qsep/quantum.hpp"

#include <cmath>
#include <string>

#include "qsep/errors.hpp"

namespace qsep {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m, int d_a, int d_b)
    : m_(std::move(m)), d_a_(d_a), d_b_(d_b) {
  if (d_a_ < 1 || d_b_ < 1) {
    throw InvalidState("subsystem dimensions must be positive, got (" +
                       std::to_string(d_a_) + ", " + std::to_string(d_b_) +
                       ")");
  }
  if (m_.rows() != m_.cols() ||
      m_.rows() != static_cast<Eigen::Index>(d_a_) * d_b_) {
    throw InvalidState("matrix is " + std::to_string(m_.rows()) + " x " +
                       std::to_string(m_.cols()) + ", expected side " +
                       std::to_string(d_a_ * d_b_));
  }
  if (!is_hermitian(m_)) {
    throw InvalidState("matrix is not hermitian within " +
                       std::to_string(kHermitianTol));
  }
  double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol || std::abs(m_.trace().imag()) > kTraceTol) {
    throw InvalidState("matrix does not have unit trace: trace = " +
                       std::to_string(tr));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("eigensolver did not converge");
  }
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < kEigenvalueFloor) {
    throw InvalidState("matrix is not positive semidefinite: min eigenvalue " +
                       std::to_string(min_eig));
  }
}

DensityMatrix from_pure(const Eigen::VectorXcd& psi, int d_a, int d_b) {
  if (d_a < 1 || d_b < 1 ||
      psi.size() != static_cast<Eigen::Index>(d_a) * d_b) {
    throw DimensionMismatch("state vector length " + std::to_string(psi.size()) +
                            " != d_a * d_b = " + std::to_string(d_a * d_b));
  }
  double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw NotNormalized("state vector norm is " + std::to_string(norm));
  }
  Eigen::VectorXcd unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint(), d_a, d_b);
}

DensityMatrix singlet_state() {
  Eigen::VectorXcd psi(4);
  double r = 1.0 / std::sqrt(2.0);
  psi << 0.0, r, -r, 0.0;
  return from_pure(psi, 2, 2);
}

DensityMatrix assemble_separable(const SeparableSpec& spec) {
  size_t n = spec.factors.size();
  if (n == 0) {
    throw DimensionMismatch("separable specification has no terms");
  }
  if (spec.weights.size() != static_cast<Eigen::Index>(n)) {
    throw DimensionMismatch("weight count " + std::to_string(spec.weights.size()) +
                            " != factor count " + std::to_string(n));
  }
  int d_a = spec.factors[0].first.dim();
  int d_b = spec.factors[0].second.dim();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d_a * d_b, d_a * d_b);
  for (size_t k = 0; k < n; ++k) {
    const auto& [rho_a, rho_b] = spec.factors[k];
    if (rho_a.dim() != d_a || rho_b.dim() != d_b) {
      throw DimensionMismatch("factor " + std::to_string(k) +
                              " dimensions differ from the first term");
    }
    sum += spec.weights[static_cast<Eigen::Index>(k)] *
           kron(rho_a.matrix(), rho_b.matrix());
  }
  return DensityMatrix(sum, d_a, d_b);
}

DensityMatrix marginal(const DensityMatrix& rho, Subsystem keep) {
  Eigen::MatrixXcd reduced =
      partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), keep);
  int d = keep == Subsystem::A ? rho.dim_a() : rho.dim_b();
  return DensityMatrix(reduced, d, 1);
}

Eigen::VectorXd clip_spectrum(const Eigen::VectorXd& eigenvalues) {
  Eigen::VectorXd out = eigenvalues;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < kEigenvalueFloor) {
      throw NotDensityMatrix("eigenvalue " + std::to_string(out(i)) +
                             " is below the tolerance floor");
    }
    if (out(i) < 0.0) out(i) = 0.0;
  }
  return out;
}

Eigen::VectorXd spectrum_probs(const DensityMatrix& rho) {
  return clip_spectrum(hermitian_eigen(rho.matrix()).eigenvalues);
}

double tsallis_entropy(const DensityMatrix& rho, const QIndex& q) {
  return tsallis_entropy(spectrum_probs(rho), q);
}

double conditional_tsallis(const DensityMatrix& rho, Subsystem given,
                           const QIndex& q) {
  if (!rho.bipartite()) {
    throw NotBipartite("state has dimensions (" + std::to_string(rho.dim_a()) +
                       ", " + std::to_string(rho.dim_b()) +
                       "); both factors must have dimension >= 2");
  }
  Eigen::VectorXd joint = spectrum_probs(rho);
  Eigen::VectorXd marg = spectrum_probs(marginal(rho, given));
  return conditional_tsallis(joint, marg, q);
}

double pseudoadditivity_residual(const DensityMatrix& rho, const QIndex& q) {
  double s_ab = tsallis_entropy(rho, q);
  double s_a = tsallis_entropy(marginal(rho, Subsystem::A), q);
  double s_cond = conditional_tsallis(rho, Subsystem::A, q);
  if (q.limit_one()) return s_ab - s_a - s_cond;
  return s_ab - s_a - s_cond - (1.0 - q.value()) * s_a * s_cond;
}

}  // namespace qsep
