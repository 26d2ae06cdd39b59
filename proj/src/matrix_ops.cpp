#include "qsep/matrix_ops.hpp"

#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qsep/errors.hpp"

namespace qsep {

namespace {

void check_bipartite_dims(const Eigen::MatrixXcd& m, int d_a, int d_b) {
  if (d_a < 1 || d_b < 1) {
    throw DimensionMismatch("subsystem dimensions must be positive, got (" +
                            std::to_string(d_a) + ", " + std::to_string(d_b) +
                            ")");
  }
  if (m.rows() != m.cols()) {
    throw NotSquare("matrix is " + std::to_string(m.rows()) + " x " +
                    std::to_string(m.cols()));
  }
  if (m.rows() != static_cast<Eigen::Index>(d_a) * d_b) {
    throw DimensionMismatch("matrix side " + std::to_string(m.rows()) +
                            " != d_a * d_b = " + std::to_string(d_a * d_b));
  }
}

}  // namespace

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Spectrum hermitian_eigen(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) {
    throw NotSquare("matrix is " + std::to_string(m.rows()) + " x " +
                    std::to_string(m.cols()));
  }
  if (!is_hermitian(m, tol)) {
    throw NotHermitian("max deviation from self-adjointness exceeds " +
                       std::to_string(tol));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("eigensolver did not converge");
  }
  // solver returns ascending order; flip to descending
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return Eigen::kroneckerProduct(a, b);
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& m, int d_a, int d_b,
                               Subsystem keep) {
  check_bipartite_dims(m, d_a, d_b);
  if (keep == Subsystem::A) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_a, d_a);
    for (int a = 0; a < d_a; ++a)
      for (int ap = 0; ap < d_a; ++ap)
        for (int b = 0; b < d_b; ++b)
          out(a, ap) += m(a * d_b + b, ap * d_b + b);
    return out;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_b, d_b);
  for (int b = 0; b < d_b; ++b)
    for (int bp = 0; bp < d_b; ++bp)
      for (int a = 0; a < d_a; ++a)
        out(b, bp) += m(a * d_b + b, a * d_b + bp);
  return out;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& m, int d_a, int d_b,
                                   Subsystem on) {
  check_bipartite_dims(m, d_a, d_b);
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int a = 0; a < d_a; ++a)
    for (int ap = 0; ap < d_a; ++ap)
      for (int b = 0; b < d_b; ++b)
        for (int bp = 0; bp < d_b; ++bp) {
          if (on == Subsystem::B)
            out(a * d_b + b, ap * d_b + bp) = m(a * d_b + bp, ap * d_b + b);
          else
            out(a * d_b + b, ap * d_b + bp) = m(ap * d_b + b, a * d_b + bp);
        }
  return out;
}

}  // namespace qsep
