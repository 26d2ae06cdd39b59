#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "qsep/matrix_ops.hpp"

namespace qsep {

inline constexpr double kProbTol = 1e-12;
inline constexpr double kQLimitOneTol = 1e-9;

// Entropic index q > 0. Values within 1e-9 of 1 take the logarithmic
// limit branch everywhere.
class QIndex {
 public:
  explicit QIndex(double q);
  static QIndex shannon() { return QIndex(1.0); }

  double value() const { return q_; }
  bool limit_one() const { return limit_one_; }

 private:
  double q_;
  bool limit_one_;
};

// p^q with the 0^q := 0 convention, evaluated in log space.
inline double pow_q(double base, double q) {
  if (base <= 0.0) return 0.0;
  return std::exp(q * std::log(base));
}

// Probability vector: entries in [0, 1], summing to 1 within 1e-12.
class ProbVector {
 public:
  explicit ProbVector(Eigen::VectorXd p);

  const Eigen::VectorXd& values() const { return p_; }
  Eigen::Index size() const { return p_.size(); }
  double operator[](Eigen::Index i) const { return p_(i); }

 private:
  Eigen::VectorXd p_;
};

// Joint distribution over a product alphabet; rows index A, columns B.
class JointProbTable {
 public:
  explicit JointProbTable(Eigen::MatrixXd p);

  const Eigen::MatrixXd& values() const { return p_; }
  Eigen::Index rows() const { return p_.rows(); }
  Eigen::Index cols() const { return p_.cols(); }

 private:
  Eigen::MatrixXd p_;
};

// Conditional distributions p(B|A=a), one row per outcome of A.
// Rows whose marginal weight is zero carry no information; they are
// zeroed and flagged false in row_defined.
struct ConditionalTable {
  Eigen::MatrixXd rows;
  std::vector<bool> row_defined;
};

// ---- kernels on raw nonnegative weight vectors ----

// sum_i p_i^q
double power_sum(const Eigen::VectorXd& p, double q);

// -sum_i p_i ln p_i
double shannon_entropy(const Eigen::VectorXd& p);

// (1 - sum p_i^q) / (q - 1); Shannon at the q -> 1 branch
double tsallis_entropy(const Eigen::VectorXd& p, const QIndex& q);

// [S_q(joint) - S_q(marg)] / (1 + (1 - q) S_q(marg)), computed as
// (sum joint^q - sum marg^q) / ((1 - q) sum marg^q) to avoid
// cancellation. Throws DegenerateDenominator if sum marg^q underflows
// to zero or is not finite.
double conditional_tsallis(const Eigen::VectorXd& joint,
                           const Eigen::VectorXd& marg, const QIndex& q);

// ---- table-level API ----

ProbVector marginal(const JointProbTable& t, Subsystem keep);

ConditionalTable conditional_table(const JointProbTable& t);

// escort distribution p_i^q / sum_j p_j^q
ProbVector escort(const ProbVector& p, const QIndex& q);

double tsallis_entropy(const ProbVector& p, const QIndex& q);
double tsallis_entropy(const JointProbTable& t, const QIndex& q);

// S_q(B|A) for given == A, S_q(A|B) for given == B
double conditional_tsallis(const JointProbTable& t, Subsystem given,
                           const QIndex& q);

// S_q(A,B) - S_q(A) - S_q(B|A) - (1-q) S_q(A) S_q(B|A); the last term
// drops out on the q -> 1 branch. Zero up to roundoff for every valid
// table.
double pseudoadditivity_residual(const JointProbTable& t, const QIndex& q);

}  // namespace qsep
