#include "qsep/classical.hpp"

#include <cmath>
#include <string>

#include "qsep/errors.hpp"

namespace qsep {

namespace {

void check_weights(const Eigen::VectorXd& p, const char* what) {
  if (p.size() == 0) {
    throw InvalidState(std::string(what) + " is empty");
  }
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p(i)) || p(i) < 0.0 || p(i) > 1.0 + kProbTol) {
      throw InvalidState(std::string(what) + " entry " + std::to_string(i) +
                         " = " + std::to_string(p(i)) +
                         " is outside [0, 1]");
    }
  }
  double sum = p.sum();
  if (std::abs(sum - 1.0) > kProbTol) {
    throw InvalidState(std::string(what) + " sums to " + std::to_string(sum) +
                       ", not 1");
  }
}

double checked_power_sum(const Eigen::VectorXd& p, double q) {
  double s = power_sum(p, q);
  if (!std::isfinite(s) || s <= 0.0) {
    throw DegenerateDenominator("sum of probabilities^q is " +
                                std::to_string(s) + " at q = " +
                                std::to_string(q));
  }
  return s;
}

}  // namespace

QIndex::QIndex(double q) : q_(q), limit_one_(std::abs(q - 1.0) < kQLimitOneTol) {
  if (!std::isfinite(q) || q <= 0.0) {
    throw InvalidQ("entropic index must be finite and positive, got " +
                   std::to_string(q));
  }
}

ProbVector::ProbVector(Eigen::VectorXd p) : p_(std::move(p)) {
  check_weights(p_, "probability vector");
}

JointProbTable::JointProbTable(Eigen::MatrixXd p) : p_(std::move(p)) {
  if (p_.size() == 0) {
    throw InvalidState("joint table is empty");
  }
  Eigen::VectorXd flat =
      Eigen::Map<const Eigen::VectorXd>(p_.data(), p_.size());
  check_weights(flat, "joint table");
}

double power_sum(const Eigen::VectorXd& p, double q) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) s += pow_q(p(i), q);
  return s;
}

double shannon_entropy(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > 0.0) s -= p(i) * std::log(p(i));
  return s;
}

double tsallis_entropy(const Eigen::VectorXd& p, const QIndex& q) {
  if (q.limit_one()) return shannon_entropy(p);
  return (1.0 - power_sum(p, q.value())) / (q.value() - 1.0);
}

double conditional_tsallis(const Eigen::VectorXd& joint,
                           const Eigen::VectorXd& marg, const QIndex& q) {
  if (q.limit_one()) {
    return shannon_entropy(joint) - shannon_entropy(marg);
  }
  double denom = checked_power_sum(marg, q.value());
  double num = power_sum(joint, q.value()) - denom;
  return num / ((1.0 - q.value()) * denom);
}

ProbVector marginal(const JointProbTable& t, Subsystem keep) {
  Eigen::VectorXd m = keep == Subsystem::A
                          ? Eigen::VectorXd(t.values().rowwise().sum())
                          : Eigen::VectorXd(t.values().colwise().sum());
  // clamp accumulated roundoff so the wrapper's invariants hold
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = std::max(m(i), 0.0);
  return ProbVector(m);
}

ConditionalTable conditional_table(const JointProbTable& t) {
  ConditionalTable out;
  out.rows = Eigen::MatrixXd::Zero(t.rows(), t.cols());
  out.row_defined.assign(static_cast<size_t>(t.rows()), false);
  for (Eigen::Index a = 0; a < t.rows(); ++a) {
    double w = t.values().row(a).sum();
    if (w > 0.0) {
      out.rows.row(a) = t.values().row(a) / w;
      out.row_defined[static_cast<size_t>(a)] = true;
    }
  }
  return out;
}

ProbVector escort(const ProbVector& p, const QIndex& q) {
  if (q.limit_one()) return p;
  double z = checked_power_sum(p.values(), q.value());
  Eigen::VectorXd e(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i)
    e(i) = pow_q(p[i], q.value()) / z;
  return ProbVector(e);
}

double tsallis_entropy(const ProbVector& p, const QIndex& q) {
  return tsallis_entropy(p.values(), q);
}

double tsallis_entropy(const JointProbTable& t, const QIndex& q) {
  Eigen::VectorXd flat =
      Eigen::Map<const Eigen::VectorXd>(t.values().data(), t.values().size());
  return tsallis_entropy(flat, q);
}

double conditional_tsallis(const JointProbTable& t, Subsystem given,
                           const QIndex& q) {
  Eigen::VectorXd flat =
      Eigen::Map<const Eigen::VectorXd>(t.values().data(), t.values().size());
  return conditional_tsallis(flat, marginal(t, given).values(), q);
}

double pseudoadditivity_residual(const JointProbTable& t, const QIndex& q) {
  double s_ab = tsallis_entropy(t, q);
  Eigen::VectorXd flat =
      Eigen::Map<const Eigen::VectorXd>(t.values().data(), t.values().size());
  double s_a = tsallis_entropy(marginal(t, Subsystem::A), q);
  double s_cond = conditional_tsallis(flat, marginal(t, Subsystem::A).values(), q);
  if (q.limit_one()) return s_ab - s_a - s_cond;
  return s_ab - s_a - s_cond - (1.0 - q.value()) * s_a * s_cond;
}

}  // namespace qsep
