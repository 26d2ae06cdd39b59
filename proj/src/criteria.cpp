#include "qsep/criteria.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qsep/errors.hpp"

namespace qsep {

namespace {

constexpr double kBracketLo = 1e-9;
constexpr double kBracketHi = 1.0 - 1e-9;
constexpr double kRootTol = 1e-10;
constexpr int kMaxBisectIter = 200;
constexpr double kVerdictSlack = 1e-10;

}  // namespace

WernerParam::WernerParam(double x) : x_(x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw OutOfRange("mixing weight must lie in [0, 1], got " +
                     std::to_string(x));
  }
}

DensityMatrix werner_state(WernerParam x) {
  Eigen::VectorXcd psi(4);
  double r = 1.0 / std::sqrt(2.0);
  psi << 0.0, r, -r, 0.0;
  Eigen::MatrixXcd m = (1.0 - x.value()) / 4.0 * Eigen::MatrixXcd::Identity(4, 4) +
                       x.value() * (psi * psi.adjoint());
  return DensityMatrix(m, 2, 2);
}

double werner_conditional_closed_form(WernerParam x, const QIndex& q) {
  double u = (1.0 - x.value()) / 2.0;
  double v = (1.0 + 3.0 * x.value()) / 2.0;
  if (q.limit_one()) {
    double s = 0.0;
    if (u > 0.0) s -= 1.5 * u * std::log(u);
    if (v > 0.0) s -= 0.5 * v * std::log(v);
    return s;
  }
  return (1.5 * pow_q(u, q.value()) + 0.5 * pow_q(v, q.value()) - 1.0) /
         (1.0 - q.value());
}

double werner_threshold(const QIndex& q) {
  auto f = [&](double x) {
    return werner_conditional_closed_form(WernerParam(x), q);
  };
  double lo = kBracketLo;
  double hi = kBracketHi;
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw RootBracketFailure("no sign change on [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "] at q = " +
                             std::to_string(q.value()));
  }
  for (int i = 0; i < kMaxBisectIter && hi - lo > kRootTol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<CurveRow> threshold_curve(const std::vector<double>& q_grid) {
  double prev = 0.0;
  for (double q : q_grid) {
    if (!std::isfinite(q) || q <= 0.0) {
      throw InvalidQ("grid values must be finite and positive, got " +
                     std::to_string(q));
    }
    if (q <= prev) {
      throw OutOfRange("grid must be strictly increasing");
    }
    prev = q;
  }
  std::vector<CurveRow> rows;
  rows.reserve(q_grid.size());
  for (double qv : q_grid) {
    QIndex q(qv);
    CurveRow row;
    row.q = qv;
    try {
      row.x_star = werner_threshold(q);
    } catch (const RootBracketFailure&) {
      row.x_star = std::numeric_limits<double>::quiet_NaN();
    }
    row.s_at_one_third =
        werner_conditional_closed_form(WernerParam(kWernerPptThreshold), q);
    rows.push_back(row);
  }
  return rows;
}

bool asymptotic_threshold_check(const QIndex& q, double tol) {
  return std::abs(werner_threshold(q) - kWernerPptThreshold) <= tol;
}

EntropicVerdict entropic_criterion(const DensityMatrix& rho, const QIndex& q) {
  EntropicVerdict v;
  v.s_b_given_a = conditional_tsallis(rho, Subsystem::A, q);
  v.s_a_given_b = conditional_tsallis(rho, Subsystem::B, q);
  v.separable_hint =
      v.s_b_given_a >= -kVerdictSlack && v.s_a_given_b >= -kVerdictSlack;
  return v;
}

double renyi_entropy(const Eigen::VectorXd& spectrum, double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 ||
      std::abs(alpha - 1.0) < kQLimitOneTol) {
    throw InvalidAlpha("alpha must be positive and away from 1, got " +
                       std::to_string(alpha));
  }
  double s = power_sum(spectrum, alpha);
  if (!std::isfinite(s) || s <= 0.0) {
    throw DegenerateDenominator("sum of spectrum^alpha is " +
                                std::to_string(s) + " at alpha = " +
                                std::to_string(alpha));
  }
  return std::log(s) / (1.0 - alpha);
}

double renyi_entropy(const DensityMatrix& rho, double alpha) {
  return renyi_entropy(spectrum_probs(rho), alpha);
}

AlphaEntropicVerdict alpha_entropic_criterion(const DensityMatrix& rho,
                                              double alpha) {
  if (!rho.bipartite()) {
    throw NotBipartite("state has dimensions (" + std::to_string(rho.dim_a()) +
                       ", " + std::to_string(rho.dim_b()) +
                       "); both factors must have dimension >= 2");
  }
  AlphaEntropicVerdict v;
  v.s_ab = renyi_entropy(rho, alpha);
  v.s_a = renyi_entropy(marginal(rho, Subsystem::A), alpha);
  v.s_b = renyi_entropy(marginal(rho, Subsystem::B), alpha);
  v.satisfied = v.s_ab >= std::max(v.s_a, v.s_b) - kVerdictSlack;
  return v;
}

PptResult ppt_test(const DensityMatrix& rho) {
  if (!rho.bipartite()) {
    throw NotBipartite("state has dimensions (" + std::to_string(rho.dim_a()) +
                       ", " + std::to_string(rho.dim_b()) +
                       "); both factors must have dimension >= 2");
  }
  Eigen::MatrixXcd pt =
      partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b(), Subsystem::B);
  PptResult r;
  r.min_eigenvalue = hermitian_eigen(pt).eigenvalues.minCoeff();
  r.verdict = r.min_eigenvalue >= -kVerdictSlack;
  return r;
}

CriterionReport criterion_report(const DensityMatrix& rho, const QIndex& q) {
  CriterionReport rep;
  rep.q = q.value();
  rep.q_limit_one = q.limit_one();
  rep.entropic = entropic_criterion(rho, q);
  rep.renyi2_hint = alpha_entropic_criterion(rho, 2.0).satisfied;
  rep.ppt = ppt_test(rho);
  return rep;
}

}  // namespace qsep
