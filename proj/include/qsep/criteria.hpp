#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qsep/classical.hpp"
#include "qsep/quantum.hpp"

namespace qsep {

// Published separability thresholds for the Werner-Popescu family
// rho(x) = (1-x)/4 I + x |singlet><singlet|.
inline constexpr double kWernerBellThreshold = 0.7071067811865476;    // 1/sqrt(2)
inline constexpr double kWernerRenyi2Threshold = 0.5773502691896258;  // 1/sqrt(3)
inline constexpr double kWernerPptThreshold = 1.0 / 3.0;

// Mixing weight x in [0, 1].
class WernerParam {
 public:
  explicit WernerParam(double x);
  double value() const { return x_; }

 private:
  double x_;
};

DensityMatrix werner_state(WernerParam x);

// S_q(B|A) of the Werner-Popescu state in closed form: with
// u = (1-x)/2 and v = (1+3x)/2,
//   ((3/2) u^q + (1/2) v^q - 1) / (1 - q),
// and the q -> 1 branch -(3/2) u ln u - (1/2) v ln v.
double werner_conditional_closed_form(WernerParam x, const QIndex& q);

// Root x*(q) of the closed form in (0, 1): the mixing weight where
// the conditional entropy changes sign. Bisection on
// [1e-9, 1 - 1e-9] to an x tolerance of 1e-10; throws
// RootBracketFailure if the endpoints do not bracket a sign change.
double werner_threshold(const QIndex& q);

struct CurveRow {
  double q;
  double x_star;          // NaN when the bisection bracket fails
  double s_at_one_third;  // closed-form conditional entropy at x = 1/3
};

// x*(q) over a strictly increasing positive grid. Rows where the
// threshold solve fails carry NaN instead of aborting the sweep.
std::vector<CurveRow> threshold_curve(const std::vector<double>& q_grid);

// |x*(q) - 1/3| <= tol
bool asymptotic_threshold_check(const QIndex& q, double tol);

// Sign test of both conditional entropies; nonnegative values are
// consistent with separability, a negative value certifies
// entanglement.
struct EntropicVerdict {
  double s_b_given_a;
  double s_a_given_b;
  bool separable_hint;
};

EntropicVerdict entropic_criterion(const DensityMatrix& rho, const QIndex& q);

// (1 - alpha)^-1 ln sum lambda^alpha. Rejects alpha <= 0 and
// alpha within 1e-9 of 1.
double renyi_entropy(const Eigen::VectorXd& spectrum, double alpha);
double renyi_entropy(const DensityMatrix& rho, double alpha);

// Checks S_alpha(AB) >= max(S_alpha(A), S_alpha(B)) with 1e-10 slack;
// separable states satisfy it, violation certifies entanglement.
struct AlphaEntropicVerdict {
  double s_ab;
  double s_a;
  double s_b;
  bool satisfied;
};

AlphaEntropicVerdict alpha_entropic_criterion(const DensityMatrix& rho,
                                              double alpha);

// Partial transpose test: verdict is true when the smallest
// eigenvalue of rho^(T_B) is >= -1e-10. Conclusive for 2x2 and
// 2x3 systems, necessary-only above.
struct PptResult {
  bool verdict;
  double min_eigenvalue;
};

PptResult ppt_test(const DensityMatrix& rho);

struct CriterionReport {
  double q;
  bool q_limit_one;
  EntropicVerdict entropic;
  bool renyi2_hint;
  PptResult ppt;
};

CriterionReport criterion_report(const DensityMatrix& rho, const QIndex& q);

}  // namespace qsep
