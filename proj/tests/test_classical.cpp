#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "qsep/classical.hpp"
#include "qsep/errors.hpp"

using namespace qsep;

namespace {

Eigen::MatrixXd table_2x2() {
  Eigen::MatrixXd t(2, 2);
  t << 0.1, 0.2, 0.3, 0.4;
  return t;
}

// escort-weighted average of the per-row entropies, the defining
// expectation form of the conditional entropy
double conditional_by_escort_average(const JointProbTable& t, const QIndex& q) {
  ProbVector pa = marginal(t, Subsystem::A);
  ConditionalTable ct = conditional_table(t);
  double z = power_sum(pa.values(), q.value());
  double acc = 0.0;
  for (Eigen::Index a = 0; a < t.rows(); ++a) {
    if (!ct.row_defined[static_cast<size_t>(a)]) continue;
    double w = pow_q(pa[a], q.value()) / z;
    acc += w * tsallis_entropy(Eigen::VectorXd(ct.rows.row(a).transpose()), q);
  }
  return acc;
}

}  // namespace

TEST_CASE("QIndex validates and detects the q -> 1 branch") {
  CHECK_THROWS_AS(QIndex(0.0), InvalidQ);
  CHECK_THROWS_AS(QIndex(-2.0), InvalidQ);
  CHECK_THROWS_AS(QIndex(std::nan("")), InvalidQ);
  CHECK_THROWS_AS(QIndex(std::numeric_limits<double>::infinity()), InvalidQ);

  CHECK(QIndex(1.0).limit_one());
  CHECK(QIndex(1.0 + 5e-10).limit_one());
  CHECK(QIndex(1.0 - 5e-10).limit_one());
  CHECK_FALSE(QIndex(1.0 + 1e-8).limit_one());
  CHECK(QIndex::shannon().limit_one());
  CHECK(QIndex(2.0).value() == 2.0);
}

TEST_CASE("pow_q uses the 0^q := 0 convention") {
  CHECK(pow_q(0.0, 0.5) == 0.0);
  CHECK(pow_q(0.0, 2.0) == 0.0);
  CHECK(pow_q(-1e-30, 2.0) == 0.0);
  CHECK(pow_q(0.5, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(pow_q(0.25, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("ProbVector and JointProbTable reject malformed input") {
  Eigen::VectorXd neg(2);
  neg << 1.2, -0.2;
  CHECK_THROWS_AS(ProbVector{neg}, InvalidState);

  Eigen::VectorXd short_sum(2);
  short_sum << 0.4, 0.4;
  CHECK_THROWS_AS(ProbVector{short_sum}, InvalidState);

  CHECK_THROWS_AS(ProbVector{Eigen::VectorXd()}, InvalidState);

  Eigen::MatrixXd bad(2, 2);
  bad << 0.5, 0.5, 0.5, -0.5;
  CHECK_THROWS_AS(JointProbTable{bad}, InvalidState);

  // tiny negative drift within tolerance is still rejected: entries
  // must be true probabilities
  Eigen::VectorXd ok(2);
  ok << 0.5, 0.5;
  CHECK(ProbVector(ok).size() == 2);
}

TEST_CASE("tsallis entropy on simple spectra") {
  Eigen::VectorXd uniform2(2);
  uniform2 << 0.5, 0.5;
  CHECK(tsallis_entropy(uniform2, QIndex(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(tsallis_entropy(uniform2, QIndex(1.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));

  Eigen::VectorXd pure(2);
  pure << 1.0, 0.0;
  CHECK(tsallis_entropy(pure, QIndex(2.0)) == doctest::Approx(0.0));
  CHECK(tsallis_entropy(pure, QIndex(0.5)) == doctest::Approx(0.0));
  CHECK(tsallis_entropy(pure, QIndex(1.0)) == doctest::Approx(0.0));

  // uniform over n: (1 - n^(1-q)) / (q - 1)
  Eigen::VectorXd uniform4 = Eigen::VectorXd::Constant(4, 0.25);
  CHECK(tsallis_entropy(uniform4, QIndex(2.0)) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK(tsallis_entropy(uniform4, QIndex(3.0)) ==
        doctest::Approx((1.0 - 1.0 / 16.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("marginals of the reference table") {
  JointProbTable t(table_2x2());
  ProbVector pa = marginal(t, Subsystem::A);
  CHECK(pa[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(pa[1] == doctest::Approx(0.7).epsilon(1e-15));
  ProbVector pb = marginal(t, Subsystem::B);
  CHECK(pb[0] == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(pb[1] == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("shannon values of the reference table") {
  JointProbTable t(table_2x2());
  QIndex one = QIndex::shannon();
  CHECK(tsallis_entropy(t, one) ==
        doctest::Approx(1.2798542258336676).epsilon(1e-14));
  CHECK(tsallis_entropy(marginal(t, Subsystem::A), one) ==
        doctest::Approx(0.6108643020548935).epsilon(1e-14));
  CHECK(conditional_tsallis(t, Subsystem::A, one) ==
        doctest::Approx(0.6689899237787741).epsilon(1e-14));
}

TEST_CASE("conditional entropy of the reference table at q = 2") {
  JointProbTable t(table_2x2());
  CHECK(conditional_tsallis(t, Subsystem::A, QIndex(2.0)) ==
        doctest::Approx(14.0 / 29.0).epsilon(1e-14));
}

TEST_CASE("conditional entropy of the uniform 2x2 table at q = 2") {
  JointProbTable t(Eigen::MatrixXd::Constant(2, 2, 0.25));
  CHECK(tsallis_entropy(t, QIndex(2.0)) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(conditional_tsallis(t, Subsystem::A, QIndex(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("closed form equals the escort-weighted average of row entropies") {
  JointProbTable t(table_2x2());
  for (double qv : {0.3, 0.5, 2.0, 3.5, 7.0}) {
    QIndex q(qv);
    CHECK(conditional_tsallis(t, Subsystem::A, q) ==
          doctest::Approx(conditional_by_escort_average(t, q)).epsilon(1e-12));
  }

  Eigen::MatrixXd wide(2, 3);
  wide << 0.05, 0.1, 0.15, 0.2, 0.25, 0.25;
  JointProbTable t2(wide);
  for (double qv : {0.5, 2.0, 5.0}) {
    QIndex q(qv);
    CHECK(conditional_tsallis(t2, Subsystem::A, q) ==
          doctest::Approx(conditional_by_escort_average(t2, q)).epsilon(1e-12));
  }
}

TEST_CASE("shannon chain rule holds on the q -> 1 branch") {
  JointProbTable t(table_2x2());
  QIndex one = QIndex::shannon();
  double joint = tsallis_entropy(t, one);
  double marg = tsallis_entropy(marginal(t, Subsystem::A), one);
  CHECK(conditional_tsallis(t, Subsystem::A, one) ==
        doctest::Approx(joint - marg).epsilon(1e-14));
}

TEST_CASE("conditional_table normalizes rows and flags empty ones") {
  Eigen::MatrixXd with_gap(3, 2);
  with_gap << 0.2, 0.2, 0.0, 0.0, 0.3, 0.3;
  JointProbTable t(with_gap);
  ConditionalTable ct = conditional_table(t);
  CHECK(ct.row_defined[0]);
  CHECK_FALSE(ct.row_defined[1]);
  CHECK(ct.row_defined[2]);
  CHECK(ct.rows(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ct.rows(1, 0) == 0.0);
  CHECK(ct.rows(1, 1) == 0.0);
  CHECK(ct.rows(2, 1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("escort distribution") {
  Eigen::VectorXd p(2);
  p << 0.8, 0.2;
  ProbVector e = escort(ProbVector(p), QIndex(2.0));
  CHECK(e[0] == doctest::Approx(16.0 / 17.0).epsilon(1e-14));
  CHECK(e[1] == doctest::Approx(1.0 / 17.0).epsilon(1e-14));

  // q = 1 leaves the distribution unchanged
  ProbVector same = escort(ProbVector(p), QIndex(1.0));
  CHECK(same[0] == doctest::Approx(0.8).epsilon(1e-15));

  // escort of a uniform distribution is uniform at every q
  Eigen::VectorXd u = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
  ProbVector eu = escort(ProbVector(u), QIndex(4.0));
  for (Eigen::Index i = 0; i < 3; ++i)
    CHECK(eu[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("power sums below the representable range are rejected") {
  JointProbTable t(Eigen::MatrixXd::Constant(2, 2, 0.25));
  // 0.5^5000 underflows to zero, the denominator degenerates
  CHECK_THROWS_AS(conditional_tsallis(t, Subsystem::A, QIndex(5000.0)),
                  DegenerateDenominator);

  Eigen::VectorXd half(2);
  half << 0.5, 0.5;
  CHECK_THROWS_AS(escort(ProbVector(half), QIndex(5000.0)),
                  DegenerateDenominator);
}

TEST_CASE("pseudoadditivity residual vanishes") {
  JointProbTable t(table_2x2());
  for (double qv : {0.2, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    CHECK(std::abs(pseudoadditivity_residual(t, QIndex(qv))) <= 1e-14);
  }

  Eigen::MatrixXd wide(3, 4);
  wide << 0.02, 0.03, 0.05, 0.10, 0.04, 0.06, 0.10, 0.10, 0.08, 0.12, 0.10,
      0.20;
  JointProbTable t2(wide);
  for (double qv : {0.2, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    CHECK(std::abs(pseudoadditivity_residual(t2, QIndex(qv))) <= 1e-14);
  }
}

TEST_CASE("conditional entropy of correlated and independent tables") {
  // perfectly correlated pair: knowing A removes all uncertainty in B
  Eigen::MatrixXd corr(2, 2);
  corr << 0.5, 0.0, 0.0, 0.5;
  JointProbTable t(corr);
  CHECK(conditional_tsallis(t, Subsystem::A, QIndex(2.0)) ==
        doctest::Approx(0.0));
  CHECK(tsallis_entropy(marginal(t, Subsystem::B), QIndex(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-15));

  // independent product: conditional equals the single-factor entropy
  Eigen::Vector2d pa_fac(0.3, 0.7);
  Eigen::RowVector2d pb_fac(0.6, 0.4);
  Eigen::MatrixXd indep = pa_fac * pb_fac;
  JointProbTable ti(indep);
  for (double qv : {0.5, 1.0, 2.0, 3.0}) {
    QIndex q(qv);
    Eigen::VectorXd pb(2);
    pb << 0.6, 0.4;
    CHECK(conditional_tsallis(ti, Subsystem::A, q) ==
          doctest::Approx(tsallis_entropy(pb, q)).epsilon(1e-12));
  }
}
