#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "qsep/criteria.hpp"
#include "qsep/errors.hpp"
#include "qsep/sampling.hpp"

using namespace qsep;

TEST_CASE("random_prob_vector lands on the simplex") {
  Rng rng(101);
  for (int n : {1, 2, 5, 12}) {
    ProbVector p = random_prob_vector(n, rng);
    CHECK(p.size() == n);
    CHECK(p.values().sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.values().minCoeff() >= 0.0);
  }
  CHECK_THROWS_AS(random_prob_vector(0, rng), DimensionMismatch);
}

TEST_CASE("random_joint_table is a valid distribution") {
  Rng rng(102);
  JointProbTable t = random_joint_table(3, 4, rng);
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 4);
  CHECK(t.values().sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.values().minCoeff() >= 0.0);
}

TEST_CASE("random_density_matrix passes state validation by construction") {
  Rng rng(103);
  for (auto [da, db] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{4, 1}}) {
    DensityMatrix rho = random_density_matrix(da, db, rng);
    CHECK(rho.dim_a() == da);
    CHECK(rho.dim_b() == db);
    Eigen::VectorXd spec = spectrum_probs(rho);
    CHECK(spec.minCoeff() >= 0.0);
    CHECK(spec.maxCoeff() <= 1.0 + 1e-12);
    CHECK(spec.sum() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("random_unitary is unitary") {
  Rng rng(104);
  for (int d : {2, 3, 5}) {
    Eigen::MatrixXcd u = random_unitary(d, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
}

TEST_CASE("sampling is deterministic under a fixed seed") {
  Rng a(42);
  Rng b(42);
  DensityMatrix ra = random_density_matrix(2, 2, a);
  DensityMatrix rb = random_density_matrix(2, 2, b);
  CHECK((ra.matrix() - rb.matrix()).cwiseAbs().maxCoeff() == 0.0);

  Rng c(43);
  DensityMatrix rc = random_density_matrix(2, 2, c);
  CHECK((ra.matrix() - rc.matrix()).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("shared-basis separable specs assemble into PPT states") {
  Rng rng(105);
  for (int rep = 0; rep < 50; ++rep) {
    SeparableSpec spec = random_separable_shared_basis(2, 2, rng);
    CHECK(spec.factors.size() >= 1);
    CHECK(spec.factors.size() <= 6);
    DensityMatrix rho = assemble_separable(spec);
    CHECK(rho.bipartite());
    PptResult ppt = ppt_test(rho);
    CHECK(ppt.verdict);
  }
}

TEST_CASE("general separable specs assemble into PPT states") {
  Rng rng(106);
  for (int rep = 0; rep < 50; ++rep) {
    SeparableSpec spec = random_separable_general(2, 3, rng);
    DensityMatrix rho = assemble_separable(spec);
    CHECK(rho.dim_a() == 2);
    CHECK(rho.dim_b() == 3);
    PptResult ppt = ppt_test(rho);
    CHECK(ppt.verdict);
  }
}

TEST_CASE("general separable generator: conditional entropy survey") {
  // exploratory sweep, recorded but not asserted beyond a loose floor:
  // mixtures with independently drawn factors are not covered by the
  // shared-basis construction, so their minimum is only reported
  Rng rng(107);
  double min_seen = 1e300;
  for (int rep = 0; rep < 100; ++rep) {
    DensityMatrix rho = assemble_separable(random_separable_general(2, 2, rng));
    for (double qv : {0.5, 1.0, 2.0, 5.0}) {
      double s = conditional_tsallis(rho, Subsystem::A, QIndex(qv));
      min_seen = std::min(min_seen, s);
    }
  }
  MESSAGE("minimum conditional entropy over general separable draws: ",
          min_seen);
  CHECK(min_seen >= -1e-9);
}
