#include <doctest.h>

#include "framekz/hilbert.hpp"
#include "framekz/kaczmarz.hpp"
#include "generators.hpp"

using namespace framekz;

namespace {

const double kRt3 = std::sqrt(3.0);

Vec rvec(std::initializer_list<double> entries) {
  Vec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double x : entries) v(i++) = Complex(x, 0.0);
  return v;
}

// The worked two-vector fixture at angle pi/3.
VecList angle_pair() { return {rvec({1, 0}), rvec({0.5, kRt3 / 2})}; }

}  // namespace

TEST_CASE("kaczmarz step") {
  CHECK((kaczmarz_step(rvec({2, 3}), rvec({2, 0}), rvec({0, 1})) - rvec({2, 3}))
            .norm() == 0.0);

  gen::Rng rng(5);
  const Vec x = gen::gaussian_vec(4, rng);
  const Vec e = gen::unit_vec(4, rng);
  CHECK((kaczmarz_step(x, x, e) - x).norm() <= 1e-15);

  const Vec step = kaczmarz_step(rvec({0, 1}), rvec({0, 0}), angle_pair()[1]);
  CHECK((step - rvec({kRt3 / 4, 0.75})).norm() <= 1e-15);

  // x - x_n is orthogonal to the step direction.
  for (int trial = 0; trial < 20; ++trial) {
    const Vec xt = gen::gaussian_vec(5, rng);
    const Vec xp = gen::gaussian_vec(5, rng);
    const Vec et = gen::unit_vec(5, rng);
    CHECK(std::abs(inner(xt - kaczmarz_step(xt, xp, et), et)) <= 1e-13);
  }

  CHECK_THROWS_AS(kaczmarz_step(rvec({1, 0}), rvec({0, 0}), rvec({1, 1})),
                  ValidationError);
  CHECK_THROWS_AS(kaczmarz_step(rvec({1, 0}), rvec({0}), rvec({1, 0})),
                  std::invalid_argument);
}

TEST_CASE("auxiliary sequence on fixed inputs") {
  const VecList ortho = {rvec({1, 0}), rvec({0, 1})};
  const VecList g1 = auxiliary_sequence(ortho);
  CHECK((g1[0] - ortho[0]).norm() == 0.0);
  CHECK((g1[1] - ortho[1]).norm() == 0.0);

  const VecList repeated = {rvec({1, 0}), rvec({1, 0})};
  const VecList g2 = auxiliary_sequence(repeated);
  CHECK(g2[1].norm() == 0.0);

  const VecList g3 = auxiliary_sequence(angle_pair());
  CHECK((g3[0] - rvec({1, 0})).norm() == 0.0);
  CHECK((g3[1] - rvec({0, kRt3 / 2})).norm() <= 1e-15);

  CHECK_THROWS_AS(auxiliary_sequence({rvec({2, 0})}), ValidationError);
  CHECK_THROWS_AS(auxiliary_sequence({}), std::invalid_argument);
}

TEST_CASE("auxiliary vectors match the projection-product path") {
  // Independent oracle: g_n = P_0 P_1 ... P_{n-1} e_n.
  gen::Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 7);
    const int count = 2 + static_cast<int>(rng() % 20);
    const VecList es = gen::unit_sequence(d, count, rng);
    const VecList gs = auxiliary_sequence(es);
    for (int n = 1; n < count; ++n) {
      Vec expected = es[n];
      for (int k = n - 1; k >= 0; --k) {
        expected -= inner(expected, es[k]) * es[k];
      }
      CHECK((gs[n] - expected).norm() <= 1e-12);
    }
    for (std::size_t n = 1; n < gs.size(); ++n) {
      CHECK(std::abs(inner(gs[n], gs[0])) <= 1e-12);
    }
  }
}

TEST_CASE("full kaczmarz run on fixed inputs") {
  const KaczmarzTrace basis_run =
      run_kaczmarz(rvec({2, 3}), {rvec({1, 0}), rvec({0, 1})});
  CHECK((basis_run.iterates[0] - rvec({2, 0})).norm() == 0.0);
  CHECK((basis_run.iterates[1] - rvec({2, 3})).norm() == 0.0);
  CHECK(basis_run.residual_norms[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(basis_run.residual_norms[1] == 0.0);
  CHECK(basis_run.defect == doctest::Approx(0.0).epsilon(1e-15));

  const KaczmarzTrace t = run_kaczmarz(rvec({0, 1}), angle_pair());
  CHECK((t.iterates[1] - rvec({kRt3 / 4, 0.75})).norm() <= 1e-15);
  CHECK(t.residual_norms[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.residual_norms[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(t.coefficients[0]) <= 1e-15);
  CHECK(std::abs(t.coefficients[1] - Complex(kRt3 / 2)) <= 1e-15);
  CHECK(t.defect == doctest::Approx(0.25).epsilon(1e-14));

  const KaczmarzTrace zero = run_kaczmarz(rvec({0, 0}), angle_pair());
  CHECK(zero.iterates[1].norm() == 0.0);
  CHECK(zero.defect == 0.0);

  CHECK_THROWS_AS(run_kaczmarz(rvec({1}), angle_pair()), std::invalid_argument);
}

TEST_CASE("kaczmarz run invariants on random inputs") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 7);
    const int count = 2 + static_cast<int>(rng() % 24);
    const VecList es = gen::unit_sequence(d, count, rng);
    const Vec x = gen::gaussian_vec(d, rng);
    const KaczmarzTrace t = run_kaczmarz(x, es);
    const VecList gs = auxiliary_sequence(es);

    for (std::size_t n = 0; n < es.size(); ++n) {
      CHECK(std::abs(inner(x - t.iterates[n], es[n])) <= 1e-8);
      if (n > 0) {
        CHECK(t.residual_norms[n] <= t.residual_norms[n - 1] + 1e-12);
      }
      // Partial sums expand over the auxiliary coefficients: x_n = sum <x,g_i> e_i.
      Vec expansion = Vec::Zero(d);
      for (std::size_t i = 0; i <= n; ++i) {
        expansion += inner(x, gs[i]) * es[i];
      }
      CHECK((t.iterates[n] - expansion).norm() <= 1e-8);
    }
    CHECK(energy_identity_residual(x, t) <= 1e-8);
    CHECK(t.defect >= -1e-8);
    CHECK(convergence_lower_bound_check(t, es));
  }
}

TEST_CASE("orthonormal basis recovers x exactly") {
  gen::Rng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 6);
    const Mat q = gen::unitary(d, rng);
    VecList es;
    for (Eigen::Index j = 0; j < d; ++j) es.push_back(q.col(j));
    const Vec x = gen::gaussian_vec(d, rng);
    const KaczmarzTrace t = run_kaczmarz(x, es);
    CHECK(t.residual_norms.back() <= 1e-8);
    CHECK((t.iterates.back() - x).norm() <= 1e-8);
    CHECK(std::abs(t.defect) <= 1e-8);
  }
}

TEST_CASE("partial sum matrix") {
  const VecList basis = {rvec({1, 0}), rvec({0, 1})};
  const Mat s0 = partial_sum_matrix(basis, auxiliary_sequence(basis), 0);
  Mat expected(2, 2);
  expected << 1, 0, 0, 0;
  CHECK(max_abs(s0 - expected) == 0.0);

  const VecList es = angle_pair();
  const Mat s0b = partial_sum_matrix(es, auxiliary_sequence(es), 0);
  CHECK(max_abs(s0b - expected) <= 1e-15);

  gen::Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 6);
    const int count = 2 + static_cast<int>(rng() % 16);
    const VecList seq = gen::unit_sequence(d, count, rng);
    const VecList gs = auxiliary_sequence(seq);
    for (int n = 1; n < count; ++n) {
      const Mat s_prev = partial_sum_matrix(seq, gs, static_cast<std::size_t>(n - 1));
      const Vec lhs = (Mat::Identity(d, d) - s_prev) * seq[n];
      CHECK((lhs - gs[n]).norm() <= 1e-10);
    }
  }

  CHECK_THROWS_AS(partial_sum_matrix(es, auxiliary_sequence(es), 2),
                  std::invalid_argument);
}

TEST_CASE("projection products equal I minus the adjoint partial sum") {
  const VecList basis = {rvec({1, 0}), rvec({0, 1})};
  CHECK(max_abs(projection_product(basis, 1)) <= 1e-15);

  const VecList single = {rvec({1, 0})};
  Mat expected(2, 2);
  expected << 0, 0, 0, 1;
  CHECK(max_abs(projection_product(single, 0) - expected) == 0.0);

  gen::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 6);
    const int count = 1 + static_cast<int>(rng() % 16);
    const VecList seq = gen::unit_sequence(d, count, rng);
    const VecList gs = auxiliary_sequence(seq);
    for (int n = 0; n < count; ++n) {
      const Mat p = projection_product(seq, static_cast<std::size_t>(n));
      const Mat s = partial_sum_matrix(seq, gs, static_cast<std::size_t>(n));
      CHECK(max_abs(p - (Mat::Identity(d, d) - s.adjoint())) <= 1e-10);
    }
  }

  CHECK_THROWS_AS(projection_product(basis, 5), std::invalid_argument);
}

TEST_CASE("energy identity residual and defect on fixed inputs") {
  const VecList es = angle_pair();
  const Vec x = rvec({0, 1});
  const KaczmarzTrace t = run_kaczmarz(x, es);
  CHECK(energy_identity_residual(x, t) <= 1e-12);

  const VecList gs = auxiliary_sequence(es);
  CHECK(defect(x, gs) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(defect(rvec({0, 0}), gs) == 0.0);

  gen::Rng rng(43);
  const Mat q = gen::unitary(3, rng);
  VecList onb;
  for (Eigen::Index j = 0; j < 3; ++j) onb.push_back(q.col(j));
  const Vec y = gen::gaussian_vec(3, rng);
  CHECK(std::abs(defect(y, onb)) <= 1e-12);

  KaczmarzTrace broken = t;
  broken.coefficients.pop_back();
  CHECK_THROWS_AS(energy_identity_residual(x, broken), std::invalid_argument);
  CHECK_THROWS_AS(defect(rvec({1, 0, 0}), gs), std::invalid_argument);
}

TEST_CASE("convergence lower bound is tight for the angle fixture") {
  const VecList es = angle_pair();
  const KaczmarzTrace t = run_kaczmarz(rvec({0, 1}), es);
  // ||x - x_1|| = 1/2 equals |<e_0,e_1>| * ||x - x_0|| = 1/2 exactly.
  CHECK(t.residual_norms[1] ==
        doctest::Approx(0.5 * t.residual_norms[0]).epsilon(1e-12));
  CHECK(convergence_lower_bound_check(t, es));

  KaczmarzTrace forged = t;
  forged.residual_norms[1] = 0.4;  // below the guaranteed bound
  CHECK_FALSE(convergence_lower_bound_check(forged, es));
}
