#include "quasiradial/exponent_calculus.hpp"

#include "../oracles/xi_grid.hpp"

#include <doctest.h>

#include <random>

using namespace quasiradial;

namespace {

using R = Rational;

EndpointAsymptotics<R> origin(R a, R alpha, R beta, R gamma) { return {End::origin, a, alpha, beta, gamma, R(1)}; }
EndpointAsymptotics<R> infinity(R a, R alpha, R beta, R gamma) {
  return {End::infinity, a, alpha, beta, gamma, R(1)};
}

}  // namespace

TEST_CASE("critical exponents of the first example") {
  const ProblemDims<R> dims{4, R(2)};
  const auto inf = infinity(R(-1), R(0), R(0), R(3));
  CHECK(q_star(inf.alpha, inf.beta, inf.gamma, dims) == R(8));
  CHECK(q_double_star(inf.a, inf.alpha, inf.beta, inf.gamma, dims) == R(8));
  CHECK(q2_lower_bound(inf, dims) == R(8));
  CHECK(tail_decay_delta(inf, R(9), dims) == R(-1, 2));

  const auto o = origin(R(-1), R(0), R(1), R(8));
  const auto set = q1_admissible_set(o, dims);
  CHECK(set.branch == OriginBranch::above_critical);
  CHECK(set.lower == R(2));
  CHECK_FALSE(set.upper.has_value());
  CHECK(q1_region_membership(o, R(3), dims));
  CHECK_FALSE(q1_region_membership(o, R(2), dims));
}

TEST_CASE("second example family at N = 4") {
  const ProblemDims<R> dims{4, R(2)};
  const auto inf = infinity(R(-2), R(10), R(0), R(-1, 2));
  CHECK(q_star(inf.alpha, inf.beta, inf.gamma, dims) == R(56, 9));
  CHECK(q_double_star(inf.a, inf.alpha, inf.beta, inf.gamma, dims) == R(94, 9));
  // a = -2 = p - N sits outside (p - N, p] here, so only the formulas apply
  CHECK_THROWS_AS(q2_lower_bound(inf, dims), InvalidAsymptotics);
  CHECK(q2_lower_bound(inf, ProblemDims<R>{5, R(2)}) == R(102, 13));
}

TEST_CASE("second example subcases at N = 5") {
  const ProblemDims<R> dims{5, R(2)};
  const R p = dims.p, N(5);
  const auto s1 = q1_admissible_set(origin(R(-1), R(1, 2), R(0), R(4)), dims);
  CHECK(s1.branch == OriginBranch::below_N);
  CHECK(*s1.upper == R(8));
  const auto s2 = q1_admissible_set(origin(R(-1), R(1, 2), R(0), R(5)), dims);
  CHECK(s2.branch == OriginBranch::at_N);
  CHECK(*s2.upper == p * (p / 2 + (N - 1) * (p + 1)) / (N - p - 1));
  REQUIRE(s2.alpha_constraint);
  CHECK(s2.alpha_constraint->satisfied);
  const auto s3 = q1_admissible_set(origin(R(-1), R(1, 2), R(0), R(6)), dims);
  CHECK(s3.branch == OriginBranch::between);
  CHECK(*s3.upper == R(28));
  CHECK(q_star(R(1, 2), R(0), R(6), dims) < 0);
}

TEST_CASE("alpha triplet and branch thresholds") {
  const ProblemDims<R> dims{4, R(2)};
  const auto t = alpha_triplet(R(1, 2), R(4), dims);
  CHECK(t.alpha1 == R(-2));
  CHECK(t.alpha2 == R(-2));
  CHECK(t.alpha3 == R(-2));  // all three coincide at gamma = N
  CHECK(dims.critical_gamma(R(0)) == R(6));
  CHECK(origin_branch(origin(R(0), R(0), R(0), R(6)), dims) == OriginBranch::at_critical);
}

TEST_CASE("singular formulas throw") {
  const ProblemDims<R> dims{4, R(2)};
  CHECK_THROWS_AS(q_star(R(0), R(0), R(4), dims), GammaSingular);
  CHECK_THROWS_AS(q_double_star(R(0), R(0), R(0), R(6), dims), GammaSingular);
}

TEST_CASE("invalid asymptotics") {
  const ProblemDims<R> dims{4, R(2)};
  CHECK_THROWS_AS(validate(origin(R(0), R(0), R(3, 2), R(4)), dims), InvalidAsymptotics);
  CHECK_THROWS_AS(validate(origin(R(-3), R(0), R(0), R(6)), dims), InvalidAsymptotics);
  CHECK_THROWS_AS(validate(origin(R(0), R(0), R(0), R(1)), dims), InvalidAsymptotics);
  CHECK_THROWS_AS(validate(infinity(R(0), R(0), R(0), R(3)), dims), InvalidAsymptotics);
  CHECK_THROWS_AS(validate(origin(R(0), R(0), R(0), R(4)), ProblemDims<R>{2, R(2)}), InvalidAsymptotics);
}

TEST_CASE("xi witness at gamma = N") {
  const ProblemDims<R> dims{4, R(2)};
  const auto w = xi_witness_origin(origin(R(0), R(0), R(1, 2), R(4)), R(3), dims);
  REQUIRE_FALSE(w.empty);
  CHECK(w.lo == R(0));
  CHECK(w.hi == R(1, 2));
  CHECK(w.closed_lo);
  CHECK(w.closed_hi);

  oracle::OriginData d{4, 2, 0, 0, 0.5L, 4};
  int feasible_lo = -1, feasible_hi = -1;
  for (int k = 0; k <= 10000; ++k) {
    if (oracle::xi_system_holds(d, 3.0L, k * 1e-4L)) {
      if (feasible_lo < 0) feasible_lo = k;
      feasible_hi = k;
    }
  }
  CHECK(feasible_lo == 0);
  CHECK(feasible_hi == 5000);
}

TEST_CASE("xi witness is empty when q1 = p beta") {
  const ProblemDims<R> dims{4, R(2)};
  CHECK(xi_witness_origin(origin(R(0), R(0), R(1, 2), R(3)), R(1), dims).empty);
  CHECK(xi_witness_origin(origin(R(-1), R(1), R(3, 4), R(5)), R(3, 2), dims).empty);
}

TEST_CASE("xi witness matches the exact system pointwise") {
  std::mt19937_64 rng(99);
  auto rat = [&](int lo, int hi, int den) {
    return R(std::uniform_int_distribution<int>(lo * den, hi * den)(rng), den);
  };
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int N = std::uniform_int_distribution<int>(3, 6)(rng);
    const R p = R(std::uniform_int_distribution<int>(11, 10 * std::min(N, 4) - 1)(rng), 10);
    const ProblemDims<R> dims{N, p};
    R a = rat(-6, 4, 20);
    if (!(p - N < a) || p < a) continue;
    const R gamma = p - a + rat(0, 8, 20);
    if (gamma == p - a) continue;
    const R beta = rat(0, 1, 20), alpha = rat(-5, 5, 20), q = rat(1, 15, 20);
    const auto o = origin(a, alpha, beta, gamma);
    const auto w = xi_witness_origin(o, q, dims);
    CHECK(w.empty == !q1_region_membership(o, q, dims));
    const oracle::BasicOriginData<R> d{R(N), p, a, alpha, beta, gamma};
    std::vector<R> xs;
    for (int k = 0; k <= 40; ++k) xs.push_back((R(1) - beta) * k / 40);
    if (!w.empty) {
      xs.push_back(w.lo);
      xs.push_back(w.hi);
      xs.push_back((w.lo + w.hi) / 2);
    }
    for (const R& xi : xs) {
      const bool exact = !(xi < 0) && oracle::xi_system_holds(d, q, xi);
      CHECK(w.contains(xi) == exact);
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("infinity witness cases") {
  const ProblemDims<R> dims{4, R(2)};
  // alpha >= alpha1
  auto w = xi_witness_infinity(infinity(R(0), R(0), R(0), R(1)), R(20), dims);
  CHECK(w.case_id == InfinityCase::alpha_ge_alpha1);
  CHECK(w.xi == R(1));
  CHECK(w.beta_eff == R(1));
  // beta = 1, alpha <= 0
  w = xi_witness_infinity(infinity(R(0), R(-1), R(1), R(1)), R(20), dims);
  CHECK(w.case_id == InfinityCase::beta_one);
  CHECK(w.xi == R(0));
  // middle case: max(alpha2, alpha3) < alpha < alpha1 with gamma > 0
  w = xi_witness_infinity(infinity(R(0), R(-5, 2), R(0), R(2)), R(20), dims);
  CHECK(w.case_id == InfinityCase::middle);
  CHECK(w.xi == R(3, 4));
  CHECK(tail_decay_delta(infinity(R(0), R(-5, 2), R(0), R(2)), R(20), dims) < 0);
  // below max(alpha2, alpha3) with p beta < 1
  w = xi_witness_infinity(infinity(R(0), R(-7, 2), R(1, 4), R(2)), R(30), dims);
  CHECK(w.case_id == InfinityCase::beta_small);
  CHECK(w.xi == R(1, 4));
  CHECK(w.beta_eff == R(1, 2));
  CHECK_THROWS_AS(xi_witness_infinity(infinity(R(-1), R(0), R(0), R(3)), R(8), dims), NotAdmissible);
}

TEST_CASE("normalization leaves the critical exponents unchanged") {
  const ProblemDims<R> dims{5, R(3)};
  const R a(1), alpha(2, 3), beta(1, 4), gamma(-7, 2);
  const auto [ar, br] = normalization_reduce(alpha, beta, gamma);
  CHECK(br == 0);
  CHECK(q_star(alpha, beta, gamma, dims) == q_star(ar, br, gamma, dims));
  CHECK(q_double_star(a, alpha, beta, gamma, dims) == q_double_star(a, ar, br, gamma, dims));
}

TEST_CASE("float and exact evaluation agree") {
  const ProblemDims<double> d{4, 2.0};
  const auto c = critical_exponents(EndpointAsymptotics<double>{End::infinity, -1, 0, 0, 3, 1}, d);
  CHECK(*c.q_star == doctest::Approx(8).epsilon(1e-14));
  CHECK(*c.q_double_star == doctest::Approx(8).epsilon(1e-14));
  CHECK(pointwise_decay_exponent(EndpointAsymptotics<double>{End::infinity, -1, 0, 0, 3, 1}, d) ==
        doctest::Approx(0.5));
}
