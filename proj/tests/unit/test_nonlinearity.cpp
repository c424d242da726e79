#include "quasiradial/errors.hpp"
#include "quasiradial/nonlinearity.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace quasiradial;

namespace {

std::vector<double> samples() {
  std::vector<double> t;
  for (int k = -60; k <= 60; ++k) t.push_back(std::pow(10.0, k / 10.0));
  return t;
}

// Simpson on [0, t] with many panels, for the primitive of f.
double primitive(const NonlinearitySpec& nl, double t) {
  const int n = 20000;
  const double h = t / n;
  double s = f_eval(nl, 0) + f_eval(nl, t);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f_eval(nl, i * h);
  return s * h / 3;
}

}  // namespace

TEST_CASE("min of powers") {
  const auto nl = NonlinearitySpec::min_powers(3, 5);
  CHECK(f_eval(nl, 0.5) == doctest::Approx(std::pow(0.5, 4)));
  CHECK(f_eval(nl, 2) == doctest::Approx(4));
  CHECK(f_eval(nl, -2) == doctest::Approx(-4));
  CHECK(f_solver(nl, -2) == 0);
  CHECK(F_eval(nl, 2) == doctest::Approx(primitive(nl, 2)).epsilon(1e-8));
  CHECK(F_eval(nl, 0.7) == doctest::Approx(primitive(nl, 0.7)).epsilon(1e-8));
  CHECK(check_AR(nl, samples()));
  CHECK(check_growth(nl, samples()));
}

TEST_CASE("rational nonlinearity") {
  const auto nl = NonlinearitySpec::rational(3, 6);
  for (double t : {0.1, 0.9, 1.0, 1.7, 5.0}) CHECK(F_eval(nl, t) == doctest::Approx(primitive(nl, t)).epsilon(1e-8));
  CHECK(check_AR(nl, samples()));
  CHECK(check_growth(nl, samples()));
  CHECK(F_eval(nl, -1.5) == doctest::Approx(F_eval(nl, 1.5)));
}

TEST_CASE("pure power") {
  const auto nl = NonlinearitySpec::pure_power(4);
  CHECK(F_eval(nl, 2) == doctest::Approx(4));
  const auto h = nl.homogeneous();
  REQUIRE(h);
  CHECK(h->second == 4);
  CHECK(check_AR(nl, samples()));
}

TEST_CASE("AR condition fails for theta above the smaller exponent") {
  auto nl = NonlinearitySpec::min_powers(3, 5);
  nl.theta = 3.5;
  CHECK_FALSE(check_AR(nl, samples()));
}

TEST_CASE("growth fails when M is too small") {
  auto nl = NonlinearitySpec::min_powers(3, 5);
  nl.M = 0.5;
  CHECK_FALSE(check_growth(nl, samples()));
}

TEST_CASE("zero nonlinearity and json") {
  const auto z = NonlinearitySpec::zero(3);
  CHECK(z.is_zero());
  CHECK(f_eval(z, 2) == 0);
  const auto back = nonlinearity_from_json(to_json(NonlinearitySpec::min_powers(3, 7)));
  CHECK(back.kind == NonlinearitySpec::Kind::min_powers);
  CHECK(back.q1 == 3);
  CHECK(back.q2 == 7);
  CHECK(nonlinearity_from_json(nlohmann::json{{"kind", "zero"}}).is_zero());
  CHECK_THROWS_AS(nonlinearity_from_json(nlohmann::json{{"kind", "min_powers"}, {"q1", 0.5}, {"q2", 3}}),
                  Error);
}
