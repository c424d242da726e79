#include "quasiradial/commands.hpp"
#include "quasiradial/config.hpp"
#include "quasiradial/embedding_probe.hpp"
#include "quasiradial/radial_solver.hpp"

#include "../oracles/shooting.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace quasiradial;

namespace {

std::shared_ptr<const RadialGrid> grid_for(double lo, double hi, int n, ProblemDims<double> dims) {
  return std::make_shared<const RadialGrid>(build_grid(lo, hi, n, dims));
}

}  // namespace

TEST_CASE("shooting oracle") {
  // known value for the cubic ground state in three dimensions
  CHECK(oracle::cubic_ground_state_u0() == doctest::Approx(4.3374).epsilon(1e-3));
}

TEST_CASE("cubic ground state on a coarse grid") {
  const auto g = grid_for(1e-3, 1e3, 600, {3, 2.0});
  const auto one = PotentialSpec::constant(1);
  const auto t = eval_potentials(one, one, one, g->r);
  const auto [u, rep] = solve_ground_state(t, NonlinearitySpec::pure_power(4), g, {});
  CHECK(rep.converged);
  CHECK(rep.residual <= 1e-6);
  CHECK(u.values.front() == doctest::Approx(oracle::cubic_ground_state_u0()).epsilon(0.01));
  CHECK(rep.u_min >= 0);
  CHECK(rep.decay_slope_infinity < -1);
}

TEST_CASE("p = 3 ground state converges") {
  const auto g = grid_for(1e-3, 1e3, 600, {4, 3.0});
  const auto one = PotentialSpec::constant(1);
  const auto t = eval_potentials(one, one, one, g->r);
  const auto [u, rep] = solve_ground_state(t, NonlinearitySpec::min_powers(4, 5), g, {});
  CHECK(rep.converged);
  CHECK(rep.u_max > 0);
}

TEST_CASE("zero nonlinearity collapses") {
  const auto g = grid_for(1e-2, 1e2, 100, {3, 2.0});
  const auto one = PotentialSpec::constant(1);
  const auto t = eval_potentials(one, one, one, g->r);
  CHECK_THROWS_AS(solve_ground_state(t, NonlinearitySpec::zero(4), g, {}), CollapsedToZero);
}

TEST_CASE("iteration cap reports no convergence") {
  const auto g = grid_for(1e-3, 1e3, 400, {3, 2.0});
  const auto one = PotentialSpec::constant(1);
  const auto t = eval_potentials(one, one, one, g->r);
  SolveOptions o;
  o.max_iter = 1;
  try {
    solve_ground_state(t, NonlinearitySpec::pure_power(4), g, o);
    FAIL("expected NotConverged");
  } catch (const NotConverged& e) {
    CHECK(e.report().residual > o.tol);
  }
}

TEST_CASE("decay slopes of an exact power") {
  const auto g = grid_for(1e-2, 1e2, 200, {3, 2.0});
  RadialFunction u{g, std::vector<double>(g->size())};
  for (std::size_t i = 0; i < g->size(); ++i) u.values[i] = std::pow(g->r[i], -1.5);
  const auto [s0, s1] = decay_slopes(u);
  CHECK(s0 == doctest::Approx(-1.5));
  CHECK(s1 == doctest::Approx(-1.5));
}

TEST_CASE("trial exponents and centres") {
  const auto nus = trial_exponents(0.5);
  CHECK(nus.size() == 16);
  CHECK(nus.front() == doctest::Approx(0.25));
  CHECK(nus.back() == doctest::Approx(0.75));
  CHECK(trial_exponents(0).front() == doctest::Approx(-0.5));
  const auto t = eval_potentials(PotentialSpec::constant(1), PotentialSpec::constant(1),
                                 PotentialSpec::constant(1), log_spaced_radii(1e-3, 1e3, 16));
  const auto cs = trial_centres(t);
  CHECK(cs.front() == doctest::Approx(1e-2));
  CHECK(cs.back() == doctest::Approx(1e2));
  CHECK(cs.size() == 9);
}

TEST_CASE("probe verdicts for the first example") {
  const RunConfig c = parse_config(example_config("ex1"));
  const auto t = eval_potentials(*c.potentials, log_spaced_radii(1e-6, 1e6, 128));
  const auto dims = c.dims();
  const double nu = to_double(pointwise_decay_exponent(c.infinity_exact, c.dims_exact));
  // above the threshold 8 the tail constant decays, below it it does not
  CHECK(decay_verdict(probe_Sinf(t, dims, 9, nu, {10, 100, 1000})) == Verdict::decays);
  CHECK(decay_verdict(probe_Sinf(t, dims, 7, nu, {10, 100, 1000})) == Verdict::stalls);
  CHECK_THROWS_AS(decay_verdict(probe_Sinf(t, dims, 9, nu, {10, 100})), TooFewSamples);
}

TEST_CASE("decade ratios") {
  ProbeCurve c{3, End::infinity, {{100, 0.01, std::log(0.01)}, {10, 0.1, std::log(0.1)}, {1000, 0.001, std::log(0.001)}}};
  const auto r = decade_ratios(c);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(0.1));
  CHECK(r[1] == doctest::Approx(0.1));
  std::ostringstream os;
  write_probe_csv(c, os);
  CHECK(os.str().rfind("R,value\n", 0) == 0);
}
