#include "quasiradial/discrete_functional.hpp"
#include "quasiradial/radial_grid.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace quasiradial;

TEST_CASE("weights integrate the volume element") {
  for (int N : {3, 4, 5}) {
    const ProblemDims<double> dims{N, 2.0};
    const auto g = build_grid(1e-3, 1e2, 512, dims);
    const double exact = unit_sphere_area(N) * (std::pow(1e2, N) - std::pow(1e-3, N)) / N;
    CHECK(integrate(g, [](double) { return 1.0; }) == doctest::Approx(exact).epsilon(1e-6));
    // smooth integrand r^{-1}
    const double e2 = unit_sphere_area(N) * (std::pow(1e2, N - 1) - std::pow(1e-3, N - 1)) / (N - 1);
    CHECK(integrate(g, [](double r) { return 1 / r; }) == doctest::Approx(e2).epsilon(1e-4));
  }
  CHECK(unit_sphere_area(3) == doctest::Approx(4 * M_PI));
}

TEST_CASE("bad grids") {
  const ProblemDims<double> dims{3, 2.0};
  CHECK_THROWS_AS(build_grid(1, 1, 100, dims), BadRange);
  CHECK_THROWS_AS(build_grid(0, 1, 100, dims), BadRange);
  CHECK_THROWS_AS(build_grid(1e-2, 1, 8, dims), BadRange);
}

namespace {

struct Setup {
  RadialGrid grid;
  PotentialTable table;
  Setup(double p, int n)
      : grid(build_grid(1e-2, 1e2, n, ProblemDims<double>{4, p})),
        table(eval_potentials(PotentialSpec::power(1, -0.5), PotentialSpec::constant(1),
                              PotentialSpec::power(1, 0.25), grid.r)) {}
};

std::vector<double> bump(const DiscreteFunctional& F) {
  std::vector<double> u(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    const double s = std::log(F.grid().r[i]);
    u[i] = F.is_free(i) ? std::exp(-s * s / 4) : 0.0;
  }
  return u;
}

}  // namespace

TEST_CASE("gradient against central differences") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u01(0, 1);
  for (double p : {2.0, 2.5, 3.0}) {
    Setup s(p, 64);
    const DiscreteFunctional F(s.grid, s.table, NonlinearitySpec::rational(p + 1, p + 2));
    std::vector<double> u(F.size()), h(F.size());
    for (std::size_t i = 0; i < F.size(); ++i)
      if (F.is_free(i)) {
        u[i] = 0.1 + u01(rng);
        h[i] = u01(rng) - 0.5;
      }
    const auto g = F.gradient(u);
    double dot = 0;
    for (std::size_t i = 0; i < F.size(); ++i) dot += g[i] * h[i];
    auto E = [&](double t) {
      auto v = u;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += t * h[i];
      return F.energy(v);
    };
    CHECK((E(1e-5) - E(-1e-5)) / 2e-5 == doctest::Approx(dot).epsilon(1e-6));
  }
}

TEST_CASE("Nehari scaling") {
  for (double p : {2.0, 3.0}) {
    Setup s(p, 256);
    for (const auto& nl : {NonlinearitySpec::pure_power(p + 2), NonlinearitySpec::min_powers(p + 1, p + 3)}) {
      const DiscreteFunctional F(s.grid, s.table, nl);
      auto u = bump(F);
      const double t = F.nehari_scale(u);
      for (double& x : u) x *= t;
      CHECK(std::abs(F.nehari_value(u)) <= 1e-9 * F.norm_p(u));
      CHECK(F.energy(u) > 0);
    }
  }
  Setup s(2.0, 64);
  const DiscreteFunctional Z(s.grid, s.table, NonlinearitySpec::zero());
  CHECK_THROWS_AS(Z.nehari_scale(bump(Z)), NoProjection);
}

TEST_CASE("weak defect vanishes only at critical points") {
  Setup s(2.0, 128);
  const DiscreteFunctional F(s.grid, s.table, NonlinearitySpec::pure_power(4));
  const auto u = bump(F);
  CHECK(F.residual(u) > 1e-3);
  // for p = 2 the defect is exactly the gradient
  const auto g = F.gradient(u);
  const auto d = F.weak_defect(u);
  for (std::size_t i = 0; i < F.size(); ++i) CHECK(d[i] == doctest::Approx(g[i]).epsilon(1e-12));
}

TEST_CASE("overflowing weights pin nodes") {
  const ProblemDims<double> dims{4, 2.0};
  const auto grid = build_grid(1e-4, 1e2, 200, dims);
  const auto table = eval_potentials(PotentialSpec::constant(1), PotentialSpec::exponential_inv(1),
                                     PotentialSpec::constant(1), grid.r);
  const DiscreteFunctional F(grid, table, NonlinearitySpec::pure_power(4));
  CHECK_FALSE(F.is_free(0));
  CHECK(F.is_free(150));
  CHECK_FALSE(F.is_free(F.size() - 1));
}

TEST_CASE("table and grid must match") {
  const ProblemDims<double> dims{4, 2.0};
  const auto grid = build_grid(1e-2, 1e2, 64, dims);
  const auto other = eval_potentials(PotentialSpec::constant(1), PotentialSpec::constant(1),
                                     PotentialSpec::constant(1), build_grid(1e-2, 1e2, 65, dims).r);
  CHECK_THROWS_AS(DiscreteFunctional(grid, other, NonlinearitySpec::pure_power(4)), Error);
}
