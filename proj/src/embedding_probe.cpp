#include "quasiradial/embedding_probe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace quasiradial {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct LogSum {
  double max = kNegInf;
  std::vector<double> terms;
  void add(double x) {
    if (x == kNegInf) return;
    terms.push_back(x);
    max = std::max(max, x);
  }
  double value() const {
    if (terms.empty()) return kNegInf;
    long double s = 0;
    for (double x : terms) s += std::exp(static_cast<long double>(x - max));
    return max + static_cast<double>(std::log(s));
  }
};

// log of the window times the power profile
double log_profile(double r, double nu, double rho) {
  const double x = std::log10(r / rho);
  const double ax = std::abs(x);
  if (ax >= 1) return kNegInf;
  double log_chi = 0;
  if (ax > 0.5) log_chi = std::log(2 * (1 - ax));
  const double log_power = x > 0 ? -nu * x * std::log(10.0) : 0.0;
  return log_chi + log_power;
}

ProbeCurve probe(const TrialFamily& family, const PotentialTable& table, double q,
                 const std::vector<double>& R_list, End end) {
  if (!(q > 1)) throw BadRange("probe exponent q must exceed 1");
  const auto& g = family.grid;
  std::vector<double> log_wk(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) log_wk[i] = std::log(g.weights[i]) + table.log_K[i];

  ProbeCurve curve{q, end, {}};
  for (double R : R_list) {
    double best = kNegInf;
    for (const auto& prof : family.profiles) {
      LogSum s;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const bool inside = end == End::origin ? g.r[i] <= R : g.r[i] >= R;
        if (!inside) continue;
        s.add(log_wk[i] + q * prof.log_values[i]);
      }
      best = std::max(best, s.value());
    }
    curve.samples.push_back({R, std::exp(best), best});
  }
  return curve;
}

}  // namespace

std::vector<double> trial_exponents(double nu, int count) {
  double lo = 0.5 * nu, hi = 1.5 * nu;
  if (std::abs(nu) < 1e-9) {
    lo = -0.5;
    hi = 0.5;
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = count == 1 ? nu : lo + (hi - lo) * k / (count - 1);
  return out;
}

std::vector<double> trial_centres(const PotentialTable& table) {
  std::vector<double> out;
  const double lo = table.radii.front(), hi = table.radii.back();
  const int k0 = static_cast<int>(std::floor(2 * std::log10(lo))) - 1;
  const int k1 = static_cast<int>(std::ceil(2 * std::log10(hi))) + 1;
  for (int k = k0; k <= k1; ++k) {
    const double rho = std::pow(10.0, 0.5 * k);
    if (rho / 10 >= lo * (1 - 1e-12) && rho * 10 <= hi * (1 + 1e-12)) out.push_back(rho);
  }
  return out;
}

double log_norm_p(const TrialFamily& family, const PotentialTable& table, const std::vector<double>& log_u) {
  const auto& g = family.grid;
  const double p = g.dims.p;
  LogSum s;
  for (std::size_t j = 0; j + 1 < g.size(); ++j) {
    const double a = log_u[j], b = log_u[j + 1];
    if (a == kNegInf && b == kNegInf) continue;
    // log |u_{j+1} - u_j|
    double log_diff;
    if (a == kNegInf)
      log_diff = b;
    else if (b == kNegInf)
      log_diff = a;
    else {
      const double hi = std::max(a, b), lo = std::min(a, b);
      const double m = -std::expm1(lo - hi);
      if (m == 0) continue;
      log_diff = hi + std::log(m);
    }
    const double log_slope = log_diff - std::log(g.r[j + 1] - g.r[j]);
    const double log_ca = std::log(g.cells[j]) + 0.5 * (table.log_A[j] + table.log_A[j + 1]);
    s.add(log_ca + p * log_slope);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (log_u[i] == kNegInf || table.log_V[i] == kNegInf) continue;
    s.add(std::log(g.weights[i]) + table.log_V[i] + p * log_u[i]);
  }
  return s.value();
}

TrialFamily make_trial_family(const PotentialTable& table, const ProblemDims<double>& dims,
                              const std::vector<double>& nus, const std::vector<double>& centres) {
  TrialFamily fam{grid_from_radii(table.radii, dims), {}};
  const auto& g = fam.grid;
  for (double rho : centres) {
    for (double nu : nus) {
      TrialProfile prof{nu, rho, std::vector<double>(g.size())};
      for (std::size_t i = 0; i < g.size(); ++i) prof.log_values[i] = log_profile(g.r[i], nu, rho);
      prof.log_values.back() = kNegInf;
      const double ln = log_norm_p(fam, table, prof.log_values);
      if (!std::isfinite(ln)) continue;
      for (double& v : prof.log_values) v -= ln / dims.p;
      fam.profiles.push_back(std::move(prof));
    }
  }
  return fam;
}

ProbeCurve probe_S0(const TrialFamily& family, const PotentialTable& table, double q,
                    const std::vector<double>& R_list) {
  return probe(family, table, q, R_list, End::origin);
}

ProbeCurve probe_Sinf(const TrialFamily& family, const PotentialTable& table, double q,
                      const std::vector<double>& R_list) {
  return probe(family, table, q, R_list, End::infinity);
}

ProbeCurve probe_S0(const PotentialTable& table, const ProblemDims<double>& dims, double q, double nu,
                    const std::vector<double>& R_list) {
  const auto fam = make_trial_family(table, dims, trial_exponents(nu), trial_centres(table));
  return probe_S0(fam, table, q, R_list);
}

ProbeCurve probe_Sinf(const PotentialTable& table, const ProblemDims<double>& dims, double q, double nu,
                      const std::vector<double>& R_list) {
  const auto fam = make_trial_family(table, dims, trial_exponents(nu), trial_centres(table));
  return probe_Sinf(fam, table, q, R_list);
}

std::vector<double> decade_ratios(const ProbeCurve& curve) {
  std::vector<ProbeSample> s = curve.samples;
  std::sort(s.begin(), s.end(), [&](const ProbeSample& a, const ProbeSample& b) {
    return curve.end == End::origin ? a.R > b.R : a.R < b.R;
  });
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const double decades = std::abs(std::log10(s[k + 1].R / s[k].R));
    const double a = s[k].log_value, b = s[k + 1].log_value;
    if (a == kNegInf && b == kNegInf) {
      out.push_back(0.0);
      continue;
    }
    out.push_back(std::exp((b - a) / decades));
  }
  return out;
}

Verdict decay_verdict(const ProbeCurve& curve, double threshold) {
  if (curve.samples.size() < 3) throw TooFewSamples("decay verdict needs at least three samples");
  for (double ratio : decade_ratios(curve))
    if (!(ratio < threshold)) return Verdict::stalls;
  return Verdict::decays;
}

void write_probe_csv(const ProbeCurve& curve, std::ostream& out) {
  out << "R,value\n";
  char buf[96];
  for (const auto& s : curve.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.R, s.value);
    out << buf;
  }
}

}  // namespace quasiradial
