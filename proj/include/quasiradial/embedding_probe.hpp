#pragma once

// Lower bounds for
//   S_0(q, R)   = sup_{||u|| = 1} int_{B_R}   K |u|^q
//   S_inf(q, R) = sup_{||u|| = 1} int_{B_R^c} K |u|^q
// from a finite family of windowed power profiles.

#include "quasiradial/potential_model.hpp"
#include "quasiradial/radial_grid.hpp"

#include <iosfwd>
#include <vector>

namespace quasiradial {

/// One profile min{1, (r/rho)^{-nu}} chi_rho(r), scaled to unit norm. The
/// window chi_rho is 1 within half a decade of rho and falls log-linearly to
/// 0 at rho/10 and 10 rho. Values are stored as logarithms.
struct TrialProfile {
  double nu;
  double rho;
  std::vector<double> log_values;
};

struct TrialFamily {
  RadialGrid grid;
  std::vector<TrialProfile> profiles;
};

struct ProbeSample {
  double R;
  double value;
  double log_value;
};

struct ProbeCurve {
  double q;
  End end;
  std::vector<ProbeSample> samples;
};

/// Exponents spread over [0.5 nu, 1.5 nu] (or [-0.5, 0.5] when nu is ~0).
std::vector<double> trial_exponents(double nu, int count = 16);

/// Centres on a half-decade lattice strictly inside the table range.
std::vector<double> trial_centres(const PotentialTable& table);

TrialFamily make_trial_family(const PotentialTable& table, const ProblemDims<double>& dims,
                              const std::vector<double>& nus, const std::vector<double>& centres);

/// log ||u||^p of a profile given by log values.
double log_norm_p(const TrialFamily& family, const PotentialTable& table, const std::vector<double>& log_u);

ProbeCurve probe_S0(const TrialFamily& family, const PotentialTable& table, double q,
                    const std::vector<double>& R_list);
ProbeCurve probe_Sinf(const TrialFamily& family, const PotentialTable& table, double q,
                      const std::vector<double>& R_list);

/// Family built from trial_exponents(nu) and trial_centres(table).
ProbeCurve probe_S0(const PotentialTable& table, const ProblemDims<double>& dims, double q, double nu,
                    const std::vector<double>& R_list);
ProbeCurve probe_Sinf(const PotentialTable& table, const ProblemDims<double>& dims, double q, double nu,
                      const std::vector<double>& R_list);

enum class Verdict { decays, stalls };

inline const char* to_string(Verdict v) { return v == Verdict::decays ? "decays" : "stalls"; }

/// Per-decade ratios between successive samples, ordered toward the end of
/// the curve (R decreasing at the origin, increasing at infinity).
std::vector<double> decade_ratios(const ProbeCurve& curve);

/// Decays iff every per-decade ratio is below the threshold; a step from 0
/// to 0 counts as decaying. Throws TooFewSamples below three samples.
Verdict decay_verdict(const ProbeCurve& curve, double threshold = 0.9);

/// CSV with header R,value.
void write_probe_csv(const ProbeCurve& curve, std::ostream& out);

}  // namespace quasiradial
