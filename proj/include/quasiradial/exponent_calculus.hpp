#pragma once

// Critical exponents, admissible regions and the xi-witness systems for the
// radial quasilinear problem
//
//   -div(A(|x|)|grad u|^{p-2} grad u) + V(|x|)|u|^{p-2}u = K(|x|) f(u).
//
// Every routine is a template over the scalar type. Instantiate with
// quasiradial::Rational for exact answers (all formulas are rational in their
// inputs) or with double / long double for speed.

#include "quasiradial/errors.hpp"
#include "quasiradial/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace quasiradial {

enum class End { origin, infinity };

inline const char* to_string(End end) { return end == End::origin ? "origin" : "infinity"; }

template <typename T>
struct ProblemDims {
  int N = 3;
  T p = T(2);

  void validate() const {
    if (N < 3) throw InvalidDims("dimension N must be at least 3");
    if (!(p > T(1)) || !(p < T(N))) throw InvalidDims("quasilinearity p must satisfy 1 < p < N");
  }

  /// pN/(N+a-p), the Sobolev-type exponent attached to the weight r^a.
  T sobolev_exponent(const T& a) const { return p * T(N) / (T(N) + a - p); }

  /// (p(N-1)+a)/(p-1): the value of gamma at which q** is undefined.
  T critical_gamma(const T& a) const { return (p * T(N - 1) + a) / (p - T(1)); }
};

/// Asymptotic data of the potentials at one end of (0, inf).
///   A(r) ~ r^a,  K(r) <= C r^alpha V(r)^beta,  V(r) >= c r^{-gamma}
/// for r < R (origin) or r > R (infinity).
template <typename T>
struct EndpointAsymptotics {
  End end = End::infinity;
  T a = T(0);
  T alpha = T(0);
  T beta = T(0);
  T gamma = T(0);
  T R = T(1);
};

template <typename T>
struct AlphaTriplet {
  T alpha1;
  T alpha2;
  T alpha3;
};

template <typename T>
struct CriticalExponents {
  std::optional<T> q_star;         // undefined when gamma == N
  std::optional<T> q_double_star;  // undefined when gamma == critical_gamma(a)
  T alpha1;
  T alpha2;
  T alpha3;
  std::optional<T> p_sobolev;  // undefined when a = p - N
};

/// Position of gamma_0 relative to N and (p(N-1)+a)/(p-1); one branch per
/// line of the definition of the admissible region.
enum class OriginBranch { below_N, at_N, between, at_critical, above_critical };

const char* to_string(OriginBranch branch);

enum class AlphaConstraintKind { alpha_gt_alpha2, alpha_gt_alpha1 };

inline const char* to_string(AlphaConstraintKind kind) {
  return kind == AlphaConstraintKind::alpha_gt_alpha2 ? "alpha_gt_alpha2" : "alpha_gt_alpha1";
}

template <typename T>
struct AlphaConstraint {
  AlphaConstraintKind kind;
  T bound;  // alpha must be strictly greater than this
  bool satisfied;
};

/// Open interval of exponents q with (alpha_0, q) in the admissible region.
template <typename T>
struct AdmissibleSet {
  T lower;
  std::optional<T> upper;  // empty optional means +infinity
  std::optional<AlphaConstraint<T>> alpha_constraint;
  OriginBranch branch = OriginBranch::below_N;

  bool empty() const {
    if (alpha_constraint && !alpha_constraint->satisfied) return true;
    return upper && !(lower < *upper);
  }

  bool contains(const T& q) const {
    if (empty()) return false;
    return lower < q && (!upper || q < *upper);
  }
};

/// Feasible set of the parameter xi in one of the origin witness systems.
template <typename T>
struct WitnessInterval {
  T lo;
  T hi;
  bool closed_lo = true;
  bool closed_hi = true;
  bool empty = true;
  OriginBranch branch = OriginBranch::below_N;

  bool contains(const T& xi) const {
    if (empty) return false;
    const bool above = closed_lo ? !(xi < lo) : lo < xi;
    const bool below = closed_hi ? !(hi < xi) : xi < hi;
    return above && below;
  }
};

enum class InfinityCase { alpha_ge_alpha1, middle, beta_one, beta_between, beta_small };

const char* to_string(InfinityCase c);

template <typename T>
struct InfinityWitness {
  T xi;
  T alpha_eff;
  T beta_eff;
  InfinityCase case_id;
};

namespace detail {

template <typename T>
T max_of(std::initializer_list<T> values) {
  return std::max(values);
}

template <typename T>
T min_of(std::initializer_list<T> values) {
  return std::min(values);
}

template <typename T>
std::string str(const T& x) {
  std::ostringstream os;
  os << to_double(x);
  return os.str();
}

}  // namespace detail

template <typename T>
void validate(const EndpointAsymptotics<T>& asym, const ProblemDims<T>& dims) {
  try {
    dims.validate();
  } catch (const InvalidDims& e) {
    throw InvalidAsymptotics(e.what());
  }
  const T& p = dims.p;
  const T N(dims.N);
  const std::string where = std::string(" at ") + to_string(asym.end);
  if (!(p - N < asym.a) || p < asym.a)
    throw InvalidAsymptotics("exponent a=" + detail::str(asym.a) + " outside (p-N, p]" + where);
  if (asym.beta < T(0) || T(1) < asym.beta)
    throw InvalidAsymptotics("beta=" + detail::str(asym.beta) + " outside [0, 1]" + where);
  if (!(T(0) < asym.R)) throw InvalidAsymptotics("threshold radius must be positive" + where);
  if (asym.end == End::origin && asym.gamma < p - asym.a)
    throw InvalidAsymptotics("gamma_0 must satisfy gamma_0 >= p - a_0");
  if (asym.end == End::infinity && p - asym.a < asym.gamma)
    throw InvalidAsymptotics("gamma_inf must satisfy gamma_inf <= p - a_inf");
}

/// q* = p(alpha - gamma beta + N)/(N - gamma).
template <typename T>
T q_star(const T& alpha, const T& beta, const T& gamma, const ProblemDims<T>& dims) {
  const T N(dims.N);
  if (gamma == N) throw GammaSingular("q* is undefined for gamma = N");
  return dims.p * (alpha - gamma * beta + N) / (N - gamma);
}

/// q** = p(p alpha + (1 - p beta) gamma + p(N-1) + a)/(p(N-1) - gamma(p-1) + a).
template <typename T>
T q_double_star(const T& a, const T& alpha, const T& beta, const T& gamma,
                const ProblemDims<T>& dims) {
  const T& p = dims.p;
  const T denominator = p * T(dims.N - 1) - gamma * (p - T(1)) + a;
  if (denominator == T(0)) throw GammaSingular("q** is undefined for gamma = (p(N-1)+a)/(p-1)");
  return p * (p * alpha + (T(1) - p * beta) * gamma + p * T(dims.N - 1) + a) / denominator;
}

template <typename T>
AlphaTriplet<T> alpha_triplet(const T& beta, const T& gamma, const ProblemDims<T>& dims) {
  const T& p = dims.p;
  const T N(dims.N);
  return {-(T(1) - beta) * gamma, -(T(1) - beta) * N,
          -((p - T(1)) * N + (T(1) - p * beta) * gamma) / p};
}

template <typename T>
CriticalExponents<T> critical_exponents(const EndpointAsymptotics<T>& asym,
                                        const ProblemDims<T>& dims) {
  CriticalExponents<T> out{};
  if (asym.gamma != T(dims.N)) out.q_star = q_star(asym.alpha, asym.beta, asym.gamma, dims);
  if (asym.gamma != dims.critical_gamma(asym.a))
    out.q_double_star = q_double_star(asym.a, asym.alpha, asym.beta, asym.gamma, dims);
  const auto triplet = alpha_triplet(asym.beta, asym.gamma, dims);
  out.alpha1 = triplet.alpha1;
  out.alpha2 = triplet.alpha2;
  out.alpha3 = triplet.alpha3;
  if (T(dims.N) + asym.a - dims.p != T(0)) out.p_sobolev = dims.sobolev_exponent(asym.a);
  return out;
}

/// (alpha, beta) -> (alpha - beta gamma, 0); leaves q* and q** unchanged.
template <typename T>
std::pair<T, T> normalization_reduce(const T& alpha, const T& beta, const T& gamma) {
  return {alpha - beta * gamma, T(0)};
}

/// Exponent nu of the pointwise bound |u(x)| <= m ||u|| |x|^{-nu} obtained
/// from the essinf condition on V at this end:
/// nu = (p(N-1) - (p-1) gamma + a)/p^2.
template <typename T>
T pointwise_decay_exponent(const EndpointAsymptotics<T>& asym, const ProblemDims<T>& dims) {
  const T& p = dims.p;
  return (p * T(dims.N - 1) - (p - T(1)) * asym.gamma + asym.a) / (p * p);
}

/// (N + a - p)/p, the decay exponent available from A alone.
template <typename T>
T basic_decay_exponent(const T& a, const ProblemDims<T>& dims) {
  return (T(dims.N) + a - dims.p) / dims.p;
}

// ---------------------------------------------------------------------------
// Behaviour at infinity

/// Any q2 strictly above the returned value gives S_inf(q2, R) -> 0.
template <typename T>
T q2_lower_bound(const EndpointAsymptotics<T>& asym, const ProblemDims<T>& dims) {
  if (asym.end != End::infinity) throw InvalidAsymptotics("q2_lower_bound needs data at infinity");
  validate(asym, dims);
  const T qs = q_star(asym.alpha, asym.beta, asym.gamma, dims);
  const T qss = q_double_star(asym.a, asym.alpha, asym.beta, asym.gamma, dims);
  return detail::max_of<T>({T(1), dims.p * asym.beta, qs, qss});
}

/// The choice of xi that makes the sum-space bound at infinity decay, with
/// the resulting effective exponents alpha + xi gamma and beta + xi.
template <typename T>
InfinityWitness<T> xi_witness_infinity(const EndpointAsymptotics<T>& asym, const T& q2,
                                       const ProblemDims<T>& dims) {
  const T bound = q2_lower_bound(asym, dims);
  if (!(bound < q2))
    throw NotAdmissible("q2 = " + detail::str(q2) + " is not above the threshold " +
                        detail::str(bound));
  const T& p = dims.p;
  const T N(dims.N);
  const T& alpha = asym.alpha;
  const T& beta = asym.beta;
  const T& gamma = asym.gamma;
  const auto [alpha1, alpha2, alpha3] = alpha_triplet(beta, gamma, dims);

  T xi;
  InfinityCase id;
  if (!(alpha < alpha1)) {
    xi = T(1) - beta;
    id = InfinityCase::alpha_ge_alpha1;
  } else if (std::max(alpha2, alpha3) < alpha) {
    xi = (alpha + (T(1) - beta) * N) / (N - gamma);
    id = InfinityCase::middle;
  } else if (beta == T(1)) {
    xi = T(0);
    id = InfinityCase::beta_one;
  } else if (T(1) < p * beta) {
    xi = T(0);
    id = InfinityCase::beta_between;
  } else {
    xi = (T(1) - p * beta) / p;
    id = InfinityCase::beta_small;
  }
  return {xi, alpha + xi * gamma, beta + xi, id};
}

/// Exponent delta < 0 in the tail bound  int_{|x|>R} K|u|^{q2} <= C R^delta.
template <typename T>
T tail_decay_delta(const EndpointAsymptotics<T>& asym, const T& q2, const ProblemDims<T>& dims) {
  const auto w = xi_witness_infinity(asym, q2, dims);
  const T nu = pointwise_decay_exponent(asym, dims);
  const T& p = dims.p;
  const T N(dims.N);
  switch (w.case_id) {
    case InfinityCase::alpha_ge_alpha1:
    case InfinityCase::beta_one:
      // beta_eff = 1: weighted L^p piece of the norm absorbs the V factor
      return w.alpha_eff - nu * (q2 - p);
    case InfinityCase::middle:
    case InfinityCase::beta_between:
      return w.alpha_eff - nu * (q2 - p * w.beta_eff) + N * (T(1) - w.beta_eff);
    case InfinityCase::beta_small:
      return w.alpha_eff - nu * (q2 - T(1)) + N * (p - T(1)) / p;
  }
  return T(0);
}

// ---------------------------------------------------------------------------
// Behaviour at the origin

template <typename T>
OriginBranch origin_branch(const EndpointAsymptotics<T>& asym, const ProblemDims<T>& dims) {
  const T N(dims.N);
  const T critical = dims.critical_gamma(asym.a);
  if (asym.gamma < N) return OriginBranch::below_N;
  if (asym.gamma == N) return OriginBranch::at_N;
  if (asym.gamma < critical) return OriginBranch::between;
  if (asym.gamma == critical) return OriginBranch::at_critical;
  return OriginBranch::above_critical;
}

/// Membership with the branch supplied by the caller, for evaluating many
/// alpha or q values in floating point after an exact branch dispatch.
template <typename T>
bool q1_region_membership_in_branch(const EndpointAsymptotics<T>& asym, const T& q,
                                    const ProblemDims<T>& dims, OriginBranch branch) {
  const T& p = dims.p;
  const T N(dims.N);
  const T& a = asym.a;
  const T& alpha = asym.alpha;
  const T& beta = asym.beta;
  const T& gamma = asym.gamma;
  const T floor = std::max(T(1), p * beta);
  if (!(floor < q)) return false;

  switch (branch) {
    case OriginBranch::below_N:
      return q < q_star(alpha, beta, gamma, dims) && q < q_double_star(a, alpha, beta, gamma, dims);
    case OriginBranch::at_N:
      return q < q_double_star(a, alpha, beta, gamma, dims) && -(T(1) - beta) * N < alpha;
    case OriginBranch::between:
      return q_star(alpha, beta, gamma, dims) < q && q < q_double_star(a, alpha, beta, gamma, dims);
    case OriginBranch::at_critical:
      return q_star(alpha, beta, gamma, dims) < q && -(T(1) - beta) * gamma < alpha;
    case OriginBranch::above_critical:
      return q_star(alpha, beta, gamma, dims) < q && q_double_star(a, alpha, beta, gamma, dims) < q;
  }
  return false;
}

/// True iff (alpha_0, q) lies in the admissible region for (a_0, beta_0, gamma_0).
template <typename T>
bool q1_region_membership(const EndpointAsymptotics<T>& asym, const T& q, const ProblemDims<T>& dims) {
  if (asym.end != End::origin) throw InvalidAsymptotics("region membership needs data at the origin");
  validate(asym, dims);
  return q1_region_membership_in_branch(asym, q, dims, origin_branch(asym, dims));
}

/// Slice of the admissible region at the configured alpha_0.
template <typename T>
AdmissibleSet<T> q1_admissible_set(const EndpointAsymptotics<T>& asym, const ProblemDims<T>& dims) {
  if (asym.end != End::origin) throw InvalidAsymptotics("admissible set needs data at the origin");
  validate(asym, dims);
  const T& p = dims.p;
  const T N(dims.N);
  const T& a = asym.a;
  const T& alpha = asym.alpha;
  const T& beta = asym.beta;
  const T& gamma = asym.gamma;
  const T floor = std::max(T(1), p * beta);

  AdmissibleSet<T> set{floor, std::nullopt, std::nullopt, origin_branch(asym, dims)};
  switch (set.branch) {
    case OriginBranch::below_N:
      set.upper = std::min(q_star(alpha, beta, gamma, dims), q_double_star(a, alpha, beta, gamma, dims));
      break;
    case OriginBranch::at_N: {
      set.upper = q_double_star(a, alpha, beta, gamma, dims);
      const T bound = -(T(1) - beta) * N;
      set.alpha_constraint = AlphaConstraint<T>{AlphaConstraintKind::alpha_gt_alpha2, bound, bound < alpha};
      break;
    }
    case OriginBranch::between:
      set.lower = std::max(floor, q_star(alpha, beta, gamma, dims));
      set.upper = q_double_star(a, alpha, beta, gamma, dims);
      break;
    case OriginBranch::at_critical: {
      set.lower = std::max(floor, q_star(alpha, beta, gamma, dims));
      const T bound = -(T(1) - beta) * gamma;
      set.alpha_constraint = AlphaConstraint<T>{AlphaConstraintKind::alpha_gt_alpha1, bound, bound < alpha};
      break;
    }
    case OriginBranch::above_critical:
      set.lower = detail::max_of<T>(
          {floor, q_star(alpha, beta, gamma, dims), q_double_star(a, alpha, beta, gamma, dims)});
      break;
  }
  return set;
}

/// Exact feasible set of xi >= 0 for which alpha_0 + xi gamma_0 and
/// beta_0 + xi satisfy the hypotheses of the small-ball estimate with q = q1:
///
///   max{0, (1 - p beta)/p} <= xi <= 1 - beta,
///   xi < (q1 - p beta)/p,
///   D q1 < p^2(alpha + xi gamma + N) - p(beta + xi)((p-1)gamma + p - a),
///
/// with D = p(N-1) - (p-1)gamma + a. The last line is affine in xi with slope
/// p(gamma - p + a) > 0, which is why gamma_0 = p - a_0 has no system.
template <typename T>
WitnessInterval<T> xi_witness_origin(const EndpointAsymptotics<T>& asym, const T& q1,
                                     const ProblemDims<T>& dims) {
  if (asym.end != End::origin) throw InvalidAsymptotics("origin witness needs data at the origin");
  validate(asym, dims);
  const T& p = dims.p;
  const T N(dims.N);
  const T& a = asym.a;
  const T& alpha = asym.alpha;
  const T& beta = asym.beta;
  const T& gamma = asym.gamma;
  const T gap = gamma - p + a;
  if (gap == T(0)) throw BoundaryCase("gamma_0 = p - a_0 has no xi system");

  const T D = p * T(dims.N - 1) - (p - T(1)) * gamma + a;
  const T free_term = p * p * (alpha + N) - p * beta * ((p - T(1)) * gamma + p - a);
  const T affine_lo = (D * q1 - free_term) / (p * gap);  // strict
  const T box_lo = std::max(T(0), (T(1) - p * beta) / p);
  const T box_hi = T(1) - beta;
  const T power_hi = (q1 - p * beta) / p;  // strict

  WitnessInterval<T> w;
  w.branch = origin_branch(asym, dims);
  if (box_lo < affine_lo) {
    w.lo = affine_lo;
    w.closed_lo = false;
  } else {
    w.lo = box_lo;
    w.closed_lo = !(affine_lo == box_lo);
  }
  if (power_hi < box_hi || power_hi == box_hi) {
    w.hi = power_hi;
    w.closed_hi = false;
  } else {
    w.hi = box_hi;
    w.closed_hi = true;
  }
  // a closed box endpoint that is infeasible for the strict line becomes open
  if (w.closed_hi && !(affine_lo < w.hi)) w.closed_hi = false;

  if (w.hi < w.lo)
    w.empty = true;
  else if (w.hi == w.lo)
    w.empty = !(w.closed_lo && w.closed_hi);
  else
    w.empty = false;
  return w;
}

}  // namespace quasiradial
