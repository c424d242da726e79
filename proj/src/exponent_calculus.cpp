#include "quasiradial/exponent_calculus.hpp"

namespace quasiradial {

const char* to_string(OriginBranch branch) {
  switch (branch) {
    case OriginBranch::below_N: return "gamma_below_N";
    case OriginBranch::at_N: return "gamma_eq_N";
    case OriginBranch::between: return "gamma_between";
    case OriginBranch::at_critical: return "gamma_eq_critical";
    case OriginBranch::above_critical: return "gamma_above_critical";
  }
  return "?";
}

const char* to_string(InfinityCase c) {
  switch (c) {
    case InfinityCase::alpha_ge_alpha1: return "alpha_ge_alpha1";
    case InfinityCase::middle: return "middle";
    case InfinityCase::beta_one: return "beta_one";
    case InfinityCase::beta_between: return "beta_between";
    case InfinityCase::beta_small: return "beta_small";
  }
  return "?";
}

}  // namespace quasiradial
