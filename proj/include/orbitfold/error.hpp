#pragma once

#include <stdexcept>
#include <string>

namespace orbitfold {

enum class errc {
  not_gcm,
  not_symmetrizable,
  not_automorphism,
  linking_condition_violated,
  not_symmetric_weight,
  step_budget_exceeded,
  depth_insufficient,
  negative_multiplicity,
  non_integral_fusion,
  unsupported_algebra,
  bad_input,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_gcm: return "NotGCM";
    case errc::not_symmetrizable: return "NotSymmetrizable";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::linking_condition_violated: return "LinkingConditionViolated";
    case errc::not_symmetric_weight: return "NotSymmetricWeight";
    case errc::step_budget_exceeded: return "StepBudgetExceeded";
    case errc::depth_insufficient: return "DepthInsufficient";
    case errc::negative_multiplicity: return "NegativeMultiplicity";
    case errc::non_integral_fusion: return "NonIntegralFusion";
    case errc::unsupported_algebra: return "UnsupportedAlgebra";
    case errc::bad_input: return "BadInput";
    case errc::internal: return "InternalError";
  }
  return "InternalError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace orbitfold
