#pragma once

#include <stdexcept>
#include <string>

namespace skillgeo {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes (input = 2, resource caps = 3, solver = 4).
enum class ErrorCode {
    malformed_spec,
    stochasticity_violation,
    non_convergent,
    too_large,
    degenerate_complement,
    infeasible,
    not_misl_solution,
    all_discovered,
    degenerate_weight,
    too_few_samples,
    dimension_mismatch,
    invalid_argument,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::malformed_spec: return "MalformedSpec";
    case ErrorCode::stochasticity_violation: return "StochasticityViolation";
    case ErrorCode::non_convergent: return "NonConvergent";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::degenerate_complement: return "DegenerateComplement";
    case ErrorCode::infeasible: return "Infeasible";
    case ErrorCode::not_misl_solution: return "NotMislSolution";
    case ErrorCode::all_discovered: return "AllDiscovered";
    case ErrorCode::degenerate_weight: return "DegenerateWeight";
    case ErrorCode::too_few_samples: return "TooFewSamples";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace skillgeo
