#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resist {

enum class ErrorCode {
  UnknownVertex,
  DuplicateEdge,
  SelfLoop,
  NonPositiveResistance,
  NonPositiveWeight,
  IsolatedVertexSpecMismatch,
  BadSpec,
  BadDepth,
  Disconnected,
  EdgeNotInGraph,
  WitnessOutsideTruncation,
  NotSeparable,
  DominanceViolated,
  DomainMismatch,
  SolverDiverged,
  DisconnectedFromBoundary,
  HostTooLarge,
  NotAChain,
  IncompleteBoundaryData,
  IncompleteBoundaryCondition,
  MethodCapExceeded,
  StepFailure,
  CheckFailed,
  BoundViolated,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace resist
