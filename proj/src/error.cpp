#include "resist/error.hpp"

namespace resist {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonPositiveResistance: return "NonPositiveResistance";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::IsolatedVertexSpecMismatch: return "IsolatedVertexSpecMismatch";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BadDepth: return "BadDepth";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::WitnessOutsideTruncation: return "WitnessOutsideTruncation";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::DominanceViolated: return "DominanceViolated";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::SolverDiverged: return "SolverDiverged";
    case ErrorCode::DisconnectedFromBoundary: return "DisconnectedFromBoundary";
    case ErrorCode::HostTooLarge: return "HostTooLarge";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::IncompleteBoundaryData: return "IncompleteBoundaryData";
    case ErrorCode::IncompleteBoundaryCondition: return "IncompleteBoundaryCondition";
    case ErrorCode::MethodCapExceeded: return "MethodCapExceeded";
    case ErrorCode::StepFailure: return "StepFailure";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace resist
