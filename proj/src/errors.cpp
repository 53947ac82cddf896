#include "convex_smooth/errors.hpp"

namespace convex_smooth {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_epsilon: return "InvalidEpsilon";
    case ErrorCode::domain_mismatch: return "DomainMismatch";
    case ErrorCode::empty_list: return "EmptyList";
    case ErrorCode::empty_domain: return "EmptyDomain";
    case ErrorCode::empty_grid: return "EmptyGrid";
    case ErrorCode::domain_too_small: return "DomainTooSmall";
    case ErrorCode::unbounded_below: return "UnboundedBelow";
    case ErrorCode::lipschitz_too_small: return "LipschitzTooSmall";
    case ErrorCode::no_independent_probe: return "NoIndependentProbe";
    case ErrorCode::gradients_unavailable: return "GradientsUnavailable";
    case ErrorCode::inconclusive_coercivity: return "InconclusiveCoercivity";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::rank_deficient: return "RankDeficient";
    case ErrorCode::stage_failure: return "StageFailure";
    case ErrorCode::not_properly_convex: return "NotProperlyConvex";
    case ErrorCode::schedule_infeasible: return "ScheduleInfeasible";
    case ErrorCode::sublevel_not_compact: return "SublevelNotCompact";
    case ErrorCode::degenerate_body: return "DegenerateBody";
    case ErrorCode::degenerate_sublevel: return "DegenerateSublevel";
    case ErrorCode::spec_parse: return "SpecParse";
    case ErrorCode::pipeline_error: return "PipelineError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace convex_smooth
