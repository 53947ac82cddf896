#ifndef CONVEX_SMOOTH_ERRORS_HPP
#define CONVEX_SMOOTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace convex_smooth {

enum class ErrorCode {
  invalid_epsilon,
  domain_mismatch,
  empty_list,
  empty_domain,
  empty_grid,
  domain_too_small,
  unbounded_below,
  lipschitz_too_small,
  no_independent_probe,
  gradients_unavailable,
  inconclusive_coercivity,
  budget_exceeded,
  rank_deficient,
  stage_failure,
  not_properly_convex,
  schedule_infeasible,
  sublevel_not_compact,
  degenerate_body,
  degenerate_sublevel,
  spec_parse,
  pipeline_error,
  io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidEpsilon : Error {
  explicit InvalidEpsilon(const std::string& w) : Error(ErrorCode::invalid_epsilon, w) {}
};
struct DomainMismatch : Error {
  explicit DomainMismatch(const std::string& w) : Error(ErrorCode::domain_mismatch, w) {}
};
struct EmptyList : Error {
  explicit EmptyList(const std::string& w) : Error(ErrorCode::empty_list, w) {}
};
struct EmptyDomain : Error {
  explicit EmptyDomain(const std::string& w) : Error(ErrorCode::empty_domain, w) {}
};
struct EmptyGrid : Error {
  explicit EmptyGrid(const std::string& w) : Error(ErrorCode::empty_grid, w) {}
};
struct DomainTooSmall : Error {
  explicit DomainTooSmall(const std::string& w) : Error(ErrorCode::domain_too_small, w) {}
};
struct UnboundedBelow : Error {
  explicit UnboundedBelow(const std::string& w) : Error(ErrorCode::unbounded_below, w) {}
};
struct LipschitzTooSmall : Error {
  explicit LipschitzTooSmall(const std::string& w) : Error(ErrorCode::lipschitz_too_small, w) {}
};
struct NoIndependentProbe : Error {
  explicit NoIndependentProbe(const std::string& w) : Error(ErrorCode::no_independent_probe, w) {}
};
struct GradientsUnavailable : Error {
  explicit GradientsUnavailable(const std::string& w) : Error(ErrorCode::gradients_unavailable, w) {}
};
struct InconclusiveCoercivity : Error {
  explicit InconclusiveCoercivity(const std::string& w) : Error(ErrorCode::inconclusive_coercivity, w) {}
};
struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& w, double worst_residual)
      : Error(ErrorCode::budget_exceeded, w), worst_residual(worst_residual) {}
  double worst_residual;
};
struct RankDeficient : Error {
  explicit RankDeficient(const std::string& w) : Error(ErrorCode::rank_deficient, w) {}
};
struct StageFailure : Error {
  StageFailure(int stage, double residual, const std::string& w)
      : Error(ErrorCode::stage_failure, "stage " + std::to_string(stage) + ": " + w),
        stage(stage),
        residual(residual) {}
  int stage;
  double residual;
};
struct NotProperlyConvex : Error {
  explicit NotProperlyConvex(const std::string& w) : Error(ErrorCode::not_properly_convex, w) {}
};
struct ScheduleInfeasible : Error {
  ScheduleInfeasible(int stage, const std::string& inequality_id, const std::string& w)
      : Error(ErrorCode::schedule_infeasible,
              "stage " + std::to_string(stage) + " [" + inequality_id + "]: " + w),
        stage(stage),
        inequality_id(inequality_id) {}
  int stage;
  std::string inequality_id;
};
struct SublevelNotCompact : Error {
  explicit SublevelNotCompact(const std::string& w) : Error(ErrorCode::sublevel_not_compact, w) {}
};
struct DegenerateBody : Error {
  explicit DegenerateBody(const std::string& w) : Error(ErrorCode::degenerate_body, w) {}
};
struct DegenerateSublevel : Error {
  explicit DegenerateSublevel(const std::string& w) : Error(ErrorCode::degenerate_sublevel, w) {}
};
struct SpecParse : Error {
  explicit SpecParse(const std::string& w) : Error(ErrorCode::spec_parse, w) {}
};
struct PipelineError : Error {
  explicit PipelineError(const std::string& w) : Error(ErrorCode::pipeline_error, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::io_error, w) {}
};

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_ERRORS_HPP
