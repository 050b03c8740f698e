#ifndef OPTDES_SOLVER_HPP
#define OPTDES_SOLVER_HPP

#include <vector>

#include "optdes/certify.hpp"
#include "optdes/design.hpp"

namespace optdes {

enum class MonotonicityAction { Fail, Warn };
enum class VdmStepRule { Harmonic, LineSearch };

struct SolveOptions {
  Criterion criterion = Criterion::D;
  int max_iters = 5000;
  double l1_tol = 1e-9;
  double cert_tol = 1e-4;
  bool record_history = true;
  // D violations indicate a numerical bug (monotonicity is proven); A
  // monotonicity is only conjectured, so violations are surfaced as warnings.
  MonotonicityAction monotonicity_action = MonotonicityAction::Fail;
  bool monotonicity_action_set = false;  // if false, default depends on criterion

  MonotonicityAction effective_monotonicity_action() const {
    if (monotonicity_action_set) return monotonicity_action;
    return criterion == Criterion::D ? MonotonicityAction::Fail
                                     : MonotonicityAction::Warn;
  }

  bool operator==(const SolveOptions&) const = default;
};

struct IterationRecord {
  int iter = 0;
  double criterion_value = 0.0;
  double l1_step = 0.0;   // integral |f_n - f_{n-1}| dmu
  double kl_step = 0.0;   // integral f_n log(f_n / f_{n-1}) dmu
  double cert_gap = 0.0;  // equivalence-theorem gap of this iterate
  double wall_time_s = 0.0;
  double mass = 0.0;   // integral f dmu of this iterate
  double min_f = 0.0;  // smallest density value of this iterate
};

enum class TerminationReason { CertTol, L1Tol, MaxIters, MonotonicityViolation };

struct SolveReport {
  DesignDensity final_density;
  std::vector<IterationRecord> history;
  bool converged = false;
  TerminationReason termination_reason = TerminationReason::MaxIters;
  std::vector<SupportPoint> support;  // filled by extract_support
  double residual_mass = 0.0;

  int iterations = 0;
  double final_value = 0.0;
  double final_cert_gap = 0.0;
  // iterations where the A criterion increased beyond 1e-12 (conjecture monitor)
  int a_monotonicity_violations = 0;
};

/// One multiplicative D update: f'_i = f_i * phi_i / p.  Output stays
/// nonnegative and normalized without renormalization.
DesignDensity d_step(const DesignDensity& f, const QuadratureGrid& grid,
                     const ModelSpec& model);

/// One multiplicative A update: f'_i = (f_i / p) * [(p-1) psi_i + 1].
DesignDensity a_step(const DesignDensity& f, const QuadratureGrid& grid,
                     const ModelSpec& model);

/// One vertex-direction (Fedorov-Wynn) D step: move mass lambda toward the
/// cell maximizing phi.  iter is used by the harmonic rule lambda = 1/(n+1);
/// the line-search rule uses the exact maximizer of log det along the segment.
DesignDensity vdm_d_step(const DesignDensity& f, const QuadratureGrid& grid,
                         const ModelSpec& model,
                         VdmStepRule rule = VdmStepRule::LineSearch,
                         int iter = 1);

/// Driver loop: uniform start, multiplicative updates, per-iteration
/// records, termination on certificate gap, L1 step, or max_iters.
SolveReport solve(const ModelSpec& model, const QuadratureGrid& grid,
                  const SolveOptions& opts);

/// Same driver with vertex-direction D steps (baseline for cross-checks).
SolveReport solve_vdm_d(const ModelSpec& model, const QuadratureGrid& grid,
                        const SolveOptions& opts,
                        VdmStepRule rule = VdmStepRule::LineSearch);

struct PinskerCheck {
  double l1 = 0.0;
  double kl = 0.0;
  bool holds = false;
};

/// L1 and KL distances between densities plus the Pinsker-bound check
/// l1 <= sqrt(2 kl) + 1e-10.  Throws KLUndefined when f_new has mass on a
/// cell where f_old vanishes.
PinskerCheck pinsker_check(const DesignDensity& f_new,
                           const DesignDensity& f_old,
                           const QuadratureGrid& grid);

}  // namespace optdes

#endif  // OPTDES_SOLVER_HPP
