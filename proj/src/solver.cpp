#include "optdes/solver.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>

namespace optdes {

namespace {

constexpr double kDeadCell = 1e-300;  // below this a cell is clamped to zero

void apply_d_update(Eigen::VectorXd& f, const Eigen::VectorXd& phi, int p) {
  f = (f.array() * phi.array() / p).matrix();
  for (long i = 0; i < f.size(); ++i)
    if (f[i] < kDeadCell) f[i] = 0.0;
}

void apply_a_update(Eigen::VectorXd& f, const Eigen::VectorXd& psi, int p) {
  f = (f.array() / p * ((p - 1) * psi.array() + 1.0)).matrix();
  for (long i = 0; i < f.size(); ++i)
    if (f[i] < kDeadCell) f[i] = 0.0;
}

double vdm_lambda(double phi_max, int p, VdmStepRule rule, int iter) {
  if (rule == VdmStepRule::Harmonic) return 1.0 / (iter + 1);
  if (phi_max <= static_cast<double>(p)) return 0.0;
  // exact maximizer of log det((1-l) M + l x x^T) along the segment
  double lam = (phi_max - p) / (p * (phi_max - 1.0));
  return std::clamp(lam, 0.0, 1.0 - 1e-12);
}

void apply_vdm_update(Eigen::VectorXd& f, const QuadratureGrid& grid,
                      long argmax, double lam) {
  if (lam == 0.0) return;
  f *= (1.0 - lam);
  f[argmax] += lam / grid.measures[argmax];
}

struct StepDistances {
  double l1 = 0.0;
  double kl = 0.0;
};

StepDistances step_distances(const Eigen::VectorXd& f_new,
                             const Eigen::VectorXd& f_old,
                             const QuadratureGrid& grid) {
  StepDistances d;
  for (long i = 0; i < f_new.size(); ++i) {
    const double mu = grid.measures[i];
    d.l1 += std::abs(f_new[i] - f_old[i]) * mu;
    if (f_new[i] > 0.0) {
      if (f_old[i] == 0.0)
        throw KLUndefined("f_new has mass on a cell where f_old vanishes");
      d.kl += f_new[i] * std::log(f_new[i] / f_old[i]) * mu;
    }
  }
  if (d.kl < 0.0) d.kl = 0.0;  // roundoff
  return d;
}

enum class Algorithm { Multiplicative, VertexDirectionD };

SolveReport run_driver(const ModelSpec& model, const QuadratureGrid& grid,
                       const SolveOptions& opts, Algorithm algo,
                       VdmStepRule rule) {
  if (opts.max_iters < 1) throw Error("max_iters must be >= 1");
  if (!(opts.l1_tol > 0.0) || !(opts.cert_tol > 0.0))
    throw Error("tolerances must be positive");

  const Eigen::MatrixXd x = regressor_matrix(model, grid);
  const int p = model.p();
  const double bound = opts.criterion == Criterion::D ? p : 1.0;
  const auto t0 = std::chrono::steady_clock::now();

  SolveReport report;
  DesignDensity f = uniform_density(grid);
  Eigen::VectorXd f_prev;
  double prev_value = std::numeric_limits<double>::quiet_NaN();

  for (int n = 0;; ++n) {
    InfoMatrix info(f, grid, x);
    const double value = criterion_value(opts.criterion, info);
    Eigen::VectorXd sens = opts.criterion == Criterion::D
                               ? d_sensitivity(info, x)
                               : a_sensitivity(info, x);
    Eigen::Index argmax = 0;
    const double gap = sens.maxCoeff(&argmax) - bound;

    bool mono_violation = false;
    if (n > 0 && value > prev_value + 1e-12) {
      if (opts.criterion == Criterion::A) ++report.a_monotonicity_violations;
      if (opts.effective_monotonicity_action() == MonotonicityAction::Fail)
        mono_violation = true;
      else
        std::cerr << "optdes: warning: criterion increased by "
                  << value - prev_value << " at iteration " << n << "\n";
    }

    StepDistances dist;
    if (n > 0) dist = step_distances(f.values, f_prev, grid);

    const bool done_cert = gap <= opts.cert_tol;
    const bool done_l1 = n > 0 && dist.l1 <= opts.l1_tol;
    const bool done_iters = n >= opts.max_iters;
    const bool done = done_cert || done_l1 || done_iters || mono_violation;

    if (opts.record_history) {
      // every iteration up to 1e4, then every 10th; always the last
      if (n <= 10000 || n % 10 == 0 || done) {
        IterationRecord rec;
        rec.iter = n;
        rec.criterion_value = value;
        rec.l1_step = dist.l1;
        rec.kl_step = dist.kl;
        rec.cert_gap = gap;
        rec.mass = f.mass(grid);
        rec.min_f = f.values.minCoeff();
        rec.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        report.history.push_back(rec);
      }
    }

    if (done) {
      report.final_density = std::move(f);
      report.iterations = n;
      report.final_value = value;
      report.final_cert_gap = gap;
      report.termination_reason =
          mono_violation ? TerminationReason::MonotonicityViolation
          : done_cert    ? TerminationReason::CertTol
          : done_l1      ? TerminationReason::L1Tol
                         : TerminationReason::MaxIters;
      report.converged =
          report.termination_reason == TerminationReason::CertTol ||
          report.termination_reason == TerminationReason::L1Tol;
      return report;
    }

    f_prev = f.values;
    prev_value = value;
    switch (algo) {
      case Algorithm::Multiplicative:
        if (opts.criterion == Criterion::D)
          apply_d_update(f.values, sens, p);
        else
          apply_a_update(f.values, sens, p);
        break;
      case Algorithm::VertexDirectionD:
        apply_vdm_update(f.values, grid, argmax,
                         vdm_lambda(sens[argmax], p, rule, n + 1));
        break;
    }
  }
}

}  // namespace

DesignDensity d_step(const DesignDensity& f, const QuadratureGrid& grid,
                     const ModelSpec& model) {
  DesignDensity out = f;
  apply_d_update(out.values, d_sensitivity(f, grid, model), model.p());
  return out;
}

DesignDensity a_step(const DesignDensity& f, const QuadratureGrid& grid,
                     const ModelSpec& model) {
  DesignDensity out = f;
  apply_a_update(out.values, a_sensitivity(f, grid, model), model.p());
  return out;
}

DesignDensity vdm_d_step(const DesignDensity& f, const QuadratureGrid& grid,
                         const ModelSpec& model, VdmStepRule rule, int iter) {
  Eigen::VectorXd phi = d_sensitivity(f, grid, model);
  Eigen::Index argmax = 0;
  phi.maxCoeff(&argmax);
  DesignDensity out = f;
  apply_vdm_update(out.values, grid, argmax,
                   vdm_lambda(phi[argmax], model.p(), rule, iter));
  return out;
}

SolveReport solve(const ModelSpec& model, const QuadratureGrid& grid,
                  const SolveOptions& opts) {
  return run_driver(model, grid, opts, Algorithm::Multiplicative,
                    VdmStepRule::LineSearch);
}

SolveReport solve_vdm_d(const ModelSpec& model, const QuadratureGrid& grid,
                        const SolveOptions& opts, VdmStepRule rule) {
  if (opts.criterion != Criterion::D)
    throw Error("the vertex-direction baseline supports the D criterion only");
  return run_driver(model, grid, opts, Algorithm::VertexDirectionD, rule);
}

PinskerCheck pinsker_check(const DesignDensity& f_new,
                           const DesignDensity& f_old,
                           const QuadratureGrid& grid) {
  if (f_new.values.size() != grid.size() || f_old.values.size() != grid.size())
    throw DimensionMismatch("densities and grid disagree in size");
  StepDistances d = step_distances(f_new.values, f_old.values, grid);
  PinskerCheck out;
  out.l1 = d.l1;
  out.kl = d.kl;
  out.holds = out.l1 <= std::sqrt(2.0 * out.kl) + 1e-10;
  return out;
}

}  // namespace optdes
