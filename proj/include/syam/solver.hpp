#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syam/assemble.hpp"

namespace syam {

struct SolverConfig {
    int grid_cells = 1000;
    double grading_ratio = 1.08;
    double tip_refine = 100.0;
    double residual_tol = 1e-7;
    int max_iterations = 20000;
    std::vector<double> schedule;  // exponents p > n, strictly decreasing; empty = default
    int extrapolation_order = 1;
    double armijo_c1 = 1e-4;
    double diverging_Y_cutoff = -1e8;

    /// Default continuation schedule n+1, n+1/2, ..., n+2^{-6}.
    static std::vector<double> default_schedule(int n);
    std::vector<double> resolved_schedule(int n) const;
    void validate(int n) const;
};

/// Stationary point of the subcritical quotient at exponent p.
struct SubcriticalSolution {
    double p = 0.0;
    double Y = 0.0;          // quotient value = Euler-Lagrange multiplier
    double lambda = 0.0;     // the multiplier, equal to Y under the normalization
    double residual = 0.0;   // weighted L^2 norm of the discrete equation
    std::vector<double> u;   // nonnegative, ||u||_{2p/(p-2)} = 1
    int iterations = 0;
};

/// Projected preconditioned gradient descent with Armijo backtracking on the
/// quotient (energy + potential)/||u||^2_{2p/(p-2)}, nonnegativity enforced by
/// u <- |u| and the norm renormalized each step. Throws on non-convergence and
/// when the quotient is detected to diverge to -infinity.
SubcriticalSolution minimize_subcritical(const AssembledForms& forms, double p,
                                         const SolverConfig& config,
                                         std::span<const double> warm_start = {});

/// Weighted L^2 norm of Δu - c(n) scal u + Y u^{(p+2)/(p-2)} on the grid.
double residual_norm(const AssembledForms& forms, std::span<const double> u, double p, double Y);

struct ContinuationResult {
    std::vector<SubcriticalSolution> stages;
    double extrapolated_Y = 0.0;
    bool complete = false;            // every scheduled stage converged
    std::string failure;              // diagnostic when a stage aborted
    std::optional<double> failed_p;
};

/// Warm-started continuation down the schedule toward the critical exponent,
/// with polynomial extrapolation of Y_p in (p - n) at p = n. A stage failure
/// aborts and returns the completed stages.
ContinuationResult continuation(const AssembledForms& forms, const SolverConfig& config);

struct BallEstimate {
    double value = 0.0;
    double radius = 0.0;
    double p = 0.0;
    bool upper_bound = true;  // radial ansatz only ever certifies from above
};

/// Quotient minimization over the ball {dist(tip) < r} with a hard zero at the
/// outer boundary. Refuses radii spanning fewer than 4 cells; requires r < L/2.
BallEstimate local_yamabe_ball(const ConeSpace& space, const RadialGrid& grid, Tip tip, double r,
                               double p, const SolverConfig& config);

/// Strict comparison Y_est < Y_local_est with a configurable margin. Both
/// inputs are estimates, so the verdict is heuristic.
bool hypothesis_gate(double Y_est, double Y_local_est, double margin = 0.0);

}  // namespace syam
