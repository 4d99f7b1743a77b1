#include "syam/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace syam {

namespace {

constexpr double kNormTol = 1e-10;  // enforced accuracy of ||u||_s = 1

double subcritical_exponent(double p) { return 2.0 * p / (p - 2.0); }

void normalize(const AssembledForms& forms, std::vector<double>& u, double s) {
    for (double& v : u) v = std::abs(v);
    const double nrm = forms.norm(u, s);
    if (!(nrm > 0.0)) fail(errc::numeric_failure, "iterate collapsed to zero");
    for (double& v : u) v /= nrm;
}

// Solve (tridiag) M y = rhs in place; diag/off describe a symmetric SPD matrix.
void thomas_solve(std::vector<double>& diag, std::vector<double>& off, std::vector<double>& y) {
    const std::size_t N = diag.size();
    for (std::size_t i = 1; i < N; ++i) {
        const double m = off[i - 1] / diag[i - 1];
        diag[i] -= m * off[i - 1];
        y[i] -= m * y[i - 1];
    }
    y[N - 1] /= diag[N - 1];
    for (std::size_t i = N - 1; i-- > 0;) y[i] = (y[i] - off[i] * y[i + 1]) / diag[i];
}

}  // namespace

std::vector<double> SolverConfig::default_schedule(int n) {
    std::vector<double> s;
    for (int k = 0; k <= 6; ++k) s.push_back(double(n) + std::pow(2.0, -k));
    return s;
}

std::vector<double> SolverConfig::resolved_schedule(int n) const {
    return schedule.empty() ? default_schedule(n) : schedule;
}

void SolverConfig::validate(int n) const {
    if (grid_cells < 8) fail(errc::invalid_argument, "solver needs at least 8 grid cells");
    if (!(residual_tol > 0.0)) fail(errc::invalid_argument, "residual tolerance must be positive");
    if (max_iterations < 1) fail(errc::invalid_argument, "max iterations must be >= 1");
    const auto sched = resolved_schedule(n);
    for (std::size_t i = 0; i < sched.size(); ++i) {
        if (!(sched[i] > double(n)))
            fail(errc::invalid_argument, "continuation exponents must stay above n");
        if (i > 0 && !(sched[i] < sched[i - 1]))
            fail(errc::invalid_argument, "continuation schedule must be strictly decreasing");
    }
}

double residual_norm(const AssembledForms& forms, std::span<const double> u, double p, double Y) {
    const double s = subcritical_exponent(p);
    const std::size_t N = u.size();
    std::vector<double> Ku(N);
    forms.apply_operator(u, Ku);
    double acc = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double r = -Ku[i] / forms.grid.weights[i] + Y * std::pow(std::abs(u[i]), s - 1.0);
        acc += forms.grid.weights[i] * r * r;
    }
    return std::sqrt(acc);
}

SubcriticalSolution minimize_subcritical(const AssembledForms& forms, double p,
                                         const SolverConfig& config,
                                         std::span<const double> warm_start) {
    const int n = forms.consts.n;
    if (!(p > double(n) && p <= 2.0 * double(n)))
        fail(errc::invalid_argument, "subcritical exponent must satisfy n < p <= 2n");
    config.validate(n);

    const double s = subcritical_exponent(p);
    const std::size_t N = static_cast<std::size_t>(forms.size());

    std::vector<double> u(N, 1.0);
    if (!warm_start.empty()) {
        if (warm_start.size() != N)
            fail(errc::invalid_argument, "warm start has the wrong grid size");
        u.assign(warm_start.begin(), warm_start.end());
    }
    normalize(forms, u, s);

    double shift_floor = 1.0;
    for (std::size_t i = 0; i < N; ++i)
        shift_floor = std::max(shift_floor, 1.0 - forms.consts.c * forms.scal[i]);

    std::vector<double> Ku(N), grad(N), dir(N), trial(N), diag(N), off(N);
    double Y = 0.0, res = 0.0;
    double step = 1.0;
    int iter = 0;

    for (; iter < config.max_iterations; ++iter) {
        forms.apply_operator(u, Ku);
        Y = 0.0;
        for (std::size_t i = 0; i < N; ++i) Y += u[i] * Ku[i];
        if (Y < config.diverging_Y_cutoff)
            fail(errc::numeric_failure,
                 "quotient estimate diverging to -infinity: regime Y > -infinity fails");

        res = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double r = -Ku[i] / forms.grid.weights[i] + Y * std::pow(u[i], s - 1.0);
            res += forms.grid.weights[i] * r * r;
        }
        res = std::sqrt(res);
        if (res <= config.residual_tol) break;

        for (std::size_t i = 0; i < N; ++i)
            grad[i] = 2.0 * (Ku[i] - Y * forms.grid.weights[i] * std::pow(u[i], s - 1.0));

        // preconditioner: operator matrix plus a positive mass shift
        const double sigma = shift_floor + std::abs(Y);
        for (std::size_t i = 0; i < N; ++i) {
            diag[i] = (forms.consts.c * forms.scal[i] + sigma) * forms.grid.weights[i];
            dir[i] = grad[i];
        }
        for (std::size_t i = 0; i + 1 < N; ++i) {
            diag[i] += forms.grid.face_coeff[i];
            diag[i + 1] += forms.grid.face_coeff[i];
            off[i] = -forms.grid.face_coeff[i];
        }
        if (forms.outer_dirichlet) diag[N - 1] += forms.dirichlet_coeff;
        thomas_solve(diag, off, dir);

        double slope = 0.0;
        for (std::size_t i = 0; i < N; ++i) slope += grad[i] * dir[i];

        bool accepted = false;
        double t = std::min(1.0, 2.0 * step);
        for (int back = 0; back < 60; ++back) {
            for (std::size_t i = 0; i < N; ++i) trial[i] = u[i] - t * dir[i];
            normalize(forms, trial, s);
            const double Yt = forms.quadratic(trial);
            if (Yt <= Y - config.armijo_c1 * t * slope) {
                u.swap(trial);
                step = t;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            // descent exhausted at floating precision; accept only if converged
            res = residual_norm(forms, u, p, forms.quadratic(u));
            if (res <= config.residual_tol) break;
            std::ostringstream msg;
            msg << "line search stalled at residual " << res << " (tolerance "
                << config.residual_tol << ")";
            fail(errc::numeric_failure, msg.str());
        }
    }

    if (res > config.residual_tol) {
        std::ostringstream msg;
        msg << "no convergence within " << config.max_iterations << " iterations; last residual "
            << res << " (tolerance " << config.residual_tol << ")";
        fail(errc::numeric_failure, msg.str());
    }

    normalize(forms, u, s);
    SubcriticalSolution sol;
    sol.p = p;
    sol.Y = forms.quadratic(u);
    sol.lambda = sol.Y;
    sol.residual = residual_norm(forms, u, p, sol.Y);
    sol.u = std::move(u);
    sol.iterations = iter;
    return sol;
}

namespace {

// Lagrange evaluation at e = 0 of the polynomial through (e_i, Y_i).
double extrapolate_at_zero(std::span<const double> e, std::span<const double> Y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        double w = 1.0;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j == i) continue;
            w *= -e[j] / (e[i] - e[j]);
        }
        acc += w * Y[i];
    }
    return acc;
}

}  // namespace

ContinuationResult continuation(const AssembledForms& forms, const SolverConfig& config) {
    const int n = forms.consts.n;
    config.validate(n);
    const auto schedule = config.resolved_schedule(n);

    ContinuationResult out;
    std::vector<double> warm;
    for (double p : schedule) {
        try {
            auto sol = minimize_subcritical(forms, p, config, warm);
            warm = sol.u;
            out.stages.push_back(std::move(sol));
        } catch (const Error& err) {
            out.failure = err.what();
            out.failed_p = p;
            break;
        }
    }
    out.complete = out.stages.size() == schedule.size();

    if (!out.stages.empty()) {
        const int pts = std::min<int>(config.extrapolation_order + 1,
                                      static_cast<int>(out.stages.size()));
        std::vector<double> e(pts), Y(pts);
        for (int i = 0; i < pts; ++i) {
            const auto& st = out.stages[out.stages.size() - pts + i];
            e[i] = st.p - double(n);
            Y[i] = st.Y;
        }
        out.extrapolated_Y = extrapolate_at_zero(e, Y);
    }
    return out;
}

BallEstimate local_yamabe_ball(const ConeSpace& space, const RadialGrid& grid, Tip tip, double r,
                               double p, const SolverConfig& config) {
    AssembledForms forms = assemble_ball(space, grid, tip, r);
    auto sol = minimize_subcritical(forms, p, config);
    BallEstimate est;
    est.value = sol.Y;
    est.radius = r;
    est.p = p;
    est.upper_bound = true;
    return est;
}

bool hypothesis_gate(double Y_est, double Y_local_est, double margin) {
    if (!std::isfinite(Y_est) || !std::isfinite(Y_local_est))
        fail(errc::invalid_argument, "gate inputs must be finite");
    return Y_est < Y_local_est - margin;
}

}  // namespace syam
