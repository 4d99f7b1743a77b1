#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syam/assemble.hpp"

namespace syam {

/// Truncation family used by the iteration: f_alpha follows x^alpha up to the
/// breakpoint x* = alpha^{-1/(alpha-1)} and continues linearly, C^1 across.
struct TruncationParams {
    double alpha = 2.0;  // > 1
    double L = 1.0;      // >= 1

    double breakpoint() const;          // x* of the unscaled f_alpha
    double scaled_breakpoint() const;   // L x*
    void validate() const;
};

struct TruncationValues {
    double f = 0.0;          // f_alpha(x)
    double phi = 0.0;        // phi_{alpha,L}(x) = L^alpha f_alpha(x/L)
    double phi_prime = 0.0;
    double G = 0.0;          // ∫_0^x phi'(t)^2 dt, closed form on both branches
};

TruncationValues truncation_eval(const TruncationParams& params, double x);

struct TruncationViolation {
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    int inequality = 0;  // 1: phi <= x^alpha,  2: x G <= alpha^2/(2 alpha - 1) phi^2
};

/// Pointwise check of both truncation inequalities; returns the first witness
/// of a violation beyond `tol` relative, or nothing if all samples pass.
std::optional<TruncationViolation> verify_truncation_inequalities(const TruncationParams& params,
                                                                  std::span<const double> xs,
                                                                  double tol = 1e-12);

struct SobolevEstimate {
    double A = 0.0;
    double B = 0.0;
    std::string method;
};

struct SobolevProbeConfig {
    int probe_count = 400;
    int revalidate_count = 1000;
    std::uint64_t seed = 1;
    double margin = 0.98;       // empirical minimum is derated by this factor
    int b_grid_points = 33;     // log-spaced candidate grid for the mass weight
    double b_grid_span = 100.0; // candidates cover [base/span, base*span]
};

/// Probe-certified pair (A, B) with ||f||^2_{2n/(n-2)} <= A energy(f) + B mass(f)
/// on random piecewise-linear probes and power-law tip bumps. For candidate
/// weights b on a grid, S(b) = min over normalized probes of energy + b*mass;
/// the returned pair comes from the maximizing candidate, then is re-verified
/// on an independent probe set.
SobolevEstimate sobolev_constants(const AssembledForms& forms, const SobolevProbeConfig& cfg = {});

/// Re-check the pair on `count` fresh probes; returns the number of violations.
int sobolev_revalidate(const AssembledForms& forms, const SobolevEstimate& est, int count,
                       std::uint64_t seed);

struct MoserLadder {
    double q = 0.0;
    double r = 0.0;      // 2q/(q-1)
    double kappa = 0.0;  // (n/(n-2)) (q-1)/q
    double alpha = 0.0;  // chosen so alpha r < 2n/(n-2)
    double C = 0.0;      // A ||V||_q + B Vol^{1/q}
    double C1 = 0.0;     // C alpha/(2 alpha - 1)
    std::vector<double> norms;  // ||u||_{kappa^j alpha r}
    double sup_bound = 0.0;     // infinite-product bound times ||u||_{alpha r}
    double max_u = 0.0;
    bool validated = false;     // sup_bound finite and >= max_u, ladder consistent
    std::string note;
};

/// Iteration ladder for a nonnegative subsolution of Δu >= V u: evaluates the
/// norms ||u||_{kappa^j alpha r} and the certified sup bound
/// prod_j (C1 kappa^j alpha)^{1/(2 kappa^j)} ||u||_{alpha r}.
MoserLadder moser_supbound(std::span<const double> u, std::span<const double> V, double q,
                           const SobolevEstimate& est, const AssembledForms& forms,
                           int ladder_steps = 24);

/// Render the certificate constants and ladder as an auditable text report.
std::string render_moser_report(const MoserLadder& ladder, const SobolevEstimate& est);

struct HardyReport {
    double rayleigh_min = 0.0;        // min over all probes of the quotient
    double constant = 0.0;            // (f-1)^2/4
    double ratio = 0.0;               // rayleigh_min / constant
    double near_optimizer_best = 0.0; // best ratio over the explicit family
    int probe_count = 0;
    bool degenerate = false;          // f = 1, constant 0
};

struct HardyConfig {
    int random_probes = 64;
    std::uint64_t seed = 1;
};

/// Rayleigh quotient ∫u'^2 psi^f dx / ∫ x^{-2} u^2 psi^f dx over compactly
/// supported probes on an exact-cone window, against the constant (f-1)^2/4.
/// Probes combine random piecewise-linear bumps with the explicit family
/// x^{(1-f)/2} sin(pi (t-t0)/T) in t = log x.
HardyReport hardy_check(int f, const WindowGrid& window, const HardyConfig& cfg = {});

struct MorreyRadiusValue {
    double radius = 0.0;
    double value = 0.0;  // max over centers of r^{alpha q - n} ∫_{B_r} |V|^q dV
};

struct MorreyReport {
    double q = 0.0;
    double alpha = 0.0;
    double sup_constant = 0.0;
    bool within_hypothesis = false;  // alpha in [0, 2)
    bool finite = false;             // nonincreasing trend of the values at small r
    double small_r_slope = 0.0;      // d log value / d log r over the small-r half
    std::vector<MorreyRadiusValue> per_radius;
};

/// Scale-weighted ball bounds r^{alpha q - n} ∫_{B(p,r)} |V|^q dV over tip and
/// interior centers, radii log-spaced over at least two decades.
MorreyReport morrey_check(const AssembledForms& forms, std::span<const double> V, double q,
                          double alpha, std::span<const double> centers,
                          std::span<const double> radii);

}  // namespace syam
