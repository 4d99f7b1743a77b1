#pragma once

#include <optional>
#include <span>

#include "syam/cone_space.hpp"

namespace syam {

struct FitConfig {
    int resample_points = 64;        // log-spaced abscissae before regression
    double constant_threshold = 0.05;  // |gamma| below this triggers the secondary fit
    double secondary_floor = 1e-2;   // keep residual samples above this relative size
};

/// Tip expansion fit u ~ c0 x^gamma (+ optional next power when gamma ~ 0).
struct ExpansionFit {
    double gamma_hat = 0.0;
    double c0_hat = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    double fit_error = 0.0;  // max relative deviation of the model on the window
    std::optional<double> secondary_exponent;
};

/// Two-stage exponent fit near a tip: the slope of log u against log(distance)
/// gives gamma; when gamma is consistent with a constant leading term, the
/// median tail constant is removed and the next exponent is estimated.
/// The window is in tip distance and must span at least a factor 4.
ExpansionFit fit_exponent(std::span<const double> x, std::span<const double> u, double length,
                          Tip tip, double window_lo, double window_hi, const FitConfig& cfg = {});

/// Default fit window [4h, min(0.1 L, 64h)] from the smallest tip step h.
std::pair<double, double> default_fit_window(std::span<const double> x, double length, Tip tip);

struct PredictionReport {
    bool match = false;
    double rel_dev = 0.0;
    double fitted = 0.0;
    double predicted = 0.0;
};

/// Deviation |fit - predicted| / max(|fit|, |predicted|, floor); symmetric in
/// its two inputs. Match when the deviation is at most `threshold`.
PredictionReport compare_prediction(const ExpansionFit& fit, double predicted,
                                    double threshold = 0.05, double floor = 0.05);

struct PositivityAudit {
    double min_u = 0.0;
    double max_u = 0.0;
    bool positive = false;              // min over the grid is strictly positive
    bool lower_bound_asserted = false;  // claimed only under iv_a or iv_b
};

/// Reports the solution minimum; a strictly positive lower bound is asserted
/// only when the curvature class justifies it (iv_a or iv_b).
PositivityAudit positivity_audit(std::span<const double> u, const AdmissibilityRecord& record);

}  // namespace syam
