#pragma once

#include <span>
#include <vector>

#include "syam/cone_space.hpp"

namespace syam {

/// Scalar curvature of g = dx^2 + psi^2 k at one interior point.
double scal_at(const ConeSpace& space, double x);

/// Pointwise scalar curvature over a grid of interior points.
std::vector<double> scal_profile(const ConeSpace& space, std::span<const double> grid);

/// Least-squares fit of x^2 scal against {1, x} over a window at a tip.
/// The abscissa is the distance to the chosen tip.
CurvatureExpansion conic_coefficients(const ConeSpace& space, Tip tip, double window_lo,
                                      double window_hi, int sample_count = 64);

/// Scalar curvature of w^{4/(n-2)} g for radial positive samples w on the grid x.
/// The radial Laplacian uses second-order differences (one-sided at the ends).
std::vector<double> conformal_scal(const ConeSpace& space, std::span<const double> x,
                                   std::span<const double> w);

/// Curvature-integrability classification of a stratified record set.
/// Empty input is the smooth-space verdict (all conditions hold).
AdmissibilityRecord admissibility(std::span<const StratumData> strata);

/// Per-tip StratumData computed from the fitted conic expansion, with
/// coefficients snapped to zero below the fit-noise threshold.
std::vector<StratumData> tip_strata(const ConeSpace& space, double snap_rel = 1e-6);

/// Local model-problem decomposition records, one per stratum; the empty
/// list yields the single round-sphere entry of a smooth space.
std::vector<ModelProblem> local_yamabe_model(std::span<const StratumData> strata);

}  // namespace syam
