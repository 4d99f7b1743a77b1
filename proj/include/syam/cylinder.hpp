#pragma once

#include <span>
#include <vector>

#include "syam/cone_space.hpp"

namespace syam {

/// Node-based quadrature over a window [x_lo, x_hi] strictly inside (0, L):
/// nodes include both ends, integrals use the trapezoid rule, gradients use
/// two-point differences with midpoint-evaluated weight.
struct WindowGrid {
    std::vector<double> nodes;
    std::vector<double> weights;     // Vol(Z) psi^f trapezoid weights
    std::vector<double> face_coeff;  // Vol(Z) psi(mid)^f / h per interval
    double x_lo = 0.0, x_hi = 0.0;
};

WindowGrid make_window_nodes(const ConeSpace& space, double x_lo, double x_hi, int intervals,
                             bool log_spaced = false);

/// Cylinder image of a radial function on an exact-cone window:
/// t = -log x ascending, v = x^{(n-2)/2} u, cylinder metric dt^2 + rho^2 k.
struct CylinderPicture {
    std::vector<double> t;
    std::vector<double> v;
    double rho = 1.0;        // tip slope; the cylinder link metric is rho^2 k
    LinkSpec link;           // original (unscaled) link
    YamabeConstants consts;
};

/// Transform u on the window nodes to the cylinder picture. The window must
/// avoid x = 0 and the warp must match rho*x within cone_tol relative.
CylinderPicture cylinder_transform(const ConeSpace& space, const WindowGrid& window,
                                   std::span<const double> u, double cone_tol = 1e-8);

/// Critical-exponent quotient over the window in the cone picture. Includes
/// the mean-curvature boundary term 2 c(n) ∮ H u^2 dA that makes the windowed
/// functional conformally invariant (H = f psi'/psi toward the outward normal).
double windowed_quotient_cone(const ConeSpace& space, const WindowGrid& window,
                              std::span<const double> u);

/// The same quotient computed in the cylinder picture dt^2 + rho^2 k, where
/// the slices are totally geodesic and the boundary term vanishes.
double windowed_quotient_cylinder(const CylinderPicture& cyl);

}  // namespace syam
