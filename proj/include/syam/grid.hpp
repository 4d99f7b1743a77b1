#pragma once

#include <span>
#include <vector>

#include "syam/cone_space.hpp"

namespace syam {

/// Cell-centered radial grid on (0, L). Nodes are cell midpoints, so the first
/// node sits at half the first cell and no node touches a tip. Quadrature
/// weights are Vol(Z) psi(x_i)^f times the cell size.
struct RadialGrid {
    std::vector<double> nodes;       // cell centers, strictly increasing
    std::vector<double> boundaries;  // size nodes.size()+1, from 0 to L
    std::vector<double> weights;     // dV weights per node
    std::vector<double> face_coeff;  // Vol(Z) psi(b_i)^f / (x_i - x_{i-1}), i = 1..N-1
    double length = 0.0;

    int size() const { return static_cast<int>(nodes.size()); }
    double min_step() const;
    double max_step() const;
    void validate() const;
};

/// Graded solver grid: cells shrink geometrically toward each tip of the space
/// (toward x = 0 only for one-tipped cones). `ratio` must lie in [1, 1.2];
/// `tip_refine` caps how much smaller the tip cells are than interior ones.
RadialGrid make_graded_grid(const ConeSpace& space, int cells, double ratio = 1.08,
                            double tip_refine = 100.0);

/// Cell grid over a sub-window [x_lo, x_hi]; boundaries uniform either in x or in log x.
RadialGrid make_window_grid(const ConeSpace& space, double x_lo, double x_hi, int cells,
                            bool log_spaced = false);

/// Recover cell boundaries from saved cell-centered nodes (b_i = 2 x_i - b_{i-1}).
RadialGrid rebuild_grid(const ConeSpace& space, std::span<const double> nodes);

}  // namespace syam
