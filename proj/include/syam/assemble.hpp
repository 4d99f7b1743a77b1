#pragma once

#include <span>
#include <vector>

#include "syam/grid.hpp"

namespace syam {

/// Discrete quadratic forms of the radial functional on a grid:
/// energy(u) = Vol(Z) ∫ u'^2 psi^f dx   (two-point gradients, flux form)
/// potential(u) = c(n) ∫ scal_g u^2 dV
/// mass(u) = ∫ u^2 dV
/// No condition is imposed at the tips; the degenerate weight handles them.
struct AssembledForms {
    RadialGrid grid;
    YamabeConstants consts;
    std::vector<double> scal;       // scal_g at the nodes
    double volume = 0.0;            // sum of weights
    bool outer_dirichlet = false;   // zero value enforced at the outer boundary
    double dirichlet_coeff = 0.0;   // face coefficient of the boundary flux term

    int size() const { return grid.size(); }

    double energy(std::span<const double> u) const;
    double potential(std::span<const double> u) const;
    double mass(std::span<const double> u) const;
    double quadratic(std::span<const double> u) const;  // energy + potential

    /// L^s norm with the grid weights.
    double norm(std::span<const double> u, double s) const;

    /// out = (stiffness + c scal masswise) u, the matrix of quadratic().
    void apply_operator(std::span<const double> u, std::span<double> out) const;
};

AssembledForms assemble(const ConeSpace& space, const RadialGrid& grid);

/// Forms restricted to the ball {x < r} around a tip, with a hard zero at the
/// outer boundary. For the upper tip the coordinate is reflected first.
AssembledForms assemble_ball(const ConeSpace& space, const RadialGrid& grid, Tip tip, double r);

}  // namespace syam
