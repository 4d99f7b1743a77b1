#pragma once

#include <vector>

#include "syam/errors.hpp"

namespace syam {

/// Radial warp profile psi of a metric dx^2 + psi(x)^2 k on [0, L] x Z.
///
/// Three kinds: an analytic two-tipped spindle psi = (rho L / pi) sin(pi x / L),
/// an analytic exact cone psi = rho x (tip at 0 only), and tabulated samples with
/// derivatives formed by second-order finite differences (one-sided at the ends).
class WarpProfile {
public:
    enum class Kind { spindle, cone, sampled };

    static WarpProfile spindle(double rho, double length);
    static WarpProfile cone(double rho, double length);
    static WarpProfile sampled(std::vector<double> x, std::vector<double> psi, double length);

    Kind kind() const { return kind_; }
    double length() const { return length_; }
    double tip_slope() const { return rho_; }  // d psi/dx at x -> 0

    double value(double x) const;
    double d1(double x) const;
    double d2(double x) const;

    bool has_upper_tip() const { return kind_ == Kind::spindle; }

    /// Max relative deviation of psi from the exact cone rho*x over [x_lo, x_hi].
    double cone_deviation(double x_lo, double x_hi) const;

private:
    WarpProfile() = default;

    Kind kind_ = Kind::spindle;
    double rho_ = 1.0;
    double length_ = 0.0;

    // sampled data and finite-difference derivative tables
    std::vector<double> sx_, spsi_, sd1_, sd2_;

    double interp(const std::vector<double>& table, double x) const;
};

}  // namespace syam
