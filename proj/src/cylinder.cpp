#include "syam/cylinder.hpp"

#include <algorithm>
#include <cmath>

#include "syam/curvature.hpp"

namespace syam {

WindowGrid make_window_nodes(const ConeSpace& space, double x_lo, double x_hi, int intervals,
                             bool log_spaced) {
    space.validate();
    if (intervals < 2) fail(errc::invalid_argument, "window needs at least 2 intervals");
    if (!(0.0 < x_lo && x_lo < x_hi && x_hi <= space.warp.length()))
        fail(errc::invalid_argument, "window must satisfy 0 < x_lo < x_hi <= L");

    WindowGrid w;
    w.x_lo = x_lo;
    w.x_hi = x_hi;
    const int N = intervals + 1;
    w.nodes.resize(N);
    for (int i = 0; i < N; ++i) {
        const double t = double(i) / double(intervals);
        w.nodes[i] = log_spaced ? std::exp(std::log(x_lo) + t * (std::log(x_hi) - std::log(x_lo)))
                                : x_lo + t * (x_hi - x_lo);
    }
    w.nodes.front() = x_lo;
    w.nodes.back() = x_hi;

    const double vol = space.link.volume;
    const int f = space.link.f;
    auto psi_f = [&](double x) {
        const double psi = space.warp.value(x);
        if (!(psi > 0.0)) fail(errc::invalid_space, "warp is not positive inside the window");
        return vol * std::pow(psi, f);
    };

    w.weights.assign(N, 0.0);
    w.face_coeff.resize(intervals);
    for (int i = 0; i < intervals; ++i) {
        const double h = w.nodes[i + 1] - w.nodes[i];
        const double mid = 0.5 * (w.nodes[i] + w.nodes[i + 1]);
        w.face_coeff[i] = psi_f(mid) / h;
        w.weights[i] += 0.5 * h * psi_f(w.nodes[i]);
        w.weights[i + 1] += 0.5 * h * psi_f(w.nodes[i + 1]);
    }
    return w;
}

CylinderPicture cylinder_transform(const ConeSpace& space, const WindowGrid& window,
                                   std::span<const double> u, double cone_tol) {
    space.validate();
    if (u.size() != window.nodes.size())
        fail(errc::invalid_argument, "sample count must match the window nodes");
    if (!(window.x_lo > 0.0))
        fail(errc::invalid_argument, "cylinder transform window must avoid x = 0");

    const double rho = space.warp.tip_slope();
    const double dev = space.warp.cone_deviation(window.x_lo, window.x_hi);
    if (dev > cone_tol)
        fail(errc::invalid_argument,
             "window is not an exact cone within tolerance (psi deviates from rho*x)");

    const double sigma = 0.5 * double(space.constants.n - 2);
    const std::size_t N = u.size();
    CylinderPicture cyl;
    cyl.rho = rho;
    cyl.link = space.link;
    cyl.consts = space.constants;
    cyl.t.resize(N);
    cyl.v.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        const std::size_t j = N - 1 - i;  // ascending t = -log x
        cyl.t[i] = -std::log(window.nodes[j]);
        cyl.v[i] = std::pow(window.nodes[j], sigma) * u[j];
    }
    return cyl;
}

double windowed_quotient_cone(const ConeSpace& space, const WindowGrid& window,
                              std::span<const double> u) {
    space.validate();
    if (u.size() != window.nodes.size())
        fail(errc::invalid_argument, "sample count must match the window nodes");

    const double c = space.constants.c;
    const double crit = space.constants.crit;
    const double f = double(space.link.f);
    const double vol = space.link.volume;

    double energy = 0.0, pot = 0.0, denom = 0.0;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        const double d = u[i + 1] - u[i];
        energy += window.face_coeff[i] * d * d;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        pot += scal_at(space, window.nodes[i]) * u[i] * u[i] * window.weights[i];
        denom += std::pow(std::abs(u[i]), crit) * window.weights[i];
    }

    // mean-curvature boundary term of the windowed functional
    auto boundary = [&](double x, double uu, double sign) {
        const double psi = space.warp.value(x);
        const double H = sign * f * space.warp.d1(x) / psi;
        const double area = vol * std::pow(psi, f);
        return 2.0 * c * H * uu * uu * area;
    };
    const double bdry = boundary(window.x_hi, u.back(), +1.0) +
                        boundary(window.x_lo, u.front(), -1.0);

    return (energy + c * pot + bdry) / std::pow(denom, 2.0 / crit);
}

double windowed_quotient_cylinder(const CylinderPicture& cyl) {
    const double c = cyl.consts.c;
    const double crit = cyl.consts.crit;
    const int f = cyl.link.f;
    // cylinder dt^2 + rho^2 k: constant curvature scal_k/rho^2, area Vol rho^f
    const double scal = cyl.link.scal / (cyl.rho * cyl.rho);
    const double area = cyl.link.volume * std::pow(cyl.rho, f);

    double energy = 0.0, mass = 0.0, denom = 0.0;
    const std::size_t N = cyl.t.size();
    for (std::size_t i = 0; i + 1 < N; ++i) {
        const double h = cyl.t[i + 1] - cyl.t[i];
        const double d = (cyl.v[i + 1] - cyl.v[i]) / h;
        energy += d * d * h;
        mass += 0.5 * h * (cyl.v[i] * cyl.v[i] + cyl.v[i + 1] * cyl.v[i + 1]);
        denom += 0.5 * h * (std::pow(std::abs(cyl.v[i]), crit) +
                            std::pow(std::abs(cyl.v[i + 1]), crit));
    }
    const double numer = area * (energy + c * scal * mass);
    return numer / std::pow(area * denom, 2.0 / crit);
}

}  // namespace syam
