#include "syam/assemble.hpp"

#include <algorithm>
#include <cmath>

#include "syam/curvature.hpp"

namespace syam {

double AssembledForms::energy(std::span<const double> u) const {
    double e = 0.0;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        const double d = u[i + 1] - u[i];
        e += grid.face_coeff[i] * d * d;
    }
    if (outer_dirichlet) e += dirichlet_coeff * u.back() * u.back();
    return e;
}

double AssembledForms::potential(std::span<const double> u) const {
    double p = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) p += scal[i] * u[i] * u[i] * grid.weights[i];
    return consts.c * p;
}

double AssembledForms::mass(std::span<const double> u) const {
    double m = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) m += u[i] * u[i] * grid.weights[i];
    return m;
}

double AssembledForms::quadratic(std::span<const double> u) const {
    return energy(u) + potential(u);
}

double AssembledForms::norm(std::span<const double> u, double s) const {
    // log-domain accumulation so large exponents cannot overflow
    double peak = 0.0;
    for (double v : u) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = std::abs(u[i]) / peak;
        if (a > 0.0) acc += std::exp(s * std::log(a)) * grid.weights[i];
    }
    return peak * std::pow(acc, 1.0 / s);
}

void AssembledForms::apply_operator(std::span<const double> u, std::span<double> out) const {
    const std::size_t N = u.size();
    for (std::size_t i = 0; i < N; ++i)
        out[i] = consts.c * scal[i] * grid.weights[i] * u[i];
    for (std::size_t i = 0; i + 1 < N; ++i) {
        const double flux = grid.face_coeff[i] * (u[i + 1] - u[i]);
        out[i] -= flux;
        out[i + 1] += flux;
    }
    if (outer_dirichlet) out[N - 1] += dirichlet_coeff * u[N - 1];
}

AssembledForms assemble(const ConeSpace& space, const RadialGrid& grid) {
    space.validate();
    grid.validate();
    AssembledForms forms;
    forms.grid = grid;
    forms.consts = space.constants;
    forms.scal = scal_profile(space, grid.nodes);
    forms.volume = 0.0;
    for (double w : grid.weights) forms.volume += w;
    return forms;
}

AssembledForms assemble_ball(const ConeSpace& space, const RadialGrid& grid, Tip tip, double r) {
    space.validate();
    grid.validate();
    const double L = space.warp.length();
    if (!(r > 0.0 && r < 0.5 * L))
        fail(errc::invalid_argument, "ball radius must satisfy 0 < r < L/2");
    if (tip == Tip::upper && !space.warp.has_upper_tip())
        fail(errc::invalid_argument, "space has no tip at x = L");

    // Work in tip distance; for the upper tip reflect the coordinate.
    const int N = grid.size();
    std::vector<double> dist(N);
    for (int i = 0; i < N; ++i)
        dist[i] = tip == Tip::lower ? grid.nodes[i] : L - grid.nodes[i];
    if (tip == Tip::upper) std::reverse(dist.begin(), dist.end());

    int inside = 0;
    while (inside < N && dist[inside] < r) ++inside;
    if (inside < 4) fail(errc::invalid_argument, "ball radius spans fewer than 4 grid cells");

    RadialGrid sub;
    sub.length = L;
    sub.nodes.assign(dist.begin(), dist.begin() + inside);
    sub.boundaries.resize(inside + 1);
    sub.boundaries[0] = 0.0;
    for (int i = 0; i < inside; ++i)
        sub.boundaries[i + 1] = 2.0 * sub.nodes[i] - sub.boundaries[i];

    const double vol = space.link.volume;
    const int f = space.link.f;
    auto psi_at = [&](double d) {
        return space.warp.value(tip == Tip::lower ? d : L - d);
    };
    sub.weights.resize(inside);
    for (int i = 0; i < inside; ++i)
        sub.weights[i] =
            vol * std::pow(psi_at(sub.nodes[i]), f) * (sub.boundaries[i + 1] - sub.boundaries[i]);
    sub.face_coeff.resize(inside - 1);
    for (int i = 1; i < inside; ++i)
        sub.face_coeff[i - 1] =
            vol * std::pow(psi_at(sub.boundaries[i]), f) / (sub.nodes[i] - sub.nodes[i - 1]);
    sub.validate();

    AssembledForms forms;
    forms.grid = std::move(sub);
    forms.consts = space.constants;
    forms.scal.resize(inside);
    for (int i = 0; i < inside; ++i) {
        const double x = tip == Tip::lower ? forms.grid.nodes[i] : L - forms.grid.nodes[i];
        forms.scal[i] = scal_at(space, x);
    }
    forms.volume = 0.0;
    for (double w : forms.grid.weights) forms.volume += w;

    // hard zero at the outer boundary x = r
    forms.outer_dirichlet = true;
    const double x_last = forms.grid.nodes[inside - 1];
    const double mid = 0.5 * (x_last + r);
    forms.dirichlet_coeff = vol * std::pow(psi_at(mid), f) / (r - x_last);
    return forms;
}

}  // namespace syam
