#include "syam/grid.hpp"

#include <algorithm>
#include <cmath>

#include "syam/curvature.hpp"

namespace syam {

double RadialGrid::min_step() const {
    double m = boundaries[1] - boundaries[0];
    for (std::size_t i = 1; i + 1 < boundaries.size(); ++i)
        m = std::min(m, boundaries[i + 1] - boundaries[i]);
    return m;
}

double RadialGrid::max_step() const {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i)
        m = std::max(m, boundaries[i + 1] - boundaries[i]);
    return m;
}

void RadialGrid::validate() const {
    if (nodes.size() < 2) fail(errc::invalid_argument, "grid needs at least 2 nodes");
    if (boundaries.size() != nodes.size() + 1)
        fail(errc::invalid_argument, "grid boundaries must bracket the nodes");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (nodes[i + 1] <= nodes[i]) fail(errc::invalid_argument, "grid nodes must increase");
    for (double w : weights)
        if (!(w > 0.0)) fail(errc::invalid_argument, "grid weights must be positive");
}

namespace {

RadialGrid from_boundaries(const ConeSpace& space, std::vector<double> b) {
    RadialGrid g;
    g.boundaries = std::move(b);
    g.length = space.warp.length();
    const int N = static_cast<int>(g.boundaries.size()) - 1;
    const double vol = space.link.volume;
    const int f = space.link.f;

    g.nodes.resize(N);
    g.weights.resize(N);
    for (int i = 0; i < N; ++i) {
        g.nodes[i] = 0.5 * (g.boundaries[i] + g.boundaries[i + 1]);
        const double psi = space.warp.value(g.nodes[i]);
        if (!(psi > 0.0)) fail(errc::invalid_space, "warp is not positive at a grid node");
        g.weights[i] = vol * std::pow(psi, f) * (g.boundaries[i + 1] - g.boundaries[i]);
    }
    g.face_coeff.resize(N - 1);
    for (int i = 1; i < N; ++i) {
        const double psi = space.warp.value(g.boundaries[i]);
        g.face_coeff[i - 1] = vol * std::pow(psi, f) / (g.nodes[i] - g.nodes[i - 1]);
    }
    g.validate();
    return g;
}

// Geometric cell sizes h_int/R * ratio^k from a tip until they reach the
// interior size h_int; solved so the total covers the required extent.
std::vector<double> graded_cells(double extent, int cells, double ratio, double tip_refine,
                                 bool grade_low, bool grade_high) {
    std::vector<double> rel;  // cell sizes relative to h_int
    int k_lo = 0, k_hi = 0;
    if (ratio > 1.0 && tip_refine > 1.0) {
        const int k = static_cast<int>(std::ceil(std::log(tip_refine) / std::log(ratio)));
        k_lo = grade_low ? std::min(k, cells / 3) : 0;
        k_hi = grade_high ? std::min(k, cells / 3) : 0;
    }
    rel.reserve(cells);
    for (int i = 0; i < k_lo; ++i)
        rel.push_back(std::pow(ratio, i) / std::pow(ratio, k_lo));
    for (int i = 0; i < cells - k_lo - k_hi; ++i) rel.push_back(1.0);
    for (int i = k_hi - 1; i >= 0; --i)
        rel.push_back(std::pow(ratio, i) / std::pow(ratio, k_hi));

    double total = 0.0;
    for (double r : rel) total += r;
    for (double& r : rel) r *= extent / total;
    return rel;
}

}  // namespace

RadialGrid make_graded_grid(const ConeSpace& space, int cells, double ratio, double tip_refine) {
    space.validate();
    if (cells < 8) fail(errc::invalid_argument, "grid needs at least 8 cells");
    if (!(ratio >= 1.0 && ratio <= 1.2))
        fail(errc::invalid_argument, "grading ratio must lie in [1, 1.2]");
    if (!(tip_refine >= 1.0)) fail(errc::invalid_argument, "tip refinement must be >= 1");

    const double L = space.warp.length();
    const auto sizes =
        graded_cells(L, cells, ratio, tip_refine, true, space.warp.has_upper_tip());
    std::vector<double> b(cells + 1);
    b[0] = 0.0;
    for (int i = 0; i < cells; ++i) b[i + 1] = b[i] + sizes[i];
    b[cells] = L;
    return from_boundaries(space, std::move(b));
}

RadialGrid make_window_grid(const ConeSpace& space, double x_lo, double x_hi, int cells,
                            bool log_spaced) {
    space.validate();
    if (cells < 2) fail(errc::invalid_argument, "window grid needs at least 2 cells");
    if (!(0.0 <= x_lo && x_lo < x_hi && x_hi <= space.warp.length()))
        fail(errc::invalid_argument, "window must satisfy 0 <= x_lo < x_hi <= L");
    if (log_spaced && !(x_lo > 0.0))
        fail(errc::invalid_argument, "log-spaced window must avoid x = 0");

    std::vector<double> b(cells + 1);
    if (log_spaced) {
        const double t0 = std::log(x_lo), t1 = std::log(x_hi);
        for (int i = 0; i <= cells; ++i)
            b[i] = std::exp(t0 + (t1 - t0) * double(i) / double(cells));
    } else {
        for (int i = 0; i <= cells; ++i)
            b[i] = x_lo + (x_hi - x_lo) * double(i) / double(cells);
    }
    b.front() = x_lo;
    b.back() = x_hi;
    return from_boundaries(space, std::move(b));
}

RadialGrid rebuild_grid(const ConeSpace& space, std::span<const double> nodes) {
    space.validate();
    if (nodes.size() < 2) fail(errc::invalid_argument, "grid needs at least 2 nodes");
    std::vector<double> b(nodes.size() + 1);
    b[0] = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        b[i + 1] = 2.0 * nodes[i] - b[i];
        if (!(b[i + 1] > b[i]))
            fail(errc::invalid_argument, "nodes are not cell-centered over (0, L)");
    }
    const double L = space.warp.length();
    if (std::abs(b.back() - L) > 1e-6 * L)
        fail(errc::invalid_argument, "nodes do not tile the space length");
    b.back() = L;
    return from_boundaries(space, std::move(b));
}

}  // namespace syam
