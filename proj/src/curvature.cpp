#include "syam/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace syam {

namespace {

// OLS fit of y against {1, x}; returns (a0, a1) minimizing sum (y - a0 - a1 x)^2.
std::pair<double, double> fit_affine(std::span<const double> x, std::span<const double> y) {
    const double n = double(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    const double a1 = (n * sxy - sx * sy) / det;
    const double a0 = (sy - a1 * sx) / n;
    return {a0, a1};
}

// OLS fit of y against {1, x, x^2} via the 3x3 normal equations.
struct QuadFit {
    double a0, a1, a2;
};
QuadFit fit_quadratic(std::span<const double> x, std::span<const double> y) {
    double s[5] = {double(x.size()), 0, 0, 0, 0};
    double t[3] = {0, 0, 0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        double p = 1.0;
        for (int k = 1; k <= 4; ++k) {
            p *= x[i];
            s[k] += p;
        }
        t[0] += y[i];
        t[1] += y[i] * x[i];
        t[2] += y[i] * x[i] * x[i];
    }
    double m[3][4] = {{s[0], s[1], s[2], t[0]}, {s[1], s[2], s[3], t[1]}, {s[2], s[3], s[4], t[2]}};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double fac = m[r][col] / m[col][col];
            for (int cc = col; cc < 4; ++cc) m[r][cc] -= fac * m[col][cc];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace

double scal_at(const ConeSpace& space, double x) {
    const auto& w = space.warp;
    if (!(x > 0.0 && x < w.length()))
        fail(errc::invalid_argument, "curvature evaluation needs 0 < x < L");
    const double psi = w.value(x);
    if (!(psi > 0.0)) fail(errc::invalid_space, "warp is not positive at a grid point");
    const double f = double(space.link.f);
    const double dp = w.d1(x);
    const double ddp = w.d2(x);
    return -2.0 * f * ddp / psi + (space.link.scal - f * (f - 1.0) * dp * dp) / (psi * psi);
}

std::vector<double> scal_profile(const ConeSpace& space, std::span<const double> grid) {
    space.validate();
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid) out.push_back(scal_at(space, x));
    return out;
}

CurvatureExpansion conic_coefficients(const ConeSpace& space, Tip tip, double window_lo,
                                      double window_hi, int sample_count) {
    space.validate();
    const double L = space.warp.length();
    if (!(0.0 < window_lo && window_lo < window_hi && window_hi < L))
        fail(errc::invalid_argument, "fit window must lie inside (0, L)");
    if (sample_count < 8) fail(errc::invalid_argument, "fit window needs at least 8 samples");
    if ((window_hi - window_lo) / window_hi < 1e-3)
        fail(errc::numeric_failure, "fit window too narrow: expansion fit is ill-conditioned");
    if (tip == Tip::upper && !space.warp.has_upper_tip())
        fail(errc::invalid_argument, "space has no tip at x = L");

    std::vector<double> xi(sample_count), y(sample_count);
    for (int i = 0; i < sample_count; ++i) {
        const double d = window_lo + (window_hi - window_lo) * double(i) / double(sample_count - 1);
        const double x = tip == Tip::lower ? d : L - d;
        xi[i] = d;
        y[i] = d * d * scal_at(space, x);
    }

    auto [a0, a1] = fit_affine(xi, y);
    CurvatureExpansion exp;
    exp.A0 = a0;
    exp.A1 = a1;
    exp.window_lo = window_lo;
    exp.window_hi = window_hi;
    for (int i = 0; i < sample_count; ++i) {
        const double res = y[i] - a0 - a1 * xi[i];
        exp.remainder_bound = std::max(exp.remainder_bound, std::abs(res));
        exp.remainder_scal_bound = std::max(exp.remainder_scal_bound, std::abs(res) / (xi[i] * xi[i]));
    }
    return exp;
}

std::vector<double> conformal_scal(const ConeSpace& space, std::span<const double> x,
                                   std::span<const double> w) {
    space.validate();
    if (x.size() != w.size() || x.size() < 3)
        fail(errc::invalid_argument, "conformal change needs matching samples (>= 3)");
    for (double v : w)
        if (!(v > 0.0)) fail(errc::invalid_argument, "conformal factor must be positive");

    const int N = static_cast<int>(x.size());
    const double f = double(space.link.f);
    const double c = space.constants.c;
    const double expo = -space.constants.tau;  // -(n+2)/(n-2)

    std::vector<double> out(N);
    for (int i = 0; i < N; ++i) {
        // three-point derivative stencil, one-sided at the ends
        const int j = std::clamp(i, 1, N - 2);
        const double xa = x[j - 1], xb = x[j], xc = x[j + 1];
        const double fa = w[j - 1], fb = w[j], fc = w[j + 1];
        const double at = x[i];
        const double la = (2.0 * at - xb - xc) / ((xa - xb) * (xa - xc));
        const double lb = (2.0 * at - xa - xc) / ((xb - xa) * (xb - xc));
        const double lc = (2.0 * at - xa - xb) / ((xc - xa) * (xc - xb));
        const double d1 = fa * la + fb * lb + fc * lc;
        const double d2 = 2.0 * (fa / ((xa - xb) * (xa - xc)) + fb / ((xb - xa) * (xb - xc)) +
                                 fc / ((xc - xa) * (xc - xb)));
        const double psi = space.warp.value(x[i]);
        if (!(psi > 0.0)) fail(errc::invalid_space, "warp is not positive at a grid point");
        const double lap = d2 + f * space.warp.d1(x[i]) / psi * d1;
        const double scal = scal_at(space, x[i]);
        out[i] = -1.0 / c * std::pow(w[i], expo) * (lap - c * scal * w[i]);
    }
    return out;
}

AdmissibilityRecord admissibility(std::span<const StratumData> strata) {
    AdmissibilityRecord rec;
    rec.iv_a = true;
    rec.iv_b = true;
    rec.iv_c = true;
    rec.alpha = 0.0;
    for (const auto& s : strata) {
        s.validate();
        const bool low_dim = 2 * s.f <= s.n - 2;
        rec.iv_a = rec.iv_a && s.A0 == 0.0 && (!low_dim || s.A1 == 0.0);
        rec.iv_b = rec.iv_b && s.A0 == 0.0;
        if (s.A1 != 0.0) rec.alpha = 1.0;
        rec.iv_c = rec.iv_c && s.A0 >= 0.0 && (!low_dim || s.A1 >= 0.0);
    }
    if (!rec.iv_b) rec.alpha = 0.0;
    return rec;
}

std::vector<StratumData> tip_strata(const ConeSpace& space, double snap_rel) {
    space.validate();
    std::vector<Tip> tips{Tip::lower};
    if (space.warp.has_upper_tip()) tips.push_back(Tip::upper);

    // Narrow window so the O(1) curvature term cannot leak into A1; the
    // quadratic term is fitted explicitly and discarded.
    const double L = space.warp.length();
    const double lo = 1e-4 * L, hi = 2e-2 * L;

    std::vector<StratumData> out;
    for (Tip tip : tips) {
        const int samples = 64;
        std::vector<double> xi(samples), y(samples);
        for (int i = 0; i < samples; ++i) {
            const double d = lo + (hi - lo) * double(i) / double(samples - 1);
            xi[i] = d;
            y[i] = d * d * scal_at(space, tip == Tip::lower ? d : L - d);
        }
        const QuadFit q = fit_quadratic(xi, y);
        double scale = 1.0;
        for (double v : y) scale = std::max(scale, std::abs(v));
        StratumData s;
        s.n = space.constants.n;
        s.f = space.link.f;
        s.A0 = std::abs(q.a0) <= snap_rel * scale ? 0.0 : q.a0;
        s.A1 = std::abs(q.a1) <= snap_rel * scale / lo ? 0.0 : q.a1;
        out.push_back(s);
    }
    return out;
}

std::vector<ModelProblem> local_yamabe_model(std::span<const StratumData> strata) {
    std::vector<ModelProblem> out;
    if (strata.empty()) {
        ModelProblem m;
        m.smooth = true;
        m.flat_model = "S^n (round sphere model at smooth points)";
        m.cylinder_form = "S^n";
        out.push_back(m);
        return out;
    }
    for (const auto& s : strata) {
        s.validate();
        ModelProblem m;
        m.ell = s.ell();
        m.f = s.f;
        std::ostringstream flat, cyl;
        if (m.ell == 0) {
            flat << "C(Z_" << s.f << ")";
            cyl << "R x Z_" << s.f << " (cylinder)";
        } else {
            flat << "R^" << m.ell << " x C(Z_" << s.f << ")";
            cyl << "H^" << (m.ell + 1) << " x Z_" << s.f;
        }
        m.flat_model = flat.str();
        m.cylinder_form = cyl.str();
        out.push_back(m);
    }
    return out;
}

}  // namespace syam
