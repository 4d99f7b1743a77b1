#include "syam/warp.hpp"

#include <algorithm>
#include <cmath>

namespace syam {

WarpProfile WarpProfile::spindle(double rho, double length) {
    if (!(rho > 0.0)) fail(errc::invalid_space, "spindle tip slope must be positive");
    if (!(length > 0.0)) fail(errc::invalid_space, "spindle length must be positive");
    WarpProfile w;
    w.kind_ = Kind::spindle;
    w.rho_ = rho;
    w.length_ = length;
    return w;
}

WarpProfile WarpProfile::cone(double rho, double length) {
    if (!(rho > 0.0)) fail(errc::invalid_space, "cone slope must be positive");
    if (!(length > 0.0)) fail(errc::invalid_space, "cone length must be positive");
    WarpProfile w;
    w.kind_ = Kind::cone;
    w.rho_ = rho;
    w.length_ = length;
    return w;
}

WarpProfile WarpProfile::sampled(std::vector<double> x, std::vector<double> psi, double length) {
    if (!(length > 0.0)) fail(errc::invalid_space, "sampled warp length must be positive");
    if (x.size() != psi.size() || x.size() < 4)
        fail(errc::invalid_space, "sampled warp needs at least 4 matching samples");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0 || x[i] >= length)
            fail(errc::invalid_space, "sample abscissae must lie in (0, L)");
        if (i > 0 && x[i] <= x[i - 1])
            fail(errc::invalid_space, "sample abscissae must be strictly increasing");
        if (!(psi[i] > 0.0)) fail(errc::invalid_space, "warp samples must be positive");
    }

    WarpProfile w;
    w.kind_ = Kind::sampled;
    w.length_ = length;
    w.sx_ = std::move(x);
    w.spsi_ = std::move(psi);

    const std::size_t m = w.sx_.size();
    w.sd1_.resize(m);
    w.sd2_.resize(m);
    auto stencil = [&](std::size_t a, std::size_t b, std::size_t c, double at, double& d1,
                       double& d2) {
        // second-order three-point derivatives at `at` from nodes a, b, c
        const double xa = w.sx_[a], xb = w.sx_[b], xc = w.sx_[c];
        const double fa = w.spsi_[a], fb = w.spsi_[b], fc = w.spsi_[c];
        const double la = (2.0 * at - xb - xc) / ((xa - xb) * (xa - xc));
        const double lb = (2.0 * at - xa - xc) / ((xb - xa) * (xb - xc));
        const double lc = (2.0 * at - xa - xb) / ((xc - xa) * (xc - xb));
        d1 = fa * la + fb * lb + fc * lc;
        d2 = 2.0 * (fa / ((xa - xb) * (xa - xc)) + fb / ((xb - xa) * (xb - xc)) +
                    fc / ((xc - xa) * (xc - xb)));
    };
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = std::min(std::max<std::size_t>(i, 1), m - 2);
        stencil(j - 1, j, j + 1, w.sx_[i], w.sd1_[i], w.sd2_[i]);
    }

    // tip slope from the first sample pair, used by cone-window detection
    w.rho_ = w.spsi_.front() / w.sx_.front();
    return w;
}

double WarpProfile::interp(const std::vector<double>& table, double x) const {
    const auto& xs = sx_;
    if (x <= xs.front()) {
        const double t = (x - xs.front()) / (xs[1] - xs[0]);
        return table.front() + t * (table[1] - table[0]);
    }
    if (x >= xs.back()) {
        const std::size_t m = xs.size();
        const double t = (x - xs[m - 2]) / (xs[m - 1] - xs[m - 2]);
        return table[m - 2] + t * (table[m - 1] - table[m - 2]);
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return table[i - 1] + t * (table[i] - table[i - 1]);
}

double WarpProfile::value(double x) const {
    switch (kind_) {
        case Kind::spindle: {
            const double k = M_PI / length_;
            return rho_ / k * std::sin(k * x);
        }
        case Kind::cone:
            return rho_ * x;
        case Kind::sampled:
            return interp(spsi_, x);
    }
    return 0.0;
}

double WarpProfile::d1(double x) const {
    switch (kind_) {
        case Kind::spindle:
            return rho_ * std::cos(M_PI / length_ * x);
        case Kind::cone:
            return rho_;
        case Kind::sampled:
            return interp(sd1_, x);
    }
    return 0.0;
}

double WarpProfile::d2(double x) const {
    switch (kind_) {
        case Kind::spindle: {
            const double k = M_PI / length_;
            return -rho_ * k * std::sin(k * x);
        }
        case Kind::cone:
            return 0.0;
        case Kind::sampled:
            return interp(sd2_, x);
    }
    return 0.0;
}

double WarpProfile::cone_deviation(double x_lo, double x_hi) const {
    if (!(0.0 < x_lo && x_lo < x_hi && x_hi <= length_))
        fail(errc::invalid_argument, "cone window must satisfy 0 < x_lo < x_hi <= L");
    double worst = 0.0;
    const int probes = 101;
    for (int i = 0; i < probes; ++i) {
        const double x = x_lo + (x_hi - x_lo) * double(i) / double(probes - 1);
        worst = std::max(worst, std::abs(value(x) / (rho_ * x) - 1.0));
    }
    return worst;
}

}  // namespace syam
