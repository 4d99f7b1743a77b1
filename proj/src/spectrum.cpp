#include "syam/spectrum.hpp"

#include <cmath>
#include <sstream>

namespace syam {

namespace {

// C(n, k) for the small arguments the multiplicity formula needs.
std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

SpectrumTable sphere_spectrum(int f, double rho, int j_max) {
    if (f < 1) fail(errc::invalid_argument, "sphere dimension must be >= 1");
    if (!(rho > 0.0)) fail(errc::invalid_argument, "sphere radius must be positive");
    if (j_max < 0) fail(errc::invalid_argument, "j_max must be >= 0");

    SpectrumTable table;
    table.op = OperatorTag::laplace;
    table.entries.reserve(j_max + 1);
    for (int j = 0; j <= j_max; ++j) {
        SpectrumEntry e;
        e.eigenvalue = double(j) * double(j + f - 1) / (rho * rho);
        e.multiplicity = binomial(f + j, j) - binomial(f + j - 2, j - 2);
        table.entries.push_back(e);
    }
    return table;
}

SpectrumTable family_spectrum(const LinkSpec& link, int m) {
    link.validate();
    if (!link.homogeneous)
        fail(errc::unsupported, "operator family needs a constant-curvature link");
    if (m < 3) fail(errc::invalid_argument, "operator family requires m >= 3");

    const double shift = conformal_coefficient(m) * link.scal;
    SpectrumTable table;
    table.op = OperatorTag::conformal_family;
    table.family_m = m;
    table.entries.reserve(link.laplace_spectrum.size());
    for (const auto& e : link.laplace_spectrum)
        table.entries.push_back({e.eigenvalue + shift, e.multiplicity});
    return table;
}

FamilyComparison family_compare(const LinkSpec& link, int p, int q) {
    if (p < 3 || q < 3) fail(errc::invalid_argument, "family indices must be >= 3");
    if (p >= q)
        fail(errc::invalid_argument,
             "family comparison requires p < q (A, B positivity fails otherwise)");

    FamilyComparison cmp;
    cmp.A = conformal_coefficient(p) / conformal_coefficient(q);
    cmp.B = 1.0 - cmp.A;

    const SpectrumTable sp = family_spectrum(link, p);
    const SpectrumTable sq = family_spectrum(link, q);
    for (std::size_t j = 0; j < sp.entries.size(); ++j) {
        const double lhs = sp.entries[j].eigenvalue;
        const double rhs = cmp.A * sq.entries[j].eigenvalue +
                           cmp.B * link.laplace_spectrum[j].eigenvalue;
        cmp.max_abs_dev = std::max(cmp.max_abs_dev, std::abs(lhs - rhs));
    }
    return cmp;
}

IndicialRoots conic_indicial_roots(const SpectrumTable& family_n) {
    family_n.validate();
    IndicialRoots out;
    out.kind = RootKind::conic;
    out.roots.reserve(family_n.entries.size());
    for (std::size_t j = 0; j < family_n.entries.size(); ++j) {
        const double mu = family_n.entries[j].eigenvalue;
        if (mu < 0.0) {
            std::ostringstream msg;
            msg << "complex indicial roots: eigenvalue " << mu << " of mode " << j
                << " is negative (positivity hypothesis fails)";
            fail(errc::numeric_failure, msg.str());
        }
        const double root = std::sqrt(mu);
        out.roots.push_back({static_cast<int>(j), -root, root});
        if (j == 0 && mu == 0.0) out.degenerate_zero_mode = true;
    }
    return out;
}

IndicialRoots edge_indicial_roots(int f_prime, const SpectrumTable& shifted) {
    shifted.validate();
    if (f_prime < 1) fail(errc::invalid_argument, "edge link dimension must be >= 1");

    const double h = 0.5 * double(f_prime - 1);
    IndicialRoots out;
    out.kind = RootKind::edge;
    out.edge_f = f_prime;
    out.roots.reserve(shifted.entries.size());
    for (std::size_t j = 0; j < shifted.entries.size(); ++j) {
        const double disc = h * h + shifted.entries[j].eigenvalue;
        if (disc < 0.0) {
            std::ostringstream msg;
            msg << "complex edge indicial roots: discriminant " << disc << " of mode " << j
                << " is negative";
            fail(errc::numeric_failure, msg.str());
        }
        const double s = std::sqrt(disc);
        out.roots.push_back({static_cast<int>(j), -h - s, -h + s});
        if (j == 0 && disc == 0.0) out.degenerate_zero_mode = true;
    }
    return out;
}

PositivityReport positivity_check(const SpectrumTable& family_n, const YamabeConstants& consts,
                                  int f, double rel_tol) {
    family_n.validate();
    if (f < 1) fail(errc::invalid_argument, "link dimension must be >= 1");

    PositivityReport rep;
    rep.lambda0 = family_n.entries.front().eigenvalue;
    rep.threshold = consts.c * double(f) * double(f - 1);
    rep.tolerance = rel_tol;
    rep.strictly_positive = rep.lambda0 > 0.0;

    const double scale = std::max({std::abs(rep.lambda0), std::abs(rep.threshold), 1e-300});
    if (std::abs(rep.lambda0 - rep.threshold) <= rel_tol * scale)
        rep.classification = PositivityClass::equals_threshold;
    else if (rep.lambda0 > rep.threshold)
        rep.classification = PositivityClass::strictly_above;
    else
        rep.classification = PositivityClass::below;
    return rep;
}

double predicted_tip_exponent(double delta, const YamabeConstants& consts) {
    if (!(delta > 0.0)) fail(errc::invalid_argument, "delta must be positive");
    return (delta - 1.0) * 0.5 * double(consts.n - 2);
}

double delta_for_lambda0(double lambda0, const YamabeConstants& consts, int f) {
    if (f < 2) fail(errc::invalid_argument, "cone normalization requires link dimension >= 2");
    if (!(lambda0 > 0.0))
        fail(errc::numeric_failure,
             "cone normalization impossible: operator is not strictly positive");
    return std::sqrt(lambda0 / (consts.c * double(f) * double(f - 1)));
}

NormalizationResult delta_normalization(const LinkSpec& link, const YamabeConstants& consts) {
    const SpectrumTable fam = family_spectrum(link, consts.n);
    NormalizationResult out;
    out.delta = delta_for_lambda0(fam.entries.front().eigenvalue, consts, link.f);
    {
        std::ostringstream oss;
        oss << "xi = x^" << out.delta << "/" << out.delta;
        out.xi_map = oss.str();
    }
    out.rescaled_link = rescale_link(link, out.delta);
    return out;
}

}  // namespace syam
