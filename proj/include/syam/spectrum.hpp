#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syam/link.hpp"

namespace syam {

/// Spectrum of -Δ on the round sphere S^f(rho): eigenvalues j(j+f-1)/rho^2
/// with the spherical-harmonic multiplicities.
SpectrumTable sphere_spectrum(int f, double rho, int j_max);

/// Spectrum of -L^m_k = -Δ_k + c(m) scal_k on a homogeneous link.
SpectrumTable family_spectrum(const LinkSpec& link, int m);

struct FamilyComparison {
    double A = 0.0;            // c(p)/c(q)
    double B = 0.0;            // 1 - A
    double max_abs_dev = 0.0;  // worst deviation of mu_j(p) = A mu_j(q) + B lambda_j
};

/// Decomposition -L^p = A(-L^q) + B(-Δ) with A, B > 0, verified on the table.
FamilyComparison family_compare(const LinkSpec& link, int p, int q);

struct RootPair {
    int mode = 0;
    double nu_minus = 0.0;
    double nu_plus = 0.0;
};

enum class RootKind { conic, edge };

struct IndicialRoots {
    std::vector<RootPair> roots;
    RootKind kind = RootKind::conic;
    int edge_f = 0;                    // link dimension f' for edge roots
    bool degenerate_zero_mode = false; // lowest eigenvalue vanished (double root)
};

/// Conic indicial roots nu_j^± = ±sqrt(mu_j) from the spectrum of -L^n_k.
IndicialRoots conic_indicial_roots(const SpectrumTable& family_n);

/// Edge indicial roots nu_j^± = -(f'-1)/2 ± sqrt((f'-1)^2/4 + mu_j) from the
/// shifted spectrum of -L^n_{k'} - c(n) f'(f'-1).
IndicialRoots edge_indicial_roots(int f_prime, const SpectrumTable& shifted);

enum class PositivityClass { strictly_above, equals_threshold, below };

struct PositivityReport {
    PositivityClass classification = PositivityClass::below;
    double lambda0 = 0.0;
    double threshold = 0.0;   // c(n) f(f-1)
    double tolerance = 0.0;   // relative comparison tolerance
    bool strictly_positive = false;  // lambda0 > 0
};

/// Classify the lowest eigenvalue of -L^n_k against 0 and against c(n) f(f-1).
PositivityReport positivity_check(const SpectrumTable& family_n, const YamabeConstants& consts,
                                  int f, double rel_tol = 1e-9);

/// Leading solution exponent at a normalized conic tip: (delta-1)(n-2)/2.
double predicted_tip_exponent(double delta, const YamabeConstants& consts);

/// delta with delta^{-2} lambda0 = c(n) f(f-1); requires lambda0 > 0 and f >= 2.
double delta_for_lambda0(double lambda0, const YamabeConstants& consts, int f);

struct NormalizationResult {
    double delta = 0.0;
    std::string xi_map;      // description of the radial change xi = x^delta/delta
    LinkSpec rescaled_link;  // metric scaled by delta^2
};

/// Conformal cone normalization: find delta from the lowest eigenvalue of
/// -L^n_k and rescale the link metric by delta^2.
NormalizationResult delta_normalization(const LinkSpec& link, const YamabeConstants& consts);

}  // namespace syam
