#pragma once

#include <string>
#include <vector>

#include "syam/constants.hpp"
#include "syam/link.hpp"
#include "syam/warp.hpp"

namespace syam {

/// Compact warped-product space [0, L] x Z with homogeneous link Z.
struct ConeSpace {
    YamabeConstants constants;
    LinkSpec link;
    WarpProfile warp;

    void validate() const;  // n = f + 1 and consistent component data

    static ConeSpace make(int n, LinkSpec link, WarpProfile warp);
};

enum class Tip { lower, upper };  // x = 0 and x = L

/// Per-stratum curvature record: scal_g = A0/x^2 + A1/x + O(1) near the stratum.
struct StratumData {
    int n = 0;   // ambient dimension
    int f = 0;   // link dimension of the stratum
    double A0 = 0.0;
    double A1 = 0.0;

    int ell() const { return n - f - 1; }  // stratum dimension
    void validate() const;
};

/// Fitted conic expansion of the curvature over a tip window.
struct CurvatureExpansion {
    double A0 = 0.0;
    double A1 = 0.0;
    double remainder_bound = 0.0;       // sup |x^2 scal - A0 - A1 x| on the window
    double remainder_scal_bound = 0.0;  // sup |scal - A0/x^2 - A1/x| on the window
    double window_lo = 0.0;
    double window_hi = 0.0;
};

struct AdmissibilityRecord {
    bool iv_a = false;
    bool iv_b = false;
    double alpha = 0.0;  // decay rate used by the iv_b verdict
    bool iv_c = false;
};

struct ModelProblem {
    int ell = 0;
    int f = 0;
    bool smooth = false;       // round-sphere model at a smooth point
    std::string flat_model;    // R^ell x C(Z)
    std::string cylinder_form; // H^{ell+1} x Z (cylinder R x Z when ell = 0)
};

}  // namespace syam
