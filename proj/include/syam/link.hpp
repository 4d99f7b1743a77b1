#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syam/constants.hpp"
#include "syam/errors.hpp"

namespace syam {

struct SpectrumEntry {
    double eigenvalue = 0.0;
    std::int64_t multiplicity = 1;
};

enum class OperatorTag {
    laplace,           // -Δ_k on the link
    conformal_family,  // -Δ_k + c(m) scal_k
    edge_shifted       // conformal family minus c(n) f'(f'-1)
};

/// Truncated spectrum of one of the link operators, ascending in the eigenvalue.
struct SpectrumTable {
    std::vector<SpectrumEntry> entries;
    OperatorTag op = OperatorTag::laplace;
    int family_m = 0;  // set when op == conformal_family

    int truncation() const { return static_cast<int>(entries.size()); }
    void validate() const;
};

/// Homogeneous link (Z, k): dimension, volume, constant scalar curvature and
/// a finite prefix of the spectrum of -Δ_k.
struct LinkSpec {
    int f = 0;
    double volume = 0.0;
    double scal = 0.0;
    std::vector<SpectrumEntry> laplace_spectrum;
    bool homogeneous = true;

    void validate() const;
};

/// Round sphere S^f of radius rho with j_max+1 spectral modes.
LinkSpec round_sphere_link(int f, double rho, int j_max);

/// Link with metric multiplied by delta^2: volume scales by delta^f,
/// curvature and eigenvalues by delta^{-2}.
LinkSpec rescale_link(const LinkSpec& link, double delta);

/// Volume of the unit round sphere S^f.
double unit_sphere_volume(int f);

}  // namespace syam
