#pragma once

#include "syam/errors.hpp"

namespace syam {

/// Dimensional constants of the conformal problem in ambient dimension n.
struct YamabeConstants {
    int n = 0;         // ambient dimension, >= 3
    double c = 0.0;    // (n-2)/(4(n-1))
    double tau = 0.0;  // critical nonlinearity exponent (n+2)/(n-2)
    double crit = 0.0; // critical Sobolev exponent 2n/(n-2)

    static YamabeConstants for_dimension(int n) {
        if (n < 3) fail(errc::invalid_argument, "ambient dimension must be >= 3");
        YamabeConstants k;
        k.n = n;
        k.c = double(n - 2) / (4.0 * double(n - 1));
        k.tau = double(n + 2) / double(n - 2);
        k.crit = 2.0 * double(n) / double(n - 2);
        return k;
    }
};

/// c(m) = (m-2)/(4(m-1)) for the operator family indexed by m.
inline double conformal_coefficient(int m) {
    if (m < 3) fail(errc::invalid_argument, "conformal coefficient requires m >= 3");
    return double(m - 2) / (4.0 * double(m - 1));
}

}  // namespace syam
