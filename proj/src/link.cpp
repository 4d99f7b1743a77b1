#include "syam/link.hpp"

#include <cmath>

#include "syam/spectrum.hpp"

namespace syam {

void SpectrumTable::validate() const {
    if (entries.empty()) fail(errc::invalid_argument, "spectrum table is empty");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].multiplicity < 1)
            fail(errc::invalid_argument, "spectrum multiplicities must be >= 1");
        if (i > 0 && entries[i].eigenvalue < entries[i - 1].eigenvalue)
            fail(errc::invalid_argument, "spectrum entries must be ascending");
    }
}

void LinkSpec::validate() const {
    if (f < 1) fail(errc::invalid_space, "link dimension must be >= 1");
    if (!(volume > 0.0)) fail(errc::invalid_space, "link volume must be positive");
    if (laplace_spectrum.empty())
        fail(errc::invalid_space, "link needs a spectrum prefix of -Δ");
    if (laplace_spectrum.front().eigenvalue != 0.0 || laplace_spectrum.front().multiplicity != 1)
        fail(errc::invalid_space, "link spectrum must start with eigenvalue 0, multiplicity 1");
    for (std::size_t i = 1; i < laplace_spectrum.size(); ++i) {
        if (laplace_spectrum[i].eigenvalue < laplace_spectrum[i - 1].eigenvalue)
            fail(errc::invalid_space, "link spectrum must be nondecreasing");
        if (laplace_spectrum[i].multiplicity < 1)
            fail(errc::invalid_space, "link spectrum multiplicities must be >= 1");
    }
}

double unit_sphere_volume(int f) {
    if (f < 1) fail(errc::invalid_argument, "sphere dimension must be >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * (f + 1)) / std::tgamma(0.5 * (f + 1));
}

LinkSpec round_sphere_link(int f, double rho, int j_max) {
    SpectrumTable table = sphere_spectrum(f, rho, j_max);
    LinkSpec link;
    link.f = f;
    link.volume = unit_sphere_volume(f) * std::pow(rho, f);
    link.scal = f > 1 ? double(f) * double(f - 1) / (rho * rho) : 0.0;
    link.laplace_spectrum = table.entries;
    return link;
}

LinkSpec rescale_link(const LinkSpec& link, double delta) {
    if (!(delta > 0.0)) fail(errc::invalid_argument, "metric rescale factor must be positive");
    LinkSpec out = link;
    const double inv2 = 1.0 / (delta * delta);
    out.volume = link.volume * std::pow(delta, link.f);
    out.scal = link.scal * inv2;
    for (auto& e : out.laplace_spectrum) e.eigenvalue *= inv2;
    return out;
}

}  // namespace syam
