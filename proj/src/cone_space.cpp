#include "syam/cone_space.hpp"

namespace syam {

void ConeSpace::validate() const {
    link.validate();
    if (constants.n != link.f + 1)
        fail(errc::invalid_space, "ambient dimension must equal link dimension + 1");
}

ConeSpace ConeSpace::make(int n, LinkSpec link, WarpProfile warp) {
    ConeSpace space{YamabeConstants::for_dimension(n), std::move(link), std::move(warp)};
    space.validate();
    return space;
}

void StratumData::validate() const {
    if (f < 1) fail(errc::invalid_argument, "stratum link dimension must be >= 1");
    if (ell() < 0) fail(errc::invalid_argument, "stratum dimension n - f - 1 must be >= 0");
}

}  // namespace syam
