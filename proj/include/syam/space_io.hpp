#pragma once

#include <string>
#include <vector>

#include "syam/cone_space.hpp"

namespace syam {

/// Parse a space description document (strict: unknown keys are rejected).
///
/// {
///   "dimension": 4,
///   "link": { "f": 3, "volume": 19.74, "scal": 6.0,
///             "spectrum": [[0.0, 1], [3.0, 4], ...] },
///   "warp": { "kind": "spindle", "rho": 0.5, "L": 3.141592653589793 }
/// }
///
/// warp kinds: "spindle" (rho, L), "cone" (rho, L),
/// "sampled" (L, "x": [...], "psi": [...]).
ConeSpace parse_space(const std::string& json_text);
ConeSpace load_space(const std::string& path);

/// Strata description: { "strata": [ { "n": 6, "f": 2, "A0": 0.0, "A1": 1.0 }, ... ] }
std::vector<StratumData> parse_strata(const std::string& json_text);
std::vector<StratumData> load_strata(const std::string& path);

}  // namespace syam
