#pragma once

#include <string>

#include "membrane/types.hpp"

namespace membrane {

// Flat profile format: one `# key=value;...` metadata comment, a fixed
// header row `t,rho,psi,dpsi,z,I,omega_eff,Q_scale`, then one row per
// sample with 17-significant-digit decimals.  Undefined quantities are
// empty cells.  Deterministic and exactly round-trippable.
std::string profile_to_csv(const Profile& profile);
Profile profile_from_csv(const std::string& text);

void write_profile_csv(const std::string& path, const Profile& profile);
Profile read_profile_csv(const std::string& path);

// 17-significant-digit decimal for a double; empty string for NaN when
// `empty_nan` is set.
std::string format_double(double v, bool empty_nan = false);

}  // namespace membrane
