#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gcw/linalg.hpp"

namespace gcw::detail {

// 4x4 matrices over F_q (row-vector convention) generating ΓL2(q²) after
// field reduction F_{q²}^2 -> F_q^4.
std::vector<Matrix> spread_group_matrices(int q);

// "name(a,b,...)" -> integer arguments; empty when the name has no such suffix.
std::vector<int> name_arguments(const std::string& name, std::string_view prefix);

}  // namespace gcw::detail
