#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcw::data {

// Contents of the files under data/, compiled into the library.
const std::vector<std::pair<std::string_view, std::string_view>>& files();
std::string_view get(std::string_view name);  // throws if absent
// FNV-1a 64-bit digest, hex, used to echo frozen inputs in reports.
std::string digest(std::string_view bytes);

}  // namespace gcw::data
