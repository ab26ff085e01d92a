#include "gcw/data.hpp"

#include <cstdint>
#include <cstdio>

#include "gcw/error.hpp"

namespace gcw::data {

std::string_view get(std::string_view name) {
  for (const auto& [n, c] : files())
    if (n == name) return c;
  throw Error("missing data file: " + std::string(name));
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gcw::data
