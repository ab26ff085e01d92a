#pragma once

#include <map>
#include <string>
#include <string_view>

namespace gcw {

// "name:k1=v1,k2=v2" split into a name and integer-or-text parameters.
struct SpecString {
  std::string name;
  std::map<std::string, std::string> params;

  static SpecString parse(std::string_view text);
  std::string format() const;  // canonical: keys in stored order
  long long integer(const std::string& key) const;
  long long integer(const std::string& key, long long fallback) const;
  bool has(const std::string& key) const { return params.count(key) > 0; }
};

}  // namespace gcw
