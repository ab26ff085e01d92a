#include "gcw/spec.hpp"

#include <charconv>

#include "gcw/error.hpp"
#include "gcw/graph.hpp"
#include "gcw/incidence.hpp"

namespace gcw {

SpecString SpecString::parse(std::string_view text) {
  SpecString s;
  auto colon = text.find(':');
  s.name = std::string(text.substr(0, colon));
  if (s.name.empty()) throw UsageError("empty spec name");
  if (colon == std::string_view::npos) return s;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw UsageError("bad parameter '" + std::string(item) + "'");
    auto key = std::string(item.substr(0, eq));
    if (s.params.count(key)) throw UsageError("duplicate parameter '" + key + "'");
    s.params[key] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return s;
}

std::string SpecString::format() const {
  std::string out = name;
  bool first = true;
  for (const auto& [k, v] : params) {
    out += first ? ":" : ",";
    out += k + "=" + v;
    first = false;
  }
  return out;
}

long long SpecString::integer(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError("missing parameter '" + key + "' in " + name);
  long long v = 0;
  auto [p, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
  if (ec != std::errc() || p != it->second.data() + it->second.size())
    throw UsageError("parameter '" + key + "' is not an integer");
  return v;
}

long long SpecString::integer(const std::string& key, long long fallback) const {
  return has(key) ? integer(key) : fallback;
}

GraphPtr make_graph(std::string_view text) {
  auto s = SpecString::parse(text);
  auto i = [&](const char* k) { return static_cast<int>(s.integer(k)); };
  auto expect = [&](std::initializer_list<const char*> keys) {
    if (s.params.size() != keys.size()) throw UsageError("wrong parameters for graph family " + s.name);
    for (auto k : keys)
      if (!s.has(k)) throw UsageError(std::string("missing parameter '") + k + "' for " + s.name);
  };
  if (s.name == "hamming") {
    expect({"n", "q"});
    if (i("n") < 2 || i("q") < 2) throw UsageError("Hamming graph needs n, q >= 2");
    return std::make_shared<HammingGraph>(i("n"), i("q"));
  }
  if (s.name == "johnson") {
    expect({"v", "k"});
    if (i("k") < 2 || i("k") > i("v") - 1) throw UsageError("Johnson graph needs 2 <= k <= v-1");
    return std::make_shared<JohnsonGraph>(i("v"), i("k"));
  }
  if (s.name == "kneser") {
    expect({"v", "k"});
    if (i("k") < 2 || 2 * i("k") > i("v") - 1) throw UsageError("Kneser graph needs 2 <= k <= (v-1)/2");
    return std::make_shared<KneserGraph>(i("v"), i("k"));
  }
  if (s.name == "odd") {
    expect({"k"});
    return std::make_shared<KneserGraph>(2 * i("k") + 1, i("k"));
  }
  if (s.name == "cycle") {
    expect({"m"});
    return std::make_shared<CycleGraph>(i("m"));
  }
  if (s.name == "forms") {
    expect({"m", "n", "q"});
    return std::make_shared<FormsGraph>(i("m"), i("n"), i("q"));
  }
  if (s.name == "grassmann") {
    expect({"d", "k", "q"});
    return grassmann_graph(i("d"), i("k"), i("q"));
  }
  if (s.name == "w3") {
    expect({"q"});
    return w3_graph(i("q"));
  }
  if (s.name == "pg3") {
    expect({"q"});
    return pg3_graph(i("q"));
  }
  throw UsageError("unknown graph family '" + s.name + "'");
}

}  // namespace gcw
