#include <sstream>

#include "gcw/constructions.hpp"
#include "gcw/data.hpp"
#include "gcw/error.hpp"
#include "json.hpp"

namespace gcw {

namespace {

// Generator polynomials, coefficients low to high.
const std::vector<int> kGolay23Poly = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};
const std::vector<int> kGolay11Poly = {2, 0, 1, 2, 1, 1};

Matrix cyclic_rows(const std::vector<int>& g, int n) {
  const int k = n - static_cast<int>(g.size()) + 1;
  Matrix m(k, Row(n, 0));
  for (int r = 0; r < k; ++r)
    for (std::size_t j = 0; j < g.size(); ++j) m[r][r + j] = g[j];
  return m;
}

// Appends the coordinate that makes every row sum to zero.
Matrix extend(const FiniteField& f, Matrix m) {
  for (Row& r : m) {
    int s = 0;
    for (int x : r) s = f.add(s, x);
    r.push_back(f.neg(s));
  }
  return m;
}

Code from_words(int n, int q, const std::vector<std::vector<int>>& words, const std::string& name) {
  auto h = std::make_shared<HammingGraph>(n, q);
  std::vector<Vertex> ids;
  for (const auto& w : words) ids.push_back(h->from_digits(w));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Code(h, std::move(ids), std::nullopt, name);
}

std::vector<std::vector<int>> puncture(std::vector<std::vector<int>> words, int coord) {
  for (auto& w : words) w.erase(w.begin() + coord);
  return words;
}

std::vector<std::vector<int>> hadamard_words() {
  std::vector<std::vector<int>> out;
  for (const auto& row : hadamard12_matrix()) {
    std::vector<int> w, c;
    for (int x : row) {
      w.push_back(x > 0 ? 0 : 1);
      c.push_back(x > 0 ? 1 : 0);
    }
    out.push_back(w);
    out.push_back(c);
  }
  return out;
}

std::vector<std::vector<int>> nordstrom_robinson_words() {
  std::vector<std::vector<int>> out;
  std::istringstream in{std::string(data::get("nordstrom_robinson16.txt"))};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<int> w;
    for (char ch : line)
      if (ch == '0' || ch == '1') w.push_back(ch - '0');
    if (w.size() != 16) throw Error("malformed Nordstrom-Robinson data line");
    out.push_back(w);
  }
  return out;
}

Code build(const std::string& name) {
  const FiniteField f2 = FiniteField::make(2, 1), f3 = FiniteField::make(3, 1);
  if (name == "golay23") return linear_code(f2, cyclic_rows(kGolay23Poly, 23), name);
  if (name == "golay24") return linear_code(f2, extend(f2, cyclic_rows(kGolay23Poly, 23)), name);
  if (name == "golay11") return linear_code(f3, cyclic_rows(kGolay11Poly, 11), name);
  if (name == "golay12") return linear_code(f3, extend(f3, cyclic_rows(kGolay11Poly, 11)), name);
  if (name == "hadamard12") return from_words(12, 2, hadamard_words(), name);
  if (name == "punct_hadamard11") return from_words(11, 2, puncture(hadamard_words(), 0), name);
  if (name == "even_punct_hadamard11") {
    std::vector<std::vector<int>> even;
    for (auto& w : puncture(hadamard_words(), 0))
      if (std::count(w.begin(), w.end(), 1) % 2 == 0) even.push_back(w);
    return from_words(11, 2, even, name);
  }
  if (name == "nordstrom_robinson16") return from_words(16, 2, nordstrom_robinson_words(), name);
  if (name == "nordstrom_robinson15") return from_words(15, 2, puncture(nordstrom_robinson_words(), 0), name);
  throw UsageError("unknown classical code: " + name);
}

}  // namespace

std::vector<std::vector<int>> hadamard12_matrix() {
  std::vector<std::vector<int>> m;
  std::istringstream in{std::string(data::get("hadamard12.txt"))};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<int> row;
    for (char ch : line) {
      if (ch == '+') row.push_back(1);
      if (ch == '-') row.push_back(-1);
    }
    if (row.size() != 12) throw Error("malformed Hadamard data line");
    m.push_back(row);
  }
  if (m.size() != 12) throw Error("Hadamard data must have 12 rows");
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      int dot = 0;
      for (int k = 0; k < 12; ++k) dot += m[i][k] * m[j][k];
      if (dot != (i == j ? 12 : 0)) throw ImplementationContradiction("stored matrix is not Hadamard");
    }
  return m;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto j = nlohmann::json::parse(data::get("catalog.json"));
    for (const auto& e : j["codes"])
      out.push_back(CatalogEntry{e["name"], e["n"], e["q"], e["size"], e["delta"], e["rho"], e["provenance"]});
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UsageError("unknown catalog code: " + name);
}

Code classical_code(const std::string& name) {
  const CatalogEntry& e = catalog_entry(name);
  Code c = build(name);
  if (c.length() != e.n || c.hamming()->q() != e.q || c.size() != e.size)
    throw ImplementationContradiction("catalog code " + name + " has unexpected length, alphabet or size");
  if (min_distance(c) != e.delta)
    throw ImplementationContradiction("catalog code " + name + " has unexpected minimum distance");
  return c;
}

}  // namespace gcw
