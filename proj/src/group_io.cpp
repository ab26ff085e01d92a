#include <cstdint>

#include "gcw/action.hpp"
#include "gcw/error.hpp"
#include "gcw/symmetry.hpp"
#include "json.hpp"

namespace gcw {

namespace {

using nlohmann::json;

Perm perm_from(const json& j, std::size_t degree, const char* what) {
  if (!j.is_array() || j.size() != degree)
    throw UsageError(std::string(what) + ": expected an image array of length " + std::to_string(degree));
  std::vector<Point> img;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw UsageError(std::string(what) + ": images must be integers");
    img.push_back(x.get<Point>());
  }
  try {
    return Perm(std::move(img));
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not a permutation");
  }
}

Matrix matrix_from(const json& j, const FiniteField& f, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size) throw UsageError("matrix: expected " + std::to_string(size) + " rows");
  Matrix m;
  for (const auto& r : j) {
    if (!r.is_array() || static_cast<int>(r.size()) != size) throw UsageError("matrix: rows must be square");
    Row row;
    for (const auto& x : r) {
      const int a = x.get<int>();
      if (a < 0 || a >= f.q()) throw UsageError("matrix: entry outside the field");
      row.push_back(a);
    }
    m.push_back(std::move(row));
  }
  if (det(f, m) == 0) throw UsageError("matrix: singular");
  return m;
}

// x -> x^φ M with M monomial, as a wreath element.
Perm hamming_semilinear(const HammingGraph& h, const FiniteField& f, const Matrix& m, int k) {
  const int n = h.n(), q = h.q();
  std::vector<Perm> base;
  std::vector<Point> top(n);
  for (int i = 0; i < n; ++i) {
    int j = -1;
    for (int c = 0; c < n; ++c)
      if (m[i][c] != 0) {
        if (j >= 0) throw PreconditionError("matrix is not monomial, so it is not a Hamming automorphism", "row " + std::to_string(i));
        j = c;
      }
    top[i] = j;
    std::vector<Point> img(q);
    for (int a = 0; a < q; ++a) img[a] = f.mul(f.frobenius(a, k), m[i][j]);
    base.push_back(Perm(std::move(img)));
  }
  return wreath_from_parts(base, Perm(std::move(top)));
}

Perm forms_semilinear(const FormsGraph& g, const Matrix& m, int k) {
  const auto& f = g.field();
  if (g.vertex_count() > (Vertex{1} << 22)) throw BudgetExceeded("matrix groups on forms graphs need |V| <= 2^22");
  std::vector<Point> img(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Matrix x = g.matrix(v);
    for (auto& r : x)
      for (auto& a : r) a = f.frobenius(a, k);
    img[v] = static_cast<Point>(g.from_matrix(multiply(f, x, m)));
  }
  return Perm(std::move(img));
}

}  // namespace

GraphGroup read_group_json(const GraphPtr& g, std::string_view text, std::string name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("representation") || !j.contains("generators") || !j["generators"].is_array())
    throw UsageError("group file needs \"representation\" and \"generators\"");
  const std::string rep = j["representation"].get<std::string>();
  if (name.empty() && j.contains("name")) name = j["name"].get<std::string>();
  std::vector<Perm> gens;
  try {
    if (rep == "wreath") {
      const auto* h = dynamic_cast<const HammingGraph*>(g.get());
      if (!h) throw UsageError("wreath generators need a Hamming host");
      for (const auto& x : j["generators"]) {
        if (!x.contains("base") || !x.contains("top")) throw UsageError("wreath generator needs base and top");
        if (!x["base"].is_array() || static_cast<int>(x["base"].size()) != h->n())
          throw UsageError("wreath: base needs " + std::to_string(h->n()) + " alphabet permutations");
        std::vector<Perm> base;
        for (const auto& b : x["base"]) base.push_back(perm_from(b, h->q(), "wreath base"));
        gens.push_back(wreath_from_parts(base, perm_from(x["top"], h->n(), "wreath top")));
      }
      return GraphGroup(g, GroupKind::wreath, std::move(gens), name);
    }
    if (rep == "subset") {
      const auto* s = dynamic_cast<const SubsetGraph*>(g.get());
      if (!s) throw UsageError("subset generators need a Johnson or Kneser host");
      for (const auto& x : j["generators"]) gens.push_back(perm_from(x, s->codec().v(), "subset"));
      return GraphGroup(g, GroupKind::subset, std::move(gens), name);
    }
    if (rep == "vertex") {
      for (const auto& x : j["generators"]) gens.push_back(perm_from(x, g->vertex_count(), "vertex"));
      return GraphGroup(g, GroupKind::vertex, std::move(gens), name);
    }
    if (rep == "matrix") {
      if (!j.contains("field")) throw UsageError("matrix groups need \"field\"");
      const auto [p, d] = prime_power(j["field"].get<std::uint64_t>());
      if (p == 0) throw UsageError("matrix field size is not a prime power");
      FiniteField f = FiniteField::make(p, d);
      if (const auto* h = dynamic_cast<const HammingGraph*>(g.get())) {
        if (h->q() != f.q()) throw UsageError("matrix field differs from the Hamming alphabet");
        for (const auto& x : j["generators"])
          gens.push_back(hamming_semilinear(*h, f, matrix_from(x.at("entries"), f, h->n()), x.value("frobenius_power", 0)));
        return GraphGroup(g, GroupKind::wreath, std::move(gens), name);
      }
      if (const auto* fg = dynamic_cast<const FormsGraph*>(g.get())) {
        if (fg->field().q() != f.q()) throw UsageError("matrix field differs from the forms graph field");
        for (const auto& x : j["generators"])
          gens.push_back(forms_semilinear(*fg, matrix_from(x.at("entries"), f, fg->cols()), x.value("frobenius_power", 0)));
        return GraphGroup(g, GroupKind::vertex, std::move(gens), name);
      }
      throw UsageError("matrix generators need a Hamming or forms host");
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed group file: ") + e.what());
  }
  throw UsageError("unknown representation '" + rep + "'");
}

std::string write_group_json(const GraphGroup& g) {
  json gens = json::array();
  const auto* h = dynamic_cast<const HammingGraph*>(&g.graph());
  for (const Perm& x : g.generators()) {
    if (g.kind() == GroupKind::wreath && h) {
      WreathElement w = WreathElement::from_domain(x, h->n(), h->q());
      json base = json::array();
      for (const Perm& b : w.base) base.push_back(b.images());
      gens.push_back({{"base", base}, {"top", w.top.images()}});
    } else {
      gens.push_back(x.images());
    }
  }
  json j = {{"representation", to_string(g.kind())}, {"generators", gens}};
  if (!g.name().empty()) j["name"] = g.name();
  return j.dump();
}

}  // namespace gcw
