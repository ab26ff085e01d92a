#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "constructions_internal.hpp"
#include "gcw/action.hpp"
#include "gcw/constructions.hpp"
#include "gcw/error.hpp"

namespace gcw {

namespace {

// Transposition and full cycle on `pts` (as a permutation of degree `deg`).
std::vector<Perm> sym_on(const std::vector<Point>& pts, std::size_t deg) {
  std::vector<Perm> out;
  if (pts.size() < 2) return out;
  std::vector<Point> t(deg), c(deg);
  std::iota(t.begin(), t.end(), 0);
  std::iota(c.begin(), c.end(), 0);
  std::swap(t[pts[0]], t[pts[1]]);
  for (std::size_t i = 0; i < pts.size(); ++i) c[pts[i]] = pts[(i + 1) % pts.size()];
  out.push_back(Perm(t));
  if (pts.size() > 2) out.push_back(Perm(c));
  return out;
}

std::vector<Point> range_points(int from, int to) {
  std::vector<Point> v;
  for (int i = from; i < to; ++i) v.push_back(static_cast<Point>(i));
  return v;
}

// GL_d(2) generators as maps on d-bit integers: a transvection and a coordinate cycle.
std::vector<std::function<int(int)>> gl2_bit_maps(int d) {
  std::vector<std::function<int(int)>> out;
  if (d < 2) return out;
  out.push_back([](int x) { return x ^ ((x >> 1) & 1); });
  out.push_back([d](int x) { return ((x << 1) | (x >> (d - 1))) & ((1 << d) - 1); });
  return out;
}

const HammingGraph& hamming_of(const Code& c) {
  const HammingGraph* h = c.hamming();
  if (!h) throw PreconditionError("group needs a Hamming host", c.graph().spec());
  return *h;
}

std::vector<int> args_of(const Code& c, std::string_view prefix, std::size_t min_count) {
  auto a = detail::name_arguments(c.name(), prefix);
  if (a.size() < min_count)
    throw UsageError("group " + std::string(prefix) + "_aut needs a code built by " + std::string(prefix));
  return a;
}

}  // namespace

std::vector<Perm> agl2_generators(int d, bool include_translations) {
  if (d < 1 || d > 16) throw UsageError("agl2_generators needs 1 <= d <= 16");
  const int n = 1 << d;
  std::vector<Perm> out;
  for (auto& f : gl2_bit_maps(d)) {
    std::vector<Point> img(n);
    for (int x = 0; x < n; ++x) img[x] = static_cast<Point>(f(x));
    out.push_back(Perm(img));
  }
  if (include_translations) {
    std::vector<Point> img(n);
    for (int x = 0; x < n; ++x) img[x] = static_cast<Point>(x ^ 1);
    out.push_back(Perm(img));
  }
  return out;
}

std::vector<Perm> translation_generators(const Code& c) {
  const HammingGraph& h = hamming_of(c);
  if (!c.linear()) throw PreconditionError("translations need a linear code", c.name());
  std::vector<Perm> out;
  for (const Row& r : c.linear()->generator) out.push_back(wreath_translation(c.linear()->field, h, row_to_vertex(h, r)));
  return out;
}

Perm golay_extra_automorphism(const Code& golay) {
  const HammingGraph& h = hamming_of(golay);
  if (h.n() != 23 || h.q() != 2 || golay.size() != 4096) throw PreconditionError("expected the binary Golay code");
  std::vector<std::uint32_t> blocks;
  for (Vertex v : golay.ids())
    if (h.weight_of(v) == 7) {
      std::uint32_t m = 0;
      for (int i = 0; i < 23; ++i)
        if (h.digit(v, i)) m |= 1u << i;
      blocks.push_back(m);
    }
  if (blocks.size() != 253) throw ImplementationContradiction("Golay code should have 253 words of weight 7");
  std::sort(blocks.begin(), blocks.end());
  std::unordered_map<std::uint32_t, std::uint32_t> block_of;
  for (std::uint32_t b : blocks)
    for (int a = 0; a < 23; ++a)
      for (int c = a + 1; c < 23; ++c)
        for (int d = c + 1; d < 23; ++d)
          for (int e = d + 1; e < 23; ++e) {
            std::uint32_t s = (1u << a) | (1u << c) | (1u << d) | (1u << e);
            if ((b & s) == s) block_of[s] = b;
          }
  if (block_of.size() != 8855) throw ImplementationContradiction("weight-7 words are not a Steiner system S(4,7,23)");

  std::vector<int> sigma(23, -1);
  std::uint32_t used = 0;
  std::vector<int> order;
  for (int i = 0; i < 3; ++i) {
    sigma[i] = i;
    used |= 1u << i;
    order.push_back(i);
  }
  auto consistent = [&](int x) {
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        for (std::size_t k = j + 1; k < order.size(); ++k) {
          int a = order[i], b = order[j], c = order[k];
          std::uint32_t blk = block_of.at((1u << a) | (1u << b) | (1u << c) | (1u << x));
          std::uint32_t img = block_of.at((1u << sigma[a]) | (1u << sigma[b]) | (1u << sigma[c]) | (1u << sigma[x]));
          for (int z : order)
            if (((blk >> z) & 1) != ((img >> sigma[z]) & 1)) return false;
        }
    return true;
  };
  std::function<bool(int)> assign = [&](int x) -> bool {
    if (x == 23) return true;
    for (int y = 0; y < 23; ++y) {
      if (used >> y & 1) continue;
      if (x == 3 && y == 3) continue;
      sigma[x] = y;
      if (consistent(x)) {
        used |= 1u << y;
        order.push_back(x);
        if (assign(x + 1)) return true;
        order.pop_back();
        used &= ~(1u << y);
      }
      sigma[x] = -1;
    }
    return false;
  };
  if (!assign(3)) throw ImplementationContradiction("no Golay automorphism fixing 0,1,2 and moving 3");
  std::vector<Point> img(sigma.begin(), sigma.end());
  Perm p(img);
  for (std::uint32_t b : blocks) {
    std::uint32_t m = 0;
    for (int i = 0; i < 23; ++i)
      if (b >> i & 1) m |= 1u << p[i];
    if (!std::binary_search(blocks.begin(), blocks.end(), m))
      throw ImplementationContradiction("extra Golay permutation does not preserve the design");
  }
  return p;
}

namespace {

GraphGroup build_group(const std::string& name, const Code& c) {
  if (name == "golay23_aut") {
    const HammingGraph& h = hamming_of(c);
    auto gens = translation_generators(c);
    std::vector<Point> shift(23), twice(23);
    for (int i = 0; i < 23; ++i) {
      shift[i] = static_cast<Point>((i + 1) % 23);
      twice[i] = static_cast<Point>((2 * i) % 23);
    }
    for (const Perm& s : {Perm(shift), Perm(twice), golay_extra_automorphism(c)})
      gens.push_back(wreath_entry_perm(s, h.q()));
    return GraphGroup(c.graph_ptr(), GroupKind::wreath, gens, name);
  }
  if (name == "rm13_aut") {
    const HammingGraph& h = hamming_of(c);
    if (h.n() != 8 || h.q() != 2) throw PreconditionError("rm13_aut needs a code in H(8,2)");
    auto gens = translation_generators(c);
    for (const Perm& s : agl2_generators(3)) gens.push_back(wreath_entry_perm(s, 2));
    return GraphGroup(c.graph_ptr(), GroupKind::wreath, gens, name);
  }
  if (name == "tv_agl") {
    const HammingGraph& h = hamming_of(c);
    int d = 0;
    while ((1 << d) < h.n()) ++d;
    if (h.q() != 2 || (1 << d) != h.n()) throw PreconditionError("tv_agl needs a code in H(2^d,2)");
    const FiniteField f2 = FiniteField::make(2, 1);
    std::vector<Perm> gens;
    for (int i = 0; i < h.n(); ++i) gens.push_back(wreath_translation(f2, h, h.weight(i)));
    for (const Perm& s : agl2_generators(d)) gens.push_back(wreath_entry_perm(s, 2));
    return GraphGroup(c.graph_ptr(), GroupKind::wreath, gens, name);
  }
  if (name == "translations") {
    return GraphGroup(c.graph_ptr(), GroupKind::wreath, translation_generators(c), name);
  }
  if (name == "rep_full") {
    const HammingGraph& h = hamming_of(c);
    std::vector<Perm> gens;
    for (const Perm& a : sym_on(range_points(0, h.q()), h.q())) gens.push_back(wreath_diagonal(a, h.n()));
    for (const Perm& s : sym_on(range_points(0, h.n()), h.n())) gens.push_back(wreath_entry_perm(s, h.q()));
    return GraphGroup(c.graph_ptr(), GroupKind::wreath, gens, name);
  }
  if (name == "hamming7_aut") {
    const HammingGraph& h = hamming_of(c);
    if (h.n() != 7 || h.q() != 2) throw PreconditionError("hamming7_aut needs a code in H(7,2)");
    const FiniteField f2 = FiniteField::make(2, 1);
    auto pts = prm_points(f2, 3);
    auto gens = translation_generators(c);
    const Matrix transvection{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}};
    const Matrix cycle{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    for (const Matrix& m : {transvection, cycle}) {
      std::vector<Point> img(7);
      for (int i = 0; i < 7; ++i) {
        Row y = vec_mat(f2, pts[i], m);
        img[i] = static_cast<Point>(std::find(pts.begin(), pts.end(), y) - pts.begin());
      }
      gens.push_back(wreath_entry_perm(Perm(img), 2));
    }
    return GraphGroup(c.graph_ptr(), GroupKind::wreath, gens, name);
  }
  if (name == "cycle_aut") {
    const auto* cg = dynamic_cast<const CycleGraph*>(&c.graph());
    if (!cg || cg->m() % 2) throw PreconditionError("cycle_aut needs an even cycle host", c.graph().spec());
    const int m = cg->m();
    std::vector<Point> rot(m), refl(m);
    for (int v = 0; v < m; ++v) {
      rot[v] = static_cast<Point>((v + m / 2) % m);
      refl[v] = static_cast<Point>((m - v) % m);
    }
    return GraphGroup(c.graph_ptr(), GroupKind::vertex, {Perm(rot), Perm(refl)}, name);
  }
  if (name == "tetrahedron_aut") {
    std::vector<Perm> gens;
    for (const Perm& a : agl2_generators(3)) {
      std::vector<Point> img(13);
      std::iota(img.begin(), img.end(), 0);
      for (int i = 0; i < 8; ++i) img[i] = a[i];
      gens.push_back(Perm(img));
    }
    for (const Perm& s : sym_on(range_points(8, 13), 13)) gens.push_back(s);
    return GraphGroup(c.graph_ptr(), GroupKind::subset, gens, name);
  }
  if (name == "spread_aut" || name == "w3_ovoid_aut") {
    const auto* gg = dynamic_cast<const GeometryGraph*>(&c.graph());
    if (!gg) throw PreconditionError(name + " needs a PG3/W3 incidence host", c.graph().spec());
    const Geometry3& geo = gg->geometry();
    const int q = geo.field().q();
    std::vector<Perm> gens;
    if (name == "spread_aut") {
      if (geo.symplectic()) throw PreconditionError("spread_aut needs the PG3(q) host");
      for (const Matrix& m : detail::spread_group_matrices(q)) gens.push_back(geo.vertex_perm(m));
    } else {
      if (!geo.symplectic()) throw PreconditionError("w3_ovoid_aut needs the W3(q) host");
      for (const Matrix& b : sl2_sharply_transitive(q)) {
        Matrix left(4, Row(4, 0)), right(4, Row(4, 0));
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            left[i][j] = right[i + 2][j + 2] = b[i][j];
          }
        left[2][2] = left[3][3] = right[0][0] = right[1][1] = 1;
        gens.push_back(geo.vertex_perm(left));
        gens.push_back(geo.vertex_perm(right));
      }
    }
    return GraphGroup(c.graph_ptr(), GroupKind::vertex, gens, name);
  }
  if (name == "kneser_int_aut") {
    auto a = args_of(c, "kneser_int", 4);
    const int v = a[0] + a[1];
    auto gens = sym_on(range_points(0, a[0]), v);
    for (const Perm& s : sym_on(range_points(a[0], v), v)) gens.push_back(s);
    return GraphGroup(c.graph_ptr(), GroupKind::subset, gens, name);
  }
  if (name == "johnson_subset_aut") {
    auto a = args_of(c, "johnson_subset", 4);
    const int v = a[0], u = a[2];
    auto gens = sym_on(range_points(0, u), v);
    for (const Perm& s : sym_on(range_points(u, v), v)) gens.push_back(s);
    return GraphGroup(c.graph_ptr(), GroupKind::subset, gens, name);
  }
  if (name == "odd_imp_aut") {
    auto args = args_of(c, "odd_imp", 2);
    const int a = args[0], b = args[1], v = a * b;
    auto gens = sym_on(range_points(0, b), v);
    // Block permutations: swap blocks 0,1 and cycle all blocks.
    if (a >= 2) {
      std::vector<Point> sw(v), cy(v);
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
          int blk_sw = i == 0 ? 1 : i == 1 ? 0 : i;
          sw[i * b + j] = static_cast<Point>(blk_sw * b + j);
          cy[i * b + j] = static_cast<Point>(((i + 1) % a) * b + j);
        }
      gens.push_back(Perm(sw));
      if (a > 2) gens.push_back(Perm(cy));
    }
    return GraphGroup(c.graph_ptr(), GroupKind::subset, gens, name);
  }
  if (name == "holomorph") {
    const HammingGraph& h = hamming_of(c);
    if (h.n() != h.q()) throw PreconditionError("holomorph needs a code in H(q,q)");
    std::vector<Perm> elems;
    for (Vertex v : c.ids()) {
      auto d = h.digits(v);
      std::vector<Point> img(d.begin(), d.end());
      try {
        elems.push_back(Perm(img));
      } catch (const std::exception&) {
        throw PreconditionError("codeword is not a permutation", h.label(v));
      }
    }
    PermGroup t(h.q(), elems);
    if (t.order() != static_cast<BigInt>(elems.size()))
      throw PreconditionError("codewords do not form a permutation group");
    // A short generating set of T.
    std::vector<Perm> tg;
    for (const Perm& x : elems)
      if (!PermGroup(h.q(), tg).contains(x)) tg.push_back(x);
    PermGroup small(h.q(), tg);
    PermGroup n = normalizer_in_sym(small);
    return holomorph_autos(small, n.generators());
  }
  throw UsageError("unknown builtin group: " + name);
}

}  // namespace

GraphGroup builtin_group(const std::string& name, const Code& c) {
  GraphGroup g = build_group(name, c);
  if (name == "tv_agl") return g;  // ambient group; it moves the code
  if (auto bad = g.preserves(c.ids()))
    throw PreconditionError("builtin group " + name + " does not preserve the code",
                            "generator " + std::to_string(bad->first) + " moves " + c.graph().label(bad->second));
  return g;
}

// ---------------------------------------------------------------- expressions

namespace {

std::map<std::string, std::string> parse_params(std::string_view body) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view item = body.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("expected key=value in '" + std::string(item) + "'");
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    pos = end + 1;
  }
  return out;
}

int int_param(const std::map<std::string, std::string>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw UsageError("missing parameter '" + key + "'");
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw UsageError("parameter '" + key + "' must be an integer");
  }
}

PermGroup named_group(const std::string& s) {
  if (s.size() < 2) throw UsageError("unknown group name: " + s);
  int n = 0;
  try {
    n = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw UsageError("unknown group name: " + s);
  }
  if (n < 1 || n > 10) throw UsageError("group degree must be in 1..10");
  switch (s[0]) {
    case 's': return PermGroup::symmetric(n);
    case 'a': return PermGroup::alternating(n);
    case 'c': return PermGroup::cyclic(n);
    default: throw UsageError("unknown group name: " + s);
  }
}

}  // namespace

Code make_construction(std::string_view expr) {
  std::size_t colon = expr.find(':');
  std::string kind(expr.substr(0, colon));
  auto p = parse_params(colon == std::string_view::npos ? std::string_view{} : expr.substr(colon + 1));
  if (kind == "rep") return rep_nq(int_param(p, "n"), int_param(p, "q"));
  if (kind == "grm") return grm(int_param(p, "q"), int_param(p, "k"), int_param(p, "t"));
  if (kind == "prm") return prm(int_param(p, "q"), int_param(p, "k"), int_param(p, "t"));
  if (kind == "hamming7") {
    Code c = dual_code(prm(2, 1, 3), "hamming7");
    return c;
  }
  if (kind == "cycle") return cycle_code(int_param(p, "n"));
  if (kind == "johnson_subset") {
    const std::string mode = p.count("mode") ? p.at("mode") : "inside";
    if (mode != "inside" && mode != "containing") throw UsageError("mode must be inside or containing");
    return johnson_subset_code(int_param(p, "v"), int_param(p, "k"), int_param(p, "u"),
                               mode == "inside" ? SubsetMode::inside : SubsetMode::containing);
  }
  if (kind == "kneser_int") return kneser_int(int_param(p, "a"), int_param(p, "b"), int_param(p, "c"), int_param(p, "d"));
  if (kind == "odd_imp") {
    if (!p.count("m")) throw UsageError("missing parameter 'm'");
    std::vector<int> m;
    std::string s = p.at("m");
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t end = s.find('.', pos);
      if (end == std::string::npos) end = s.size();
      try {
        m.push_back(std::stoi(s.substr(pos, end - pos)));
      } catch (const std::exception&) {
        throw UsageError("m must be a dot-separated list of integers");
      }
      pos = end + 1;
    }
    return odd_imp(int_param(p, "a"), int_param(p, "b"), m);
  }
  if (kind == "tetrahedron") return tetrahedron_code();
  if (kind == "spread") return regular_spread_code(int_param(p, "q"));
  if (kind == "w3_ovoid") return w3_partial_ovoid(int_param(p, "q"));
  if (kind == "gabidulin")
    return gabidulin(int_param(p, "q"), int_param(p, "n"), int_param(p, "k"), int_param(p, "s"));
  if (kind == "perm") {
    if (!p.count("group")) throw UsageError("missing parameter 'group'");
    Code c = permutation_code(named_group(p.at("group")));
    c.set_name("perm(" + p.at("group") + ")");
    return c;
  }
  if (kind == "twisted") {
    if (!p.count("name")) throw UsageError("missing parameter 'name'");
    TwistedPair tp = twisted_pair(p.at("name"));
    Code c = twisted_permutation_code(tp.t, {Representation{tp.t.generators()}, tp.second});
    c.set_name("twisted(" + p.at("name") + ")");
    return c;
  }
  throw UsageError("unknown construction: " + kind);
}

}  // namespace gcw
