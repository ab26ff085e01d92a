#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "constructions_internal.hpp"
#include "gcw/constructions.hpp"
#include "gcw/data.hpp"
#include "gcw/error.hpp"
#include "json.hpp"

namespace gcw {

namespace detail {

std::vector<int> name_arguments(const std::string& name, std::string_view prefix) {
  if (name.size() < prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0 ||
      name[prefix.size()] != '(' || name.back() != ')')
    return {};
  std::vector<int> out;
  std::string body = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string::npos) end = body.size();
    try {
      out.push_back(std::stoi(body.substr(pos, end - pos)));
    } catch (const std::exception&) {
      return {};
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- cycle, Johnson, Kneser

Code cycle_code(int n) {
  if (n < 2) throw UsageError("cycle_code needs n >= 2");
  auto g = std::make_shared<CycleGraph>(2 * n);
  return Code(g, {0, static_cast<Vertex>(n)}, std::nullopt, "cycle(" + std::to_string(n) + ")");
}

namespace {

template <class Keep>
std::vector<Vertex> subsets_where(const SubsetGraph& g, Keep keep) {
  std::vector<Vertex> ids;
  for (Vertex r = 0; r < g.vertex_count(); ++r)
    if (keep(g.codec().mask(r))) ids.push_back(r);
  return ids;
}

std::uint64_t low_mask(int k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

}  // namespace

Code johnson_subset_code(int v, int k, int u, SubsetMode mode) {
  if (k < 1 || k >= v || u < 0 || u > v) throw UsageError("johnson_subset_code needs 1 <= k < v and 0 <= u <= v");
  if (mode == SubsetMode::inside && u < k) throw UsageError("no k-subset lies inside U when |U| < k");
  if (mode == SubsetMode::containing && u > k) throw UsageError("no k-subset contains U when |U| > k");
  auto g = std::make_shared<JohnsonGraph>(v, k);
  const std::uint64_t um = low_mask(u);
  auto ids = subsets_where(*g, [&](std::uint64_t m) {
    return mode == SubsetMode::inside ? (m & ~um) == 0 : (m & um) == um;
  });
  return Code(g, std::move(ids), std::nullopt,
              "johnson_subset(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(u) + "," +
                  (mode == SubsetMode::inside ? "0" : "1") + ")");
}

Code kneser_int(int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0 || a < c || b < d) throw UsageError("kneser_int needs a >= c and b >= d");
  const int v = a + b, k = c + d;
  if (k < 1 || v < 2 * k + 1) throw UsageError("kneser_int needs v >= 2k+1");
  auto g = std::make_shared<KneserGraph>(v, k);
  const std::uint64_t am = low_mask(a);
  auto ids = subsets_where(*g, [&](std::uint64_t m) { return std::popcount(m & am) == c; });
  return Code(g, std::move(ids), std::nullopt,
              "kneser_int(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                  std::to_string(d) + ")");
}

Code odd_imp(int a, int b, std::vector<int> m) {
  if (a < 1 || b < 1 || (a * b) % 2 == 0) throw UsageError("odd_imp needs a*b odd");
  const int v = a * b, k = (v - 1) / 2;
  if (static_cast<int>(m.size()) != a) throw UsageError("M must have one entry per block");
  int total = 0;
  for (int x : m) {
    if (x < 0 || x > b) throw UsageError("M entries must lie in 0..b");
    total += x;
  }
  if (total != k) throw UsageError("M must sum to k = (ab-1)/2");
  std::sort(m.begin(), m.end());
  auto g = std::make_shared<KneserGraph>(v, k);
  auto ids = subsets_where(*g, [&](std::uint64_t mask) {
    std::vector<int> sizes;
    for (int i = 0; i < a; ++i) sizes.push_back(std::popcount(mask >> (i * b) & low_mask(b)));
    std::sort(sizes.begin(), sizes.end());
    return sizes == m;
  });
  std::string name = "odd_imp(" + std::to_string(a) + "," + std::to_string(b);
  for (int x : m) name += "," + std::to_string(x);
  return Code(g, std::move(ids), std::nullopt, name + ")");
}

Code tetrahedron_code() {
  // A = points 0..7 of AG3(2) (coordinates are the bits), B = points 8..12.
  std::set<std::uint64_t> planes;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c) planes.insert((1u << a) | (1u << b) | (1u << c) | (1u << (a ^ b ^ c)));
  if (planes.size() != 14) throw ImplementationContradiction("AG3(2) should have 14 planes");
  auto g = std::make_shared<KneserGraph>(13, 6);
  auto ids = subsets_where(*g, [&](std::uint64_t m) {
    std::uint64_t inside = m & 0xff;
    return std::popcount(inside) == 4 && !planes.count(inside) && std::popcount(m >> 8) == 2;
  });
  return Code(g, std::move(ids), std::nullopt, "tetrahedron");
}

// ---------------------------------------------------------------- spreads

namespace {

struct FieldReduction {
  FiniteField small, big;
  std::vector<int> embed;           // small index -> big index
  int omega = 0;                    // big element outside the subfield
  std::vector<std::array<int, 2>> coords;  // big index -> (c0, c1) with x = c0 + c1*omega

  explicit FieldReduction(int q) {
    auto [p, d] = prime_power(static_cast<std::uint64_t>(q));
    if (!p) throw UsageError("field reduction needs a prime power");
    small = FiniteField::make(p, d);
    big = FiniteField::make(p, 2 * d);
    embed.assign(q, 0);
    if (d == 1) {
      for (int i = 0; i < q; ++i) embed[i] = i;
    } else {
      const int g = big.pow(big.generator(), static_cast<std::uint64_t>(q + 1));
      for (int i = 1; i < q; ++i) embed[i] = big.pow(g, static_cast<std::uint64_t>(small.log(i)));
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
          if (embed[small.add(i, j)] != big.add(embed[i], embed[j]) ||
              embed[small.mul(i, j)] != big.mul(embed[i], embed[j]))
            throw ImplementationContradiction("subfield embedding is not a homomorphism");
    }
    std::vector<char> in_sub(big.q(), 0);
    for (int x : embed) in_sub[x] = 1;
    omega = static_cast<int>(std::find(in_sub.begin(), in_sub.end(), 0) - in_sub.begin());
    coords.assign(big.q(), {-1, -1});
    for (int c0 = 0; c0 < q; ++c0)
      for (int c1 = 0; c1 < q; ++c1) coords[big.add(embed[c0], big.mul(embed[c1], omega))] = {c0, c1};
  }

  Row phi(int a, int b) const { return {coords[a][0], coords[a][1], coords[b][0], coords[b][1]}; }
  int lift(int c0, int c1) const { return big.add(embed[c0], big.mul(embed[c1], omega)); }
};

}  // namespace

namespace detail {

std::vector<Matrix> spread_group_matrices(int q) {
  FieldReduction fr(q);
  const FiniteField& F = fr.big;
  using Map = std::function<std::array<int, 2>(int, int)>;
  auto as_matrix = [&](const Map& l) {
    Matrix m;
    for (int i = 0; i < 4; ++i) {
      Row e(4, 0);
      e[i] = 1;
      int a = fr.lift(e[0], e[1]), b = fr.lift(e[2], e[3]);
      auto [x, y] = l(a, b);
      m.push_back(fr.phi(x, y));
    }
    return m;
  };
  const int g = F.generator();
  const int qq = fr.small.q();
  std::vector<Matrix> out;
  out.push_back(as_matrix([&](int a, int b) { return std::array<int, 2>{F.mul(a, g), b}; }));
  out.push_back(as_matrix([&](int a, int b) { return std::array<int, 2>{a, F.add(a, b)}; }));
  out.push_back(as_matrix([&](int a, int b) { return std::array<int, 2>{b, a}; }));
  out.push_back(as_matrix([&](int a, int b) {
    return std::array<int, 2>{F.pow(a, static_cast<std::uint64_t>(qq)), F.pow(b, static_cast<std::uint64_t>(qq))};
  }));
  return out;
}

}  // namespace detail

Code regular_spread_code(int q) {
  if (q < 2 || q > 4) throw UsageError("regular_spread_code supports q in {2,3,4}");
  FieldReduction fr(q);
  auto graph = pg3_graph(q);
  const Geometry3& geo = graph->geometry();
  std::vector<std::pair<int, int>> reps{{0, 1}};
  for (int c = 0; c < fr.big.q(); ++c) reps.push_back({1, c});
  std::vector<Vertex> ids;
  std::vector<int> cover(geo.points().size(), 0);
  for (auto [a, b] : reps) {
    Matrix rows{fr.phi(a, b), fr.phi(fr.big.mul(fr.omega, a), fr.big.mul(fr.omega, b))};
    auto idx = geo.line_index(rows);
    if (!idx) throw ImplementationContradiction("spread element is not a line");
    ids.push_back(geo.points().size() + *idx);
    for (auto p : geo.structure().lines[*idx]) ++cover[p];
  }
  if (std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; }))
    throw ImplementationContradiction("regular spread does not partition the points");
  return Code(graph, std::move(ids), std::nullopt, "spread(" + std::to_string(q) + ")");
}

// ---------------------------------------------------------------- SL2 subgroups and partial ovoids

std::vector<Matrix> matrix_group_closure(const FiniteField& f, const std::vector<Matrix>& gens, std::size_t budget) {
  if (gens.empty()) throw UsageError("matrix group needs generators");
  const std::size_t d = gens[0].size();
  Matrix id(d, Row(d, 0));
  for (std::size_t i = 0; i < d; ++i) id[i][i] = 1;
  std::set<Matrix> seen{id};
  std::vector<Matrix> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Matrix& g : gens) {
      Matrix y = multiply(f, queue[i], g);
      if (seen.insert(y).second) {
        if (seen.size() > budget) throw BudgetExceeded("matrix group closure exceeds budget");
        queue.push_back(std::move(y));
      }
    }
  return {seen.begin(), seen.end()};
}

namespace {

// G acts regularly on nonzero row vectors: |G| = q^2-1 and only the identity fixes a vector.
bool sharply_transitive(const FiniteField& f, const std::vector<Matrix>& elems) {
  const int q = f.q();
  if (static_cast<int>(elems.size()) != q * q - 1) return false;
  for (const Matrix& a : elems) {
    bool identity = a[0][0] == 1 && a[0][1] == 0 && a[1][0] == 0 && a[1][1] == 1;
    if (identity) continue;
    for (int x = 1; x < q * q; ++x) {
      Row v{x / q, x % q};
      if (vec_mat(f, v, a) == v) return false;
    }
  }
  return true;
}

FiniteField prime_field(int q) {
  auto [p, d] = prime_power(static_cast<std::uint64_t>(q));
  if (!p) throw UsageError("q must be a prime power");
  return FiniteField::make(p, d);
}

}  // namespace

std::vector<Matrix> find_sl2_sharply_transitive(int q) {
  FiniteField f = prime_field(q);
  if (q > 11) throw BudgetExceeded("SL2 subgroup search limited to q <= 11");
  std::vector<Matrix> sl2;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d)
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 1) sl2.push_back({{a, b}, {c, d}});
  const std::size_t target = static_cast<std::size_t>(q * q - 1);
  for (std::size_t i = 0; i < sl2.size(); ++i) {
    auto cyc = matrix_group_closure(f, {sl2[i]}, target);
    if (cyc.size() == target && sharply_transitive(f, cyc)) return {sl2[i]};
    if (target % cyc.size() != 0) continue;
    for (std::size_t j = i + 1; j < sl2.size(); ++j) {
      std::vector<Matrix> g;
      try {
        g = matrix_group_closure(f, {sl2[i], sl2[j]}, target);
      } catch (const BudgetExceeded&) {
        continue;
      }
      if (sharply_transitive(f, g)) return {sl2[i], sl2[j]};
    }
  }
  throw PreconditionError("no sharply transitive subgroup of SL2(q) found", std::to_string(q));
}

std::vector<Matrix> sl2_sharply_transitive(int q) {
  if (q == 2) return {{{0, 1}, {1, 1}}};
  auto j = nlohmann::json::parse(data::get("sl2_sharply_transitive.json"));
  const std::string key = std::to_string(q);
  if (!j.contains(key)) throw PreconditionError("no stored sharply transitive SL2 subgroup for this q", key);
  return j[key].get<std::vector<Matrix>>();
}

Code w3_partial_ovoid(int q, const std::vector<Matrix>& gens) {
  FiniteField f = prime_field(q);
  std::vector<Matrix> g = gens.empty() ? sl2_sharply_transitive(q) : gens;
  for (const Matrix& m : g)
    if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2) throw UsageError("SL2 generators must be 2x2");
  auto elems = matrix_group_closure(f, g, static_cast<std::size_t>(q * q));
  if (!sharply_transitive(f, elems))
    throw PreconditionError("group is not sharply transitive on nonzero vectors", std::to_string(elems.size()));
  auto graph = w3_graph(q);
  const Geometry3& geo = graph->geometry();
  std::vector<Vertex> ids;
  for (const Matrix& a : elems) {
    Matrix rows{{1, 0, a[0][0], a[0][1]}, {0, 1, a[1][0], a[1][1]}};
    const bool isotropic = geo.form(rows[0], rows[1]) == 0;
    if (isotropic != (det(f, a) == 1))
      throw ImplementationContradiction("isotropy of [I A] disagrees with det A = 1");
    if (!isotropic) throw PreconditionError("matrix outside SL2 gives a non-isotropic line");
    auto idx = geo.line_index(rows);
    if (!idx) throw ImplementationContradiction("isotropic [I A] missing from W3(q)");
    ids.push_back(geo.points().size() + *idx);
  }
  return Code(graph, std::move(ids), std::nullopt, "w3_ovoid(" + std::to_string(q) + ")");
}

}  // namespace gcw
