#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gcw/action.hpp"
#include "gcw/constructions.hpp"
#include "gcw/data.hpp"
#include "gcw/error.hpp"
#include "json.hpp"

namespace gcw {

namespace {

const HammingGraph& require_hamming(const Code& c) {
  const HammingGraph* h = c.hamming();
  if (!h) throw PreconditionError("construction needs a code in a Hamming graph", c.graph().spec());
  return *h;
}

Vertex perm_vertex(const HammingGraph& h, const Perm& t) {
  std::vector<int> d(t.images().begin(), t.images().end());
  return h.from_digits(d);
}

}  // namespace

// ---------------------------------------------------------------- repetition and product

Code rep_code(const Code& c, int k) {
  const HammingGraph& h = require_hamming(c);
  if (k < 1) throw UsageError("repetition factor must be at least 1");
  auto out = std::make_shared<HammingGraph>(h.n() * k, h.q());
  std::vector<Vertex> ids;
  for (Vertex v : c.ids()) {
    auto d = h.digits(v);
    std::vector<int> e;
    for (int j = 0; j < k; ++j) e.insert(e.end(), d.begin(), d.end());
    ids.push_back(out->from_digits(e));
  }
  std::optional<LinearDescriptor> lin;
  if (c.linear()) {
    Matrix g;
    for (const Row& r : c.linear()->generator) {
      Row x;
      for (int j = 0; j < k; ++j) x.insert(x.end(), r.begin(), r.end());
      g.push_back(x);
    }
    lin = LinearDescriptor{c.linear()->field, g};
  }
  return Code(out, std::move(ids), std::move(lin), "rep" + std::to_string(k) + "(" + c.name() + ")");
}

Code prod_code(const Code& c, int k) {
  const HammingGraph& h = require_hamming(c);
  if (k < 1) throw UsageError("product factor must be at least 1");
  double total = std::pow(static_cast<double>(c.size()), k);
  if (total > 1e7) throw BudgetExceeded("product code too large");
  auto out = std::make_shared<HammingGraph>(h.n() * k, h.q());
  std::vector<Vertex> ids{0};
  // Entry (i,j) has index j*n+i, so block j is the j-th most significant chunk.
  for (int j = 0; j < k; ++j) {
    std::vector<Vertex> next;
    for (Vertex pre : ids)
      for (Vertex v : c.ids()) next.push_back(pre * h.vertex_count() + v);
    ids.swap(next);
  }
  return Code(out, std::move(ids), std::nullopt, "prod" + std::to_string(k) + "(" + c.name() + ")");
}

Code rep_nq(int n, int q) {
  if (n < 1 || q < 2) throw UsageError("rep_nq needs n >= 1 and q >= 2");
  auto h = std::make_shared<HammingGraph>(n, q);
  std::vector<Vertex> ids;
  for (int a = 0; a < q; ++a) ids.push_back(h->from_digits(std::vector<int>(n, a)));
  std::optional<LinearDescriptor> lin;
  if (prime_power(q).first != 0) lin = LinearDescriptor{FiniteField::make(prime_power(q).first, prime_power(q).second),
                                                        Matrix{Row(n, 1)}};
  return Code(h, std::move(ids), std::move(lin), "rep(" + std::to_string(n) + "," + std::to_string(q) + ")");
}

// ---------------------------------------------------------------- permutation codes

Code permutation_code(const PermGroup& t) {
  const int q = static_cast<int>(t.degree());
  if (q < 2) throw PreconditionError("permutation code needs degree >= 2");
  auto h = std::make_shared<HammingGraph>(q, q);
  std::vector<Vertex> ids;
  for (const Perm& x : t.elements()) ids.push_back(perm_vertex(*h, x));
  return Code(h, std::move(ids), std::nullopt, "C(T)");
}

Perm diag_element(const Perm& g) { return wreath_diagonal(g, static_cast<int>(g.degree())); }
Perm top_element(const Perm& g) { return wreath_entry_perm(g, static_cast<int>(g.degree())); }

std::vector<Perm> diag_subgroup(const PermGroup& h, int n) {
  std::vector<Perm> out;
  for (const Perm& g : h.generators()) out.push_back(wreath_diagonal(g, n));
  return out;
}

void check_permcode_identities(const PermGroup& t, const std::vector<Perm>& gs) {
  const int q = static_cast<int>(t.degree());
  HammingGraph h(q, q);
  auto elems = t.elements();
  for (const Perm& g : gs) {
    if (g.degree() != t.degree()) throw PreconditionError("element degree differs from T");
    auto xg = WreathElement::from_domain(diag_element(g), q, q);
    auto sg = WreathElement::from_domain(top_element(g), q, q);
    auto both = WreathElement::from_domain(diag_element(g) * top_element(g), q, q);
    const Perm gi = perm_inverse(g);
    for (const Perm& x : elems) {
      Vertex a = perm_vertex(h, x);
      if (xg.apply(h, a) != perm_vertex(h, x * g) || sg.apply(h, a) != perm_vertex(h, gi * x) ||
          both.apply(h, a) != perm_vertex(h, gi * x * g))
        throw ImplementationContradiction("permutation code action identity fails for g = " + g.cycles());
    }
  }
}

GraphGroup holomorph_autos(const PermGroup& t, const std::vector<Perm>& normalizer_gens) {
  const int q = static_cast<int>(t.degree());
  PermGroup n = normalizer_in_sym(t, &normalizer_gens);
  std::vector<Perm> gens;
  for (const Perm& x : t.generators()) gens.push_back(diag_element(x));
  for (const Perm& g : n.generators()) gens.push_back(diag_element(g) * top_element(g));
  check_permcode_identities(t, n.generators());
  return GraphGroup(std::make_shared<HammingGraph>(q, q), GroupKind::wreath, std::move(gens), "holomorph");
}

// ---------------------------------------------------------------- representations

std::vector<std::pair<Perm, Perm>> verify_representation(const PermGroup& t, const Representation& r) {
  const auto& gens = t.generators();
  if (r.images.size() != gens.size())
    throw PreconditionError("representation must give one image per generator of T");
  if (r.images.empty()) return {{Perm(t.degree()), Perm(t.degree())}};
  const std::size_t deg = r.images[0].degree();
  for (const Perm& x : r.images)
    if (x.degree() != deg) throw PreconditionError("representation images differ in degree");
  if (t.order() > 1'000'000) throw BudgetExceeded("representation check limited to |T| <= 10^6");
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<std::pair<Perm, Perm>> out{{Perm(t.degree()), Perm(deg)}};
  index.emplace(out[0].first, 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm y = out[i].first * gens[s];
      Perm img = out[i].second * r.images[s];
      auto [it, fresh] = index.emplace(y, out.size());
      if (fresh) {
        out.emplace_back(std::move(y), std::move(img));
      } else if (out[it->second].second != img) {
        throw PreconditionError("generator images do not define a homomorphism", y.cycles());
      }
    }
  std::unordered_set<Perm, PermHash> images;
  for (auto& p : out) images.insert(p.second);
  if (images.size() != out.size()) throw PreconditionError("representation is not faithful");
  return out;
}

Code twisted_permutation_code(const PermGroup& t, const std::vector<Representation>& reps) {
  if (reps.empty()) throw UsageError("twisted code needs at least one representation");
  const int q = static_cast<int>(reps[0].images.empty() ? t.degree() : reps[0].images[0].degree());
  const int k = static_cast<int>(reps.size());
  std::vector<std::map<Perm, Perm>> maps;
  for (const auto& r : reps) {
    auto pairs = verify_representation(t, r);
    if (!r.images.empty() && static_cast<int>(r.images[0].degree()) != q)
      throw PreconditionError("all representations must have the same degree");
    maps.emplace_back(pairs.begin(), pairs.end());
  }
  auto h = std::make_shared<HammingGraph>(k * q, q);
  std::vector<Vertex> ids;
  for (const auto& [x, unused] : maps[0]) {
    std::vector<int> d;
    for (int j = 0; j < k; ++j) {
      const Perm& img = maps[j].at(x);
      for (int i = 0; i < q; ++i) d.push_back(static_cast<int>(img[i]));
    }
    ids.push_back(h->from_digits(d));
  }
  return Code(h, std::move(ids), std::nullopt, "twisted");
}

bool equivalent_representations(const PermGroup& t, const Representation& a, const Representation& b) {
  if (a.images.size() != b.images.size()) return false;
  if (a.images.empty()) return true;
  const std::size_t q = a.images[0].degree();
  if (b.images[0].degree() != q) return false;
  (void)t;
  // Look for c with c(A_i(y)) = B_i(c(y)); c is fixed on an orbit by one value.
  std::vector<int> c(q, -1), used(q, 0);
  std::function<bool()> extend = [&]() -> bool {
    std::size_t y0 = 0;
    while (y0 < q && c[y0] >= 0) ++y0;
    if (y0 == q) return true;
    for (std::size_t z = 0; z < q; ++z) {
      if (used[z]) continue;
      auto saved_c = c;
      auto saved_u = used;
      c[y0] = static_cast<int>(z);
      used[z] = 1;
      std::vector<std::size_t> stack{y0};
      bool ok = true;
      while (ok && !stack.empty()) {
        std::size_t y = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < a.images.size() && ok; ++i) {
          std::size_t ya = a.images[i][y];
          int target = static_cast<int>(b.images[i][c[y]]);
          if (c[ya] < 0) {
            if (used[target]) {
              ok = false;
            } else {
              c[ya] = target;
              used[target] = 1;
              stack.push_back(ya);
            }
          } else if (c[ya] != target) {
            ok = false;
          }
        }
      }
      if (ok && extend()) return true;
      c = saved_c;
      used = saved_u;
    }
    return false;
  };
  return extend();
}

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<Representation> find_twisted_representation(const PermGroup& t) {
  const auto& gens = t.generators();
  if (gens.size() != 2) throw PreconditionError("twisted search needs T given by a generating pair");
  const std::size_t q = t.degree();
  if (q > 8) throw BudgetExceeded("twisted search limited to degree <= 8");
  const Perm &a = gens[0], &b = gens[1];
  const auto oa = a.order(), ob = b.order(), oab = (a * b).order(), oabi = (a * perm_inverse(b)).order(),
             oaab = (a * a * b).order();
  Representation natural{{a, b}};
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(static_cast<int>(q), static_cast<int>(q), cur, parts);
  for (const auto& part : parts) {
    std::uint64_t l = 1;
    for (int p : part) l = std::lcm(l, static_cast<std::uint64_t>(p));
    if (l != oa) continue;
    std::vector<Point> img(q);
    Point start = 0;
    for (int p : part) {
      for (int i = 0; i < p; ++i) img[start + i] = start + (i + 1) % p;
      start += p;
    }
    Perm a2(img);
    std::vector<Point> bimg(q);
    std::iota(bimg.begin(), bimg.end(), 0);
    do {
      Perm b2 = Perm::unchecked(bimg);
      if (b2.order() != ob || (a2 * b2).order() != oab || (a2 * perm_inverse(b2)).order() != oabi ||
          (a2 * a2 * b2).order() != oaab)
        continue;
      Representation r{{a2, b2}};
      try {
        verify_representation(t, r);
      } catch (const PreconditionError&) {
        continue;
      }
      if (!equivalent_representations(t, natural, r)) return r;
    } while (std::next_permutation(bimg.begin(), bimg.end()));
  }
  return std::nullopt;
}

TwistedPair twisted_pair(const std::string& name) {
  auto j = nlohmann::json::parse(data::get("twisted_reps.json"));
  if (!j.contains(name)) throw UsageError("unknown twisted pair: " + name);
  const auto& e = j[name];
  const std::size_t deg = e["degree"].get<std::size_t>();
  std::vector<Perm> tg, sg;
  for (const auto& s : e["t"]) tg.push_back(Perm::from_cycles(s.get<std::string>(), deg));
  for (const auto& s : e["second"]) sg.push_back(Perm::from_cycles(s.get<std::string>(), deg));
  return TwistedPair{name, PermGroup(deg, tg), Representation{sg}};
}

Code prod_tkh(const PermGroup& t, int k, const PermGroup& h) {
  if (h.degree() != t.degree()) throw PreconditionError("H and T must have the same degree");
  if (k < 1) throw UsageError("k must be at least 1");
  if (!h.is_normal_in(t)) throw PreconditionError("H is not normal in T");
  const int q = static_cast<int>(t.degree());
  auto te = t.elements();
  auto he = h.elements();
  if (std::pow(static_cast<double>(he.size()), k) * static_cast<double>(te.size()) > 2e7)
    throw BudgetExceeded("Prod(T,k,H) too large");
  auto g = std::make_shared<HammingGraph>(k * q, q);
  std::set<Vertex> ids;
  std::vector<std::size_t> idx(k, 0);
  for (const Perm& x : te) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> d;
      for (int j = 0; j < k; ++j) {
        Perm y = he[idx[j]] * x;
        for (int i = 0; i < q; ++i) d.push_back(static_cast<int>(y[i]));
      }
      ids.insert(g->from_digits(d));
      int j = 0;
      while (j < k && ++idx[j] == he.size()) idx[j++] = 0;
      if (j == k) break;
    }
  }
  return Code(g, {ids.begin(), ids.end()}, std::nullopt, "Prod(T,k,H)");
}

// ---------------------------------------------------------------- projection

namespace {

void check_entries(const std::vector<int>& m, int n) {
  if (m.empty()) throw UsageError("projection needs a nonempty entry set");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] >= n) throw UsageError("projection entry out of range");
    if (i && m[i] <= m[i - 1]) throw UsageError("projection entries must be strictly increasing");
  }
}

}  // namespace

Code project_code(const Code& c, const std::vector<int>& entries) {
  const HammingGraph& h = require_hamming(c);
  check_entries(entries, h.n());
  auto out = std::make_shared<HammingGraph>(static_cast<int>(entries.size()), h.q());
  std::set<Vertex> ids;
  for (Vertex v : c.ids()) {
    std::vector<int> d;
    for (int i : entries) d.push_back(h.digit(v, i));
    ids.insert(out->from_digits(d));
  }
  return Code(out, {ids.begin(), ids.end()}, std::nullopt, "proj(" + c.name() + ")");
}

GraphGroup project_group(const GraphGroup& g, const std::vector<int>& entries) {
  if (g.kind() != GroupKind::wreath) throw PreconditionError("projection needs a wreath group");
  const auto& h = static_cast<const HammingGraph&>(g.graph());
  const int n = h.n(), q = h.q();
  check_entries(entries, n);
  if (n > 64) throw BudgetExceeded("entry sets limited to n <= 64");
  std::vector<WreathElement> ws;
  for (const Perm& x : g.generators()) ws.push_back(WreathElement::from_domain(x, n, q));
  std::uint64_t mask = 0;
  for (int i : entries) mask |= std::uint64_t{1} << i;
  auto act = [&](std::size_t s, std::uint64_t m) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) out |= std::uint64_t{1} << ws[s].top[i];
    return out;
  };
  auto stab = schreier_stabilizer(g.domain(), mask, act);
  std::vector<int> pos(n, -1);
  for (std::size_t j = 0; j < entries.size(); ++j) pos[entries[j]] = static_cast<int>(j);
  std::vector<Perm> gens;
  for (const Perm& x : stab) {
    auto w = WreathElement::from_domain(x, n, q);
    std::vector<Perm> base;
    std::vector<Point> top;
    for (int i : entries) {
      base.push_back(w.base[i]);
      top.push_back(static_cast<Point>(pos[w.top[i]]));
    }
    Perm y = wreath_from_parts(base, Perm(top));
    if (!y.is_identity()) gens.push_back(y);
  }
  auto out = std::make_shared<HammingGraph>(static_cast<int>(entries.size()), q);
  return GraphGroup(out, GroupKind::wreath, std::move(gens), "chi_M(" + g.name() + ")");
}

}  // namespace gcw
