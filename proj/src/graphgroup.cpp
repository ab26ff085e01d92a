#include "gcw/graphgroup.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_map>

#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"

namespace gcw {

// ------------------------------------------------------------ wreath elements

WreathElement WreathElement::identity(int n, int q) {
  return WreathElement{std::vector<Perm>(n, Perm(q)), Perm(n)};
}

Perm WreathElement::to_domain() const { return wreath_from_parts(base, top); }

WreathElement WreathElement::from_domain(const Perm& p, int n, int q) {
  if (p.degree() != static_cast<std::size_t>(n) * q) throw PreconditionError("wreath element has wrong degree");
  WreathElement w;
  std::vector<Point> top(n);
  for (int i = 0; i < n; ++i) {
    top[i] = p[i * q] / q;
    std::vector<Point> h(q);
    for (int a = 0; a < q; ++a) {
      Point y = p[i * q + a];
      if (static_cast<int>(y / q) != static_cast<int>(top[i]))
        throw PreconditionError("permutation does not preserve the entry blocks", p.cycles());
      h[a] = y % q;
    }
    w.base.push_back(Perm(h));
  }
  w.top = Perm(top);
  return w;
}

Vertex WreathElement::apply(const HammingGraph& h, Vertex v) const {
  Vertex out = 0;
  for (int i = 0; i < h.n(); ++i) out += static_cast<Vertex>(base[i][h.digit(v, i)]) * h.weight(top[i]);
  return out;
}

WreathElement operator*(const WreathElement& a, const WreathElement& b) {
  const int n = static_cast<int>(a.base.size());
  const int q = n ? static_cast<int>(a.base[0].degree()) : 0;
  return WreathElement::from_domain(a.to_domain() * b.to_domain(), n, q);
}

Perm wreath_from_parts(const std::vector<Perm>& base, const Perm& top) {
  const std::size_t n = base.size();
  if (top.degree() != n) throw PreconditionError("wreath top has wrong degree");
  const std::size_t q = n ? base[0].degree() : 0;
  std::vector<Point> img(n * q);
  for (std::size_t i = 0; i < n; ++i) {
    if (base[i].degree() != q) throw PreconditionError("wreath base entries differ in degree");
    for (std::size_t a = 0; a < q; ++a) img[i * q + a] = static_cast<Point>(top[i] * q + base[i][a]);
  }
  return Perm::unchecked(std::move(img));
}

Perm wreath_translation(const FiniteField& f, const HammingGraph& h, Vertex v) {
  if (f.q() != h.q()) throw PreconditionError("translation field does not match the alphabet");
  std::vector<Perm> base;
  for (int i = 0; i < h.n(); ++i) {
    int c = h.digit(v, i);
    std::vector<Point> img(h.q());
    for (int a = 0; a < h.q(); ++a) img[a] = f.add(a, c);
    base.push_back(Perm::unchecked(std::move(img)));
  }
  return wreath_from_parts(base, Perm(h.n()));
}

Perm wreath_entry_perm(const Perm& sigma, int q) {
  return wreath_from_parts(std::vector<Perm>(sigma.degree(), Perm(q)), sigma);
}

Perm wreath_diagonal(const Perm& alphabet, int n) {
  return wreath_from_parts(std::vector<Perm>(n, alphabet), Perm(n));
}

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::wreath: return "wreath";
    case GroupKind::subset: return "subset";
    case GroupKind::vertex: return "vertex";
  }
  return "?";
}

// ------------------------------------------------------------ graph groups

struct GraphGroup::Compiled {
  // Bit-permutation tables (binary wreath and subset actions), one per byte.
  std::vector<std::array<std::uint64_t, 256>> tables;
  std::uint64_t flip = 0;
  // General wreath.
  std::vector<int> top;
  std::vector<std::vector<int>> base;
  // Vertex action.
  std::vector<Point> images;
};

namespace {

std::vector<std::array<std::uint64_t, 256>> bit_tables(const std::vector<int>& target, int bits) {
  std::vector<std::array<std::uint64_t, 256>> t((bits + 7) / 8);
  for (std::size_t c = 0; c < t.size(); ++c)
    for (int b = 0; b < 256; ++b) {
      std::uint64_t m = 0;
      for (int k = 0; k < 8; ++k) {
        int src = static_cast<int>(c) * 8 + k;
        if (src < bits && (b >> k & 1)) m |= std::uint64_t{1} << target[src];
      }
      t[c][b] = m;
    }
  return t;
}

std::uint64_t apply_tables(const std::vector<std::array<std::uint64_t, 256>>& t, std::uint64_t x) {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < t.size(); ++c) out |= t[c][(x >> (8 * c)) & 0xff];
  return out;
}

}  // namespace

GraphGroup::GraphGroup(GraphPtr graph, GroupKind kind, std::vector<Perm> generators, std::string name)
    : graph_(std::move(graph)), kind_(kind), name_(std::move(name)) {
  std::size_t degree = 0;
  switch (kind_) {
    case GroupKind::wreath: {
      auto* h = dynamic_cast<const HammingGraph*>(graph_.get());
      if (!h) throw PreconditionError("wreath action needs a Hamming host", graph_->spec());
      degree = static_cast<std::size_t>(h->n()) * h->q();
      for (const auto& g : generators) WreathElement::from_domain(g, h->n(), h->q());
      break;
    }
    case GroupKind::subset: {
      auto* s = dynamic_cast<const SubsetGraph*>(graph_.get());
      if (!s) throw PreconditionError("subset action needs a Johnson or Kneser host", graph_->spec());
      degree = s->v();
      break;
    }
    case GroupKind::vertex:
      degree = graph_->vertex_count();
      break;
  }
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw PreconditionError("generator degree " + std::to_string(g.degree()) + " does not match the action");
  domain_ = PermGroup(degree, std::move(generators));
  for (const auto& g : domain_.generators()) compiled_.push_back(compile(g));
  verify_edges();
}

GraphGroup GraphGroup::with_generators(std::vector<Perm> gens, std::string name) const {
  GraphGroup out(*this);
  out.name_ = std::move(name);
  out.domain_ = PermGroup(domain_.degree(), std::move(gens));
  out.compiled_.clear();
  for (const auto& g : out.domain_.generators()) out.compiled_.push_back(out.compile(g));
  return out;
}

std::shared_ptr<const GraphGroup::Compiled> GraphGroup::compile(const Perm& x) const {
  auto c = std::make_shared<Compiled>();
  switch (kind_) {
    case GroupKind::wreath: {
      auto* h = static_cast<const HammingGraph*>(graph_.get());
      const int n = h->n(), q = h->q();
      auto w = WreathElement::from_domain(x, n, q);
      if (q == 2 && n <= 64) {
        // entry i sits at bit n-1-i
        std::vector<int> target(n);
        for (int i = 0; i < n; ++i) {
          target[n - 1 - i] = n - 1 - static_cast<int>(w.top[i]);
          if (w.base[i][0] == 1) c->flip |= std::uint64_t{1} << (n - 1 - w.top[i]);
        }
        c->tables = bit_tables(target, n);
      } else {
        for (int i = 0; i < n; ++i) {
          c->top.push_back(static_cast<int>(w.top[i]));
          c->base.emplace_back(w.base[i].images().begin(), w.base[i].images().end());
        }
      }
      break;
    }
    case GroupKind::subset: {
      std::vector<int> target(x.images().begin(), x.images().end());
      c->tables = bit_tables(target, static_cast<int>(x.degree()));
      break;
    }
    case GroupKind::vertex:
      c->images = x.images();
      break;
  }
  return c;
}

Vertex GraphGroup::apply_compiled(const Compiled& c, Vertex v) const {
  switch (kind_) {
    case GroupKind::wreath: {
      if (!c.tables.empty()) return apply_tables(c.tables, v) ^ c.flip;
      auto* h = static_cast<const HammingGraph*>(graph_.get());
      Vertex out = 0;
      for (int i = h->n() - 1; i >= 0; --i) {
        int d = static_cast<int>(v % h->q());
        v /= h->q();
        out += static_cast<Vertex>(c.base[i][d]) * h->weight(c.top[i]);
      }
      return out;
    }
    case GroupKind::subset: {
      auto* s = static_cast<const SubsetGraph*>(graph_.get());
      return s->codec().rank_mask(apply_tables(c.tables, s->codec().mask(v)));
    }
    case GroupKind::vertex:
      return c.images[v];
  }
  return v;
}

Vertex GraphGroup::apply_generator(std::size_t i, Vertex v) const { return apply_compiled(*compiled_[i], v); }

Vertex GraphGroup::apply(const Perm& x, Vertex v) const { return apply_compiled(*compile(x), v); }

void GraphGroup::verify_edges() const {
  const Graph& g = *graph_;
  std::vector<Vertex> nb, nb2;
  auto check = [&](std::size_t gi, Vertex u, Vertex w) {
    Vertex a = apply_generator(gi, u), b = apply_generator(gi, w);
    g.neighbors(a, nb2);
    if (std::find(nb2.begin(), nb2.end(), b) == nb2.end())
      throw PreconditionError("generator " + std::to_string(gi) + " is not a graph automorphism",
                              g.label(u) + " ~ " + g.label(w));
  };
  if (g.vertex_count() <= 10000) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      g.neighbors(u, nb);
      for (Vertex w : nb)
        if (u < w)
          for (std::size_t gi = 0; gi < compiled_.size(); ++gi) check(gi, u, w);
    }
    return;
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
  for (int t = 0; t < 1000; ++t) {
    Vertex u = pick(rng);
    g.neighbors(u, nb);
    if (nb.empty()) continue;
    Vertex w = nb[rng() % nb.size()];
    for (std::size_t gi = 0; gi < compiled_.size(); ++gi) check(gi, u, w);
  }
}

std::vector<Vertex> GraphGroup::orbit(Vertex v, std::uint64_t budget) const {
  graph_->check_vertex(v);
  VertexSet seen(graph_->vertex_count());
  seen.insert(v);
  std::vector<Vertex> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t gi = 0; gi < compiled_.size(); ++gi) {
      Vertex w = apply_generator(gi, out[i]);
      if (seen.insert(w)) {
        out.push_back(w);
        if (out.size() > budget) throw BudgetExceeded("vertex orbit exceeds budget");
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t GraphGroup::orbit_count(const std::vector<Vertex>& set) const {
  VertexSet seen(graph_->vertex_count());
  std::size_t orbits = 0;
  std::vector<Vertex> frontier, next;
  for (Vertex s : set) {
    if (!seen.insert(s)) continue;
    ++orbits;
    frontier.assign(1, s);
    while (!frontier.empty()) {
      next.clear();
      for (Vertex u : frontier)
        for (std::size_t gi = 0; gi < compiled_.size(); ++gi) {
          Vertex w = apply_generator(gi, u);
          if (seen.insert(w)) next.push_back(w);
        }
      frontier.swap(next);
    }
  }
  if (seen.size() != set.size()) throw ImplementationContradiction("an orbit leaves the supposedly invariant set");
  return orbits;
}

std::optional<std::pair<std::size_t, Vertex>> GraphGroup::preserves(const std::vector<Vertex>& set) const {
  for (std::size_t gi = 0; gi < compiled_.size(); ++gi)
    for (Vertex v : set)
      if (!std::binary_search(set.begin(), set.end(), apply_generator(gi, v))) return std::make_pair(gi, v);
  return std::nullopt;
}

GraphGroup GraphGroup::vertex_stabilizer(Vertex v) const {
  auto gens = schreier_stabilizer(domain_, v, [this](std::size_t i, std::uint64_t x) { return apply_generator(i, x); });
  return with_generators(std::move(gens), name_ + "_stab");
}

// ------------------------------------------------------------ stabilizers

std::vector<Perm> schreier_stabilizer(const PermGroup& g, std::uint64_t seed,
                                      const std::function<std::uint64_t(std::size_t, std::uint64_t)>& act,
                                      std::uint64_t budget) {
  const auto& gens = g.generators();
  std::vector<std::uint64_t> orb{seed};
  std::vector<Perm> trans{Perm(g.degree())};
  std::unordered_map<std::uint64_t, std::uint32_t> index{{seed, 0}};
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto y = act(s, orb[i]);
      if (index.emplace(y, static_cast<std::uint32_t>(orb.size())).second) {
        orb.push_back(y);
        trans.push_back(trans[i] * gens[s]);
        if (orb.size() > budget) throw BudgetExceeded("orbit exceeds budget in stabilizer computation");
      }
    }
  const BigInt target = g.order() / orb.size();
  StabChain chain(g.degree());
  std::vector<Perm> out;
  if (target == 1) return out;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto j = index.at(act(s, orb[i]));
      Perm sch = trans[i] * gens[s] * perm_inverse(trans[j]);
      if (sch.is_identity()) continue;
      if (chain.add_generator(sch)) {
        out.push_back(sch);
        if (chain.order() == target) return out;
      }
    }
  if (chain.order() != target) throw ImplementationContradiction("stabilizer order disagrees with orbit-stabilizer");
  return out;
}

std::optional<Perm> find_mapping(const PermGroup& g, std::uint64_t from, std::uint64_t to,
                                 const std::function<std::uint64_t(std::size_t, std::uint64_t)>& act,
                                 std::uint64_t budget) {
  const auto& gens = g.generators();
  if (from == to) return Perm(g.degree());
  std::vector<std::uint64_t> orb{from};
  std::vector<Perm> trans{Perm(g.degree())};
  std::unordered_map<std::uint64_t, std::uint32_t> index{{from, 0}};
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto y = act(s, orb[i]);
      if (index.emplace(y, static_cast<std::uint32_t>(orb.size())).second) {
        orb.push_back(y);
        trans.push_back(trans[i] * gens[s]);
        if (y == to) return trans.back();
        if (orb.size() > budget) throw BudgetExceeded("orbit exceeds budget in mapping search");
      }
    }
  return std::nullopt;
}

}  // namespace gcw
