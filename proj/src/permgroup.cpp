#include "gcw/permgroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "gcw/error.hpp"

namespace gcw {

std::string to_string(BigInt v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------- StabChain

StabChain::StabChain(std::size_t degree, std::vector<Point> base_prefix) : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw UsageError("base point out of range");
    push_level(b);
  }
}

void StabChain::push_level(Point b) {
  Level l;
  l.base = b;
  rebuild(l);
  levels_.push_back(std::move(l));
}

void StabChain::rebuild(Level& l) const {
  l.pos.assign(degree_, -1);
  l.orbit.clear();
  l.trans.clear();
  l.trans_inv.clear();
  l.orbit.push_back(l.base);
  l.pos[l.base] = 0;
  l.trans.push_back(Perm(degree_));
  l.trans_inv.push_back(Perm(degree_));
  for (std::size_t i = 0; i < l.orbit.size(); ++i) {
    Point x = l.orbit[i];
    for (const Perm& s : l.gens) {
      Point y = s[x];
      if (l.pos[y] >= 0) continue;
      l.pos[y] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(y);
      Perm t = l.trans[i] * s;
      l.trans_inv.push_back(perm_inverse(t));
      l.trans.push_back(std::move(t));
    }
  }
}

Point StabChain::moved_point(const Perm& g) const {
  for (Point x = 0; x < degree_; ++x)
    if (g[x] != x) return x;
  return 0;
}

std::pair<Perm, std::size_t> StabChain::sift(const Perm& g, std::size_t from) const {
  Perm h = g;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    Point b = h[L.base];
    if (L.pos[b] < 0) return {h, l};
    h = h * L.trans_inv[L.pos[b]];
  }
  return {h, levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [r, j] = sift(g);
  return j == levels_.size() && r.is_identity();
}

bool StabChain::add_generator(const Perm& g) {
  if (g.degree() != degree_) throw UsageError("generator degree mismatch");
  auto [r, j] = sift(g);
  if (j == levels_.size() && r.is_identity()) return false;
  if (j == levels_.size()) push_level(moved_point(r));
  for (std::size_t l = 0; l <= j; ++l) {
    levels_[l].gens.push_back(r);
    rebuild(levels_[l]);
  }
  complete(j);
  return true;
}

void StabChain::complete(std::size_t from) {
  std::int64_t i = static_cast<std::int64_t>(from);
  while (i >= 0) {
    bool changed = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !changed; ++oi) {
      for (std::size_t gi = 0; gi < levels_[li].gens.size() && !changed; ++gi) {
        const Level& L = levels_[li];
        const Perm& s = L.gens[gi];
        Point beta = L.orbit[oi];
        Point img = s[beta];
        Perm h = L.trans[oi] * s * L.trans_inv[L.pos[img]];
        if (h.is_identity()) continue;
        auto [r, j] = sift(h, li + 1);
        if (j == levels_.size() && r.is_identity()) continue;
        if (j == levels_.size()) push_level(moved_point(r));
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(r);
          rebuild(levels_[l]);
        }
        i = static_cast<std::int64_t>(j);
        changed = true;
      }
    }
    if (!changed) --i;
  }
}

BigInt StabChain::order() const {
  BigInt o = 1;
  for (const auto& l : levels_) {
    BigInt next = o * static_cast<BigInt>(l.orbit.size());
    if (next / l.orbit.size() != o) throw BudgetExceeded("group order overflows 128 bits");
    o = next;
  }
  return o;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

const Perm& StabChain::transversal(std::size_t level, Point b) const {
  const Level& L = levels_.at(level);
  if (L.pos[b] < 0) throw UsageError("point not in basic orbit");
  return L.trans[L.pos[b]];
}

StabChain StabChain::tail(std::size_t k) const {
  StabChain c(degree_);
  for (std::size_t l = k; l < levels_.size(); ++l) c.levels_.push_back(levels_[l]);
  return c;
}

// ---------------------------------------------------------------- PermGroup

struct PermGroup::Lazy {
  std::once_flag once;
  std::optional<StabChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), lazy_(std::make_shared<Lazy>()) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw UsageError("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, StabChain chain)
    : PermGroup(degree, std::move(generators)) {
  std::call_once(lazy_->once, [&] { lazy_->chain.emplace(std::move(chain)); });
}

const StabChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    StabChain c(degree_);
    for (const auto& g : gens_) c.add_generator(g);
    lazy_->chain.emplace(std::move(c));
  });
  return *lazy_->chain;
}

PermGroup PermGroup::symmetric(std::size_t n) {
  std::vector<Perm> g;
  if (n >= 2) {
    std::vector<Point> t(n), c(n);
    std::iota(t.begin(), t.end(), Point{0});
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
    g.emplace_back(t);
    g.emplace_back(c);
  }
  return PermGroup(n, std::move(g));
}

PermGroup PermGroup::alternating(std::size_t n) {
  std::vector<Perm> g;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> t(n);
    std::iota(t.begin(), t.end(), Point{0});
    t[0] = 1;
    t[1] = static_cast<Point>(i);
    t[i] = 0;
    g.emplace_back(t);
  }
  return PermGroup(n, std::move(g));
}

PermGroup PermGroup::cyclic(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(c)});
}

PermGroup PermGroup::stabilizer(Point pt) const {
  if (pt >= degree_) throw UsageError("point out of range");
  StabChain c(degree_, {pt});
  for (const auto& g : gens_) c.add_generator(g);
  StabChain t = c.tail(1);
  std::vector<Perm> gens = c.depth() > 1 ? c.generators(1) : std::vector<Perm>{};
  return PermGroup(degree_, std::move(gens), std::move(t));
}

std::vector<Point> PermGroup::orbit(Point pt) const {
  std::vector<char> seen(degree_, 0);
  std::vector<Point> orb{pt};
  seen[pt] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : gens_) {
      Point y = g[orb[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (Point y : o) seen[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

std::vector<Perm> PermGroup::elements(std::uint64_t budget) const {
  const StabChain& c = chain();
  if (c.order() > budget) throw BudgetExceeded("group too large to enumerate");
  std::vector<Perm> out{Perm(degree_)};
  // g = t_{k-1} * ... * t_0 with t_l from level l's transversal.
  for (std::size_t l = c.depth(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * c.orbit(l).size());
    for (const auto& h : out)
      for (Point b : c.orbit(l)) next.push_back(h * c.transversal(l, b));
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  const StabChain& c = chain();
  Perm g(degree_);
  for (std::size_t l = c.depth(); l-- > 0;) {
    const auto& orb = c.orbit(l);
    std::uniform_int_distribution<std::size_t> d(0, orb.size() - 1);
    g = g * c.transversal(l, orb[d(rng)]);
  }
  return g;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::is_normalized_by(const Perm& g) const {
  for (const auto& h : gens_)
    if (!contains(perm_conjugate(h, g))) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (const auto& g : other.generators())
    if (!is_normalized_by(g)) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& xs) {
  StabChain c(g.degree());
  std::vector<Perm> gens;
  for (const auto& x : xs)
    if (c.add_generator(x)) gens.push_back(x);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& s : g.generators()) {
      Perm y = perm_conjugate(gens[i], s);
      if (c.add_generator(y)) gens.push_back(y);
    }
  return PermGroup(g.degree(), std::move(gens), std::move(c));
}

}  // namespace gcw
