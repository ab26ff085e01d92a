#include "gcw/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "gcw/error.hpp"
#include "gcw/field.hpp"

namespace gcw {

PointList act_subset(const PointList& s, const Perm& g) {
  PointList r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = g[s[i]];
  std::sort(r.begin(), r.end());
  return r;
}

PointList act_tuple(const PointList& t, const Perm& g) {
  PointList r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = g[t[i]];
  return r;
}

namespace {

struct ListHash {
  std::size_t operator()(const PointList& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::uint64_t falling(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= (n - i);
  return r;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<PointList> orbit(const PermGroup& g, const PointList& seed, ActionKind act,
                             std::uint64_t budget) {
  PointList s = seed;
  if (act == ActionKind::subset) std::sort(s.begin(), s.end());
  for (Point x : s)
    if (x >= g.degree()) throw UsageError("seed outside the action domain");
  std::unordered_set<PointList, ListHash> seen{s};
  std::vector<PointList> queue{s};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& h : g.generators()) {
      PointList y = act == ActionKind::subset ? act_subset(queue[i], h) : act_tuple(queue[i], h);
      if (seen.insert(y).second) {
        if (seen.size() > budget) throw BudgetExceeded("orbit exceeds budget");
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Point> orbit(const PermGroup& g, Point seed) { return g.orbit(seed); }

bool is_k_transitive(const PermGroup& g, std::size_t k) {
  const std::size_t n = g.degree();
  if (k > n) throw UsageError("k exceeds the degree");
  if (k == 0) return true;
  PointList seed(k);
  std::iota(seed.begin(), seed.end(), Point{0});
  bool tr = orbit(g, seed, ActionKind::tuple).size() == falling(n, k);
  if (tr && !is_k_homogeneous(g, k))
    throw ImplementationContradiction("k-transitive group is not k-homogeneous");
  return tr;
}

bool is_k_homogeneous(const PermGroup& g, std::size_t k) {
  const std::size_t n = g.degree();
  if (k > n) throw UsageError("k exceeds the degree");
  if (k == 0) return true;
  PointList seed(k);
  std::iota(seed.begin(), seed.end(), Point{0});
  return orbit(g, seed, ActionKind::subset).size() == binom(n, k);
}

std::string to_string(TwoTransitiveType t) {
  return t == TwoTransitiveType::affine ? "affine" : "almost_simple";
}

TwoTransitiveType two_transitive_type(const PermGroup& g, std::uint64_t budget) {
  if (g.degree() < 2 || !is_k_transitive(g, 2)) throw PreconditionError("group is not 2-transitive");
  const std::size_t n = g.degree();
  auto [p, d] = prime_power(n);
  if (p == 0) return TwoTransitiveType::almost_simple;
  const auto elems = g.elements(budget);
  std::unordered_set<Perm, PermHash> tried;
  for (const auto& x : elems) {
    if (x.is_identity() || x.support_size() != n || x.order() != static_cast<std::uint64_t>(p)) continue;
    if (tried.count(x)) continue;
    // Mark the conjugacy class so each class is closed only once.
    std::vector<Perm> cls{x};
    tried.insert(x);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (const auto& s : g.generators()) {
        Perm y = perm_conjugate(cls[i], s);
        if (tried.insert(y).second) cls.push_back(std::move(y));
      }
    PermGroup h = normal_closure(g, {x});
    if (h.order() == n && h.is_abelian() && h.is_transitive()) return TwoTransitiveType::affine;
  }
  return TwoTransitiveType::almost_simple;
}

PermGroup normalizer_in_sym(const PermGroup& t, const std::vector<Perm>* candidates) {
  const std::size_t n = t.degree();
  if (candidates) {
    for (const auto& c : *candidates)
      if (!t.is_normalized_by(c))
        throw PreconditionError("candidate does not normalize T", c.cycles());
    std::vector<Perm> gens = *candidates;
    for (const auto& x : t.generators()) gens.push_back(x);
    return PermGroup(n, std::move(gens));
  }
  if (n > 8) throw BudgetExceeded("normalizer search is exhaustive only up to degree 8");
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  StabChain acc(n);
  std::vector<Perm> gens;
  do {
    Perm g(img);
    if (acc.contains(g)) continue;
    if (t.is_normalized_by(g) && acc.add_generator(g)) gens.push_back(g);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup(n, std::move(gens));
}

std::vector<PermGroup> subgroups_up_to_conjugacy(std::size_t n) {
  if (n > 5) throw BudgetExceeded("subgroup enumeration is limited to degree 5");
  const auto all = PermGroup::symmetric(n).elements();
  using Key = std::vector<Perm>;
  std::set<Key> seen{Key{Perm(n)}};
  std::vector<std::pair<Key, std::vector<Perm>>> queue{{Key{Perm(n)}, {}}};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& x : all) {
      if (std::binary_search(queue[i].first.begin(), queue[i].first.end(), x)) continue;
      auto gens = queue[i].second;
      gens.push_back(x);
      Key k = PermGroup(n, gens).elements();
      if (seen.insert(k).second) queue.emplace_back(std::move(k), std::move(gens));
    }
  std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  std::set<Key> classified;
  std::vector<PermGroup> out;
  for (const auto& [key, gens] : queue) {
    if (classified.count(key)) continue;
    for (const Perm& g : all) {
      Key conj;
      for (const Perm& x : key) conj.push_back(perm_conjugate(x, g));
      std::sort(conj.begin(), conj.end());
      classified.insert(std::move(conj));
    }
    out.emplace_back(n, gens);
  }
  return out;
}

}  // namespace gcw
