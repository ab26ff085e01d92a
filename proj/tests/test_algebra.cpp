#include <random>

#include "doctest.h"
#include "gcw/action.hpp"
#include "gcw/error.hpp"
#include "gcw/field.hpp"
#include "gcw/permgroup.hpp"
#include "oracles.hpp"

using namespace gcw;

namespace {

std::vector<std::vector<std::uint32_t>> raw(const std::vector<Perm>& gs) {
  std::vector<std::vector<std::uint32_t>> r;
  for (const auto& g : gs) r.push_back(g.images());
  return r;
}

// Polynomial product modulo a monic polynomial over GF(p), digits low to high.
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& m, int p) {
  const std::size_t d = m.size() - 1;
  std::vector<int> r(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = 2 * d - 1; k >= d; --k) {
    int c = r[k];
    if (c)
      for (std::size_t i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - c * m[i]) % p + p) % p;
    if (k == d) break;
  }
  r.resize(d);
  return r;
}

}  // namespace

TEST_CASE("finite field small cases") {
  auto f2 = FiniteField::make(2, 1);
  CHECK(f2.add(1, 1) == 0);
  auto f3 = FiniteField::make(3, 1);
  CHECK(f3.mul(2, 2) == 1);
  auto f4 = FiniteField::make(2, 2);
  CHECK(f4.polynomial() == std::vector<int>{1, 1, 1});
  // x = index 2, x+1 = index 3.
  CHECK(f4.mul(2, 2) == 3);
  CHECK_THROWS_AS(FiniteField::make(4, 1), UsageError);
  CHECK_THROWS_AS(FiniteField::make(2, 17), UsageError);
}

TEST_CASE("finite field axioms and polynomial oracle for q <= 32") {
  for (int q = 2; q <= 32; ++q) {
    auto [p, d] = prime_power(q);
    if (!p) continue;
    auto f = FiniteField::make(p, d);
    REQUIRE(f.q() == q);
    for (int a = 0; a < q; ++a) {
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (d > 1) {
          auto prod = polymulmod(f.digits(a), f.digits(b), f.polynomial(), p);
          CHECK(f.from_digits(prod) == f.mul(a, b));
        } else {
          CHECK(f.mul(a, b) == a * b % p);
        }
        for (int c = 0; c < q; c += 3) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
    }
    // characteristic p
    int s = 0;
    for (int i = 0; i < p; ++i) s = f.add(s, 1);
    CHECK(s == 0);
  }
  auto f64 = FiniteField::make(2, 6);
  CHECK(f64.q() == 64);
  CHECK(f64.frobenius(f64.generator(), 6) == f64.generator());
}

TEST_CASE("perm composition is left to right") {
  auto a = Perm::from_cycles("(0 1)", 3);
  auto b = Perm::from_cycles("(1 2)", 3);
  auto ab = perm_compose(a, b);
  // x^(ab) = (x^a)^b: 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1.
  CHECK(ab[0] == 2);
  CHECK(ab[1] == 0);
  CHECK(ab[2] == 1);
  CHECK(ab == Perm::from_cycles("(0 2 1)", 3));
  for (Point x = 0; x < 3; ++x) CHECK(ab[x] == b[a[x]]);
  CHECK(perm_compose(Perm(3), b) == b);
  CHECK(perm_inverse(Perm::from_cycles("(0 1 2)", 3)) == Perm::from_cycles("(0 2 1)", 3));
  CHECK((a * perm_inverse(a)).is_identity());
  CHECK(Perm::from_cycles("(0 1 2)(3 4)", 5).cycles() == "(0 1 2)(3 4)");
  CHECK_THROWS_AS(perm_compose(Perm(3), Perm(4)), UsageError);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0}), UsageError);
}

TEST_CASE("orbits under point and subset actions") {
  PermGroup c5 = PermGroup::cyclic(5);
  CHECK(orbit(c5, 0) == std::vector<Point>{0, 1, 2, 3, 4});
  PermGroup t(3, {Perm::from_cycles("(0 1)", 3)});
  CHECK(orbit(t, 2) == std::vector<Point>{2});
  auto subs = orbit(PermGroup::symmetric(3), PointList{0, 1}, ActionKind::subset);
  CHECK(subs == std::vector<PointList>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("group order and stabilizer against closure oracle") {
  auto s4 = PermGroup::symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(oracle::closure(raw(s4.generators()), 4).size() == 24);
  CHECK(PermGroup::trivial(5).order() == 1);
  auto st = PermGroup::cyclic(5).stabilizer(0);
  CHECK(st.order() == 1);
  CHECK(PermGroup::alternating(6).order() == 360);
}

TEST_CASE("random groups: chain order equals closure order, orbit-stabilizer") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::vector<Perm> gens;
    int ng = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < ng; ++k) {
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    PermGroup g(n, gens);
    auto cl = oracle::closure(raw(gens), n);
    CHECK(g.order() == cl.size());
    CHECK(g.elements().size() == cl.size());
    for (Point pt = 0; pt < n; ++pt)
      CHECK(static_cast<BigInt>(g.orbit(pt).size()) * g.stabilizer(pt).order() == g.order());
    for (const auto& e : cl) CHECK(g.contains(Perm(e)));
  }
}

TEST_CASE("transitivity and homogeneity") {
  auto s5 = PermGroup::symmetric(5);
  CHECK(is_k_transitive(s5, 3));
  CHECK(is_k_homogeneous(s5, 3));
  auto c7 = PermGroup::cyclic(7);
  CHECK_FALSE(is_k_homogeneous(c7, 2));
  CHECK(orbit(PermGroup(7, {Perm::from_cycles("(0 1 2 3 4 5 6)", 7)}), PointList{0, 1},
              ActionKind::subset)
            .size() == 7);
  // x -> x+1 and x -> 2x on Z/7: the Frobenius group of order 21.
  PermGroup f21(7, {Perm::from_cycles("(0 1 2 3 4 5 6)", 7), Perm::from_cycles("(1 2 4)(3 6 5)", 7)});
  CHECK(f21.order() == 21);
  CHECK(is_k_homogeneous(f21, 2));
  CHECK_FALSE(is_k_transitive(f21, 2));
}

TEST_CASE("two-transitive type") {
  PermGroup agl15(5, {Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(1 2 4 3)", 5)});
  CHECK(agl15.order() == 20);
  CHECK(two_transitive_type(agl15) == TwoTransitiveType::affine);
  CHECK(two_transitive_type(PermGroup::symmetric(5)) == TwoTransitiveType::almost_simple);
  CHECK(two_transitive_type(PermGroup::symmetric(2)) == TwoTransitiveType::affine);
  CHECK(two_transitive_type(PermGroup::symmetric(4)) == TwoTransitiveType::affine);
  CHECK(two_transitive_type(PermGroup::alternating(5)) == TwoTransitiveType::almost_simple);
  CHECK_THROWS_AS(two_transitive_type(PermGroup::cyclic(5)), PreconditionError);

  // Oracle for S5: no normal subgroup of order 5 among all subgroups generated
  // by a single element and its conjugates.
  auto s5 = PermGroup::symmetric(5);
  for (const auto& x : s5.elements())
    if (!x.is_identity()) CHECK(normal_closure(s5, {x}).order() != 5);
}

TEST_CASE("normalizer in Sym") {
  PermGroup c4(4, {Perm::from_cycles("(0 1 2 3)", 4)});
  auto n = normalizer_in_sym(c4);
  CHECK(n.order() == 8);
  CHECK(normalizer_in_sym(PermGroup::trivial(4)).order() == 24);
  PermGroup v4(4, {Perm::from_cycles("(0 1)(2 3)", 4), Perm::from_cycles("(0 2)(1 3)", 4)});
  CHECK(normalizer_in_sym(v4).order() == 24);
  // Exhaustive oracle: count g in S4 with g^-1 T g = T.
  int cnt = 0;
  for (const auto& g : PermGroup::symmetric(4).elements()) cnt += c4.is_normalized_by(g);
  CHECK(cnt == 8);
  std::vector<Perm> bad{Perm::from_cycles("(0 1)", 4)};
  CHECK_THROWS_AS(normalizer_in_sym(c4, &bad), PreconditionError);
  CHECK_THROWS_AS(normalizer_in_sym(PermGroup::cyclic(9)), BudgetExceeded);
}

TEST_CASE("affine groups AGL_d(p) are classified affine for p^d <= 32") {
  // Built from translations and GL generators acting on vectors indexed base p.
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {2, 3}, {5, 1}, {3, 2}, {7, 1}, {2, 4}}) {
    int n = 1;
    for (int i = 0; i < d; ++i) n *= p;
    auto idx = [&](std::vector<int> v) {
      int r = 0;
      for (int i = d - 1; i >= 0; --i) r = r * p + v[i];
      return r;
    };
    auto vec = [&](int x) {
      std::vector<int> v(d);
      for (int i = 0; i < d; ++i) {
        v[i] = x % p;
        x /= p;
      }
      return v;
    };
    std::vector<Perm> gens;
    std::vector<Point> tr(n), sh(n), sc(n), el(n);
    for (int x = 0; x < n; ++x) {
      auto v = vec(x);
      auto t = v;
      t[0] = (t[0] + 1) % p;
      tr[x] = idx(t);
      auto s = v;  // cyclic shift of coordinates
      for (int i = 0; i < d; ++i) s[(i + 1) % d] = v[i];
      sh[x] = idx(s);
      auto c = v;  // scale first coordinate by a primitive root
      int g = 1;
      for (int r = 2; r < p; ++r) {
        int y = 1, k = 0;
        do {
          y = y * r % p;
          ++k;
        } while (y != 1);
        if (k == p - 1) {
          g = r;
          break;
        }
      }
      c[0] = c[0] * g % p;
      sc[x] = idx(c);
      auto e = v;  // transvection
      if (d > 1) e[0] = (e[0] + e[1]) % p;
      el[x] = idx(e);
    }
    gens = {Perm(tr), Perm(sh), Perm(sc), Perm(el)};
    PermGroup g(n, gens);
    CHECK(is_k_transitive(g, 2));
    CHECK(two_transitive_type(g) == TwoTransitiveType::affine);
  }
}
