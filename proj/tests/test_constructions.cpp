#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gcw/action.hpp"
#include "gcw/constructions.hpp"
#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"
#include "oracles.hpp"

using namespace gcw;

namespace {

std::set<std::string> labels(const Code& c) {
  std::set<std::string> out;
  for (Vertex v : c.ids()) out.insert(c.graph().label(v));
  return out;
}

std::vector<std::vector<int>> words(const Code& c) {
  std::vector<std::vector<int>> out;
  for (Vertex v : c.ids()) out.push_back(c.hamming()->digits(v));
  return out;
}

PermGroup group(std::size_t deg, std::vector<std::string> cyc) {
  std::vector<Perm> g;
  for (auto& s : cyc) g.push_back(Perm::from_cycles(s, deg));
  return PermGroup(deg, g);
}

int rank_distance_oracle(const FormsGraph& g, Vertex a, Vertex b) {
  auto f = g.field();
  Matrix x = g.matrix(a), y = g.matrix(b);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j) x[i][j] = f.sub(x[i][j], y[i][j]);
  return rank(f, x);
}

}  // namespace

TEST_CASE("repetition and product codes") {
  CHECK(labels(rep_nq(4, 2)) == std::set<std::string>{"0000", "1111"});
  CHECK(rep_nq(3, 4).size() == 4);

  Code s3 = permutation_code(PermGroup::symmetric(3));
  Code r = rep_code(s3, 2);
  CHECK(r.size() == 6);
  CHECK(r.length() == 6);
  std::set<std::vector<int>> expanded;
  for (auto w : words(s3)) {
    auto e = w;
    e.insert(e.end(), w.begin(), w.end());
    expanded.insert(e);
  }
  auto got = words(r);
  CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expanded);

  auto bit = std::make_shared<HammingGraph>(1, 2);
  Code full = prod_code(Code(bit, {0, 1}), 3);
  CHECK(full.size() == 8);

  for (const Code& c : {s3, rep_nq(3, 2), grm(2, 1, 3), permutation_code(PermGroup::alternating(4))})
    for (int k = 1; k <= 3; ++k) CHECK(min_distance(rep_code(c, k)) == k * min_distance(c));

  Code p2 = prod_code(s3, 2);
  CHECK(p2.size() == 36);
  CHECK(oracle::min_distance(words(p2)) == min_distance(p2));
  CHECK_THROWS_AS(rep_code(cycle_code(3), 2), PreconditionError);
}

TEST_CASE("permutation code of A4") {
  Code c = permutation_code(PermGroup::alternating(4));
  // 1-based symbols, lowered by one below.
  const std::vector<std::string> golden = {"1234", "2143", "3412", "4321", "3124", "4132",
                                          "4213", "1423", "2314", "2431", "3241", "1342"};
  std::set<std::string> expected;
  for (auto s : golden) {
    for (char& ch : s) ch = static_cast<char>(ch - 1);
    expected.insert(s);
  }
  CHECK(labels(c) == expected);

  Code id = permutation_code(PermGroup::trivial(5));
  CHECK(labels(id) == std::set<std::string>{"01234"});
  CHECK(min_distance(permutation_code(PermGroup::symmetric(3))) == 2);
  CHECK(oracle::min_distance(words(permutation_code(PermGroup::symmetric(3)))) == 2);
}

TEST_CASE("permutation code action identities and holomorph") {
  auto s4 = PermGroup::symmetric(4).elements();
  for (const PermGroup& t : {PermGroup::alternating(4), PermGroup::cyclic(4), PermGroup::symmetric(4),
                             group(4, {"(0 1)(2 3)", "(0 2)(1 3)"})})
    CHECK_NOTHROW(check_permcode_identities(t, s4));

  PermGroup a4 = PermGroup::alternating(4);
  Code c = permutation_code(a4);
  GraphGroup g = holomorph_autos(a4, PermGroup::symmetric(4).generators());
  CHECK_FALSE(g.preserves(c.ids()).has_value());
  CHECK(g.orbit(c.ids()[0]) == c.ids());
  CHECK(g.order() == BigInt{12 * 24});
  CHECK_THROWS_AS(holomorph_autos(a4, {Perm::from_cycles("(0 1 2 3)", 5)}), Error);
  auto diag = diag_subgroup(PermGroup::symmetric(3), 4);
  CHECK(PermGroup(12, diag).order() == BigInt{6});
}

TEST_CASE("representations") {
  PermGroup s6 = group(6, {"(0 1 2 3 4 5)", "(0 1)"});
  CHECK(verify_representation(s6, Representation{s6.generators()}).size() == 720);
  CHECK_THROWS_AS(verify_representation(s6, Representation{{Perm::from_cycles("(0 1)", 6), Perm::from_cycles("(0 1)", 6)}}),
                  PreconditionError);
  // The sign map is a homomorphism but not faithful.
  CHECK_THROWS_AS(
      verify_representation(s6, Representation{{Perm::from_cycles("(0 1)", 2), Perm::from_cycles("(0 1)", 2)}}),
      PreconditionError);

  std::mt19937_64 rng(7);
  Perm c = PermGroup::symmetric(6).random_element(rng);
  Representation conj{{perm_conjugate(s6.generators()[0], c), perm_conjugate(s6.generators()[1], c)}};
  CHECK(equivalent_representations(s6, Representation{s6.generators()}, conj));

  for (const char* name : {"s6", "a6", "asl32"}) {
    TwistedPair tp = twisted_pair(name);
    CAPTURE(name);
    CHECK_NOTHROW(verify_representation(tp.t, tp.second));
    CHECK_FALSE(equivalent_representations(tp.t, Representation{tp.t.generators()}, tp.second));
    auto found = find_twisted_representation(tp.t);
    REQUIRE(found.has_value());
    CHECK(found->images == tp.second.images);
  }
  CHECK(twisted_pair("asl32").t.order() == BigInt{1344});
  CHECK_THROWS_AS(twisted_pair("m11"), UsageError);
}

TEST_CASE("twisted permutation codes") {
  PermGroup a4 = PermGroup::alternating(4);
  Representation nat{a4.generators()};
  CHECK(twisted_permutation_code(a4, {nat, nat}) == rep_code(permutation_code(a4), 2));

  const std::map<std::string, std::pair<int, int>> expected = {{"s6", {8, 4}}, {"a6", {8, 6}}, {"asl32", {12, 8}}};
  for (const auto& [name, deltas] : expected) {
    TwistedPair tp = twisted_pair(name);
    Representation natural{tp.t.generators()};
    Code tw = twisted_permutation_code(tp.t, {natural, tp.second});
    Code rep = rep_code(permutation_code(tp.t), 2);
    CAPTURE(name);
    CHECK(tw.size() == rep.size());
    CHECK(oracle::min_distance(words(tw)) == deltas.first);
    CHECK(oracle::min_distance(words(rep)) == deltas.second);
    CHECK(min_distance(tw) == deltas.first);
  }
}

TEST_CASE("Prod(T,k,H)") {
  PermGroup s3 = PermGroup::symmetric(3), s4 = PermGroup::symmetric(4);
  CHECK(prod_tkh(s3, 2, PermGroup::trivial(3)) == rep_code(permutation_code(s3), 2));

  // Direct enumeration oracle on image tuples.
  auto oracle_count = [](const PermGroup& t, const PermGroup& h) {
    std::set<std::vector<Point>> seen;
    for (const Perm& x : t.elements())
      for (const Perm& h1 : h.elements())
        for (const Perm& h2 : h.elements()) {
          auto a = (h1 * x).images(), b = (h2 * x).images();
          a.insert(a.end(), b.begin(), b.end());
          seen.insert(a);
        }
    return seen.size();
  };
  PermGroup a3 = PermGroup::alternating(3);
  PermGroup v4 = group(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  CHECK(oracle_count(s3, a3) == 18);
  CHECK(oracle_count(s4, v4) == 96);
  CHECK(prod_tkh(s3, 2, a3).size() == 18);
  CHECK(prod_tkh(s4, 2, v4).size() == 96);
  CHECK_THROWS_AS(prod_tkh(s4, 2, group(4, {"(0 1)"})), PreconditionError);
}

TEST_CASE("generalised Reed-Muller code RM2(1,3) and its projection") {
  Code c = grm(2, 1, 3);
  const std::set<std::string> golden = {"11111111", "00000000", "11110000", "00001111", "11001100", "00110011",
                                       "11000011", "00111100", "10101010", "01010101", "10100101", "01011010",
                                       "10011001", "01100110", "10010110", "01101001"};
  CHECK(labels(c) == golden);
  CHECK(c.linear().has_value());
  CHECK(min_distance(c) == 4);

  Code p = project_code(c, {0, 1, 2, 3});
  CHECK(labels(p) == std::set<std::string>{"1111", "0000", "1100", "0011", "1010", "0101", "1001", "0110"});
  CHECK(project_code(c, {0, 1, 2, 3, 4, 5, 6, 7}) == c);
  CHECK(project_code(rep_nq(8, 2), {1, 4, 6}) == rep_nq(3, 2));
  CHECK_THROWS_AS(project_code(c, {}), UsageError);
  CHECK_THROWS_AS(project_code(c, {2, 1}), UsageError);
  CHECK_THROWS_AS(project_code(c, {8}), UsageError);

  GraphGroup g = builtin_group("rm13_aut", c);
  CHECK(g.order() == BigInt{16 * 1344});
  GraphGroup chi = project_group(g, {0, 1, 2, 3});
  CHECK(chi.order() == BigInt{8 * 24});
  CHECK_FALSE(chi.preserves(p.ids()).has_value());

  CHECK(grm(3, 1, 2).size() == 27);
  CHECK(grm(2, 3, 3).size() == 256);
  CHECK(grm(2, 0, 3) == rep_nq(8, 2));
  CHECK_THROWS_AS(grm(2, 4, 3), UsageError);
  CHECK_THROWS_AS(grm(6, 1, 2), UsageError);
}

TEST_CASE("projective Reed-Muller codes") {
  Code c = prm(3, 1, 2);
  const std::set<std::string> golden = {"0000", "0111", "0222", "1012", "2021", "2102", "1201", "2210", "1120"};
  CHECK(labels(c) == golden);
  CHECK(min_distance(c) == 3);
  CHECK_FALSE(is_cyclic(c));

  auto pts = prm_points(FiniteField::make(3, 1), 2);
  CHECK(pts == std::vector<Row>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});

  Code simplex = prm(2, 1, 3);
  CHECK(simplex.size() == 8);
  CHECK(min_distance(simplex) == 4);
  Code ham = dual_code(simplex);
  CHECK(ham.size() == 16);
  CHECK(min_distance(ham) == 3);
  CHECK(is_perfect(ham));
  CHECK(ham == make_construction("hamming7"));
  CHECK(prm(3, 2, 2).size() == 27);
  CHECK_THROWS_AS(prm(3, 5, 2), UsageError);
}

TEST_CASE("Gabidulin codes") {
  struct P {
    int q, n, k, s;
    std::size_t size;
  };
  for (P p : {P{2, 3, 2, 1, 64}, P{2, 3, 1, 1, 8}, P{2, 3, 1, 2, 8}, P{3, 2, 1, 1, 9}, P{2, 4, 2, 1, 256}}) {
    Code c = gabidulin(p.q, p.n, p.k, p.s);
    CAPTURE(p.n);
    CAPTURE(p.k);
    CHECK(c.size() == p.size);
    const auto& g = static_cast<const FormsGraph&>(c.graph());
    int best = p.n;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        best = std::min(best, rank_distance_oracle(g, c.ids()[i], c.ids()[j]));
    CHECK(best == p.n - p.k + 1);
    if (c.size() <= 64) CHECK(min_distance(c) == best);
  }
  CHECK_THROWS_AS(gabidulin(2, 4, 2, 2), UsageError);
  CHECK_THROWS_AS(gabidulin(4, 2, 1, 1), UsageError);
  CHECK_THROWS_AS(gabidulin(2, 3, 3, 1), UsageError);
}

TEST_CASE("catalog codes") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    Code c = classical_code(e.name);
    CHECK(c.length() == e.n);
    CHECK(c.size() == e.size);
    CHECK(min_distance(c) == e.delta);
    auto p = auto_partition(c);
    REQUIRE(p.rho().has_value());
    CHECK(*p.rho() == e.rho);
  }
  // Covering radii of the small nonlinear members against the exhaustive oracle.
  for (const char* name : {"hadamard12", "punct_hadamard11", "even_punct_hadamard11"}) {
    Code c = classical_code(name);
    CHECK(oracle::covering_radius(words(c), 2) == catalog_entry(name).rho);
  }
  {
    // a deep hole of the length-12 code
    Code c = classical_code("hadamard12");
    const Vertex hole = c.graph().parse_label("111111110000");
    for (Vertex w : c.ids()) CHECK(distance(c.graph(), hole, w) >= 4);
  }
  auto h = hadamard12_matrix();
  CHECK(std::all_of(h[0].begin(), h[0].end(), [](int x) { return x == 1; }));
  CHECK(catalog_entry("nordstrom_robinson16").provenance == "stored data");
  CHECK_THROWS_AS(classical_code("golay25"), UsageError);
}

TEST_CASE("Golay automorphism group") {
  Code g = classical_code("golay23");
  Perm x = golay_extra_automorphism(g);
  CHECK(x[0] == 0);
  CHECK(x[1] == 1);
  CHECK(x[2] == 2);
  CHECK(x[3] != 3);
  std::vector<Point> shift(23), twice(23);
  for (int i = 0; i < 23; ++i) {
    shift[i] = (i + 1) % 23;
    twice[i] = (2 * i) % 23;
  }
  CHECK(PermGroup(23, {Perm(shift), Perm(twice), x}).order() == BigInt{10200960});
  GraphGroup aut = builtin_group("golay23_aut", g);
  CHECK(aut.order() == BigInt{4096} * BigInt{10200960});
}

TEST_CASE("codes in cycle, Johnson and Kneser graphs") {
  Code c4 = cycle_code(4);
  CHECK(c4.ids() == std::vector<Vertex>{0, 4});
  CHECK(auto_partition(c4).rho() == 2);

  Code j = johnson_subset_code(5, 2, 4, SubsetMode::inside);
  CHECK(j.size() == 6);
  CHECK(min_distance(j) == 1);
  CHECK(johnson_subset_code(6, 3, 2, SubsetMode::containing).size() == 4);
  CHECK_THROWS_AS(johnson_subset_code(5, 3, 2, SubsetMode::inside), UsageError);

  Code k3 = kneser_int(2, 5, 2, 1);
  CHECK(k3.size() == 5);
  CHECK(min_distance(k3) == 2);
  CHECK(min_distance(kneser_int(1, 6, 0, 3)) == 1);
  CHECK(min_distance(kneser_int(2, 5, 1, 2)) == 1);
  CHECK_THROWS_AS(kneser_int(1, 5, 2, 1), UsageError);
  CHECK_THROWS_AS(kneser_int(3, 3, 2, 1), UsageError);

  // Brute-force count of 4-subsets of {0..8} meeting the three blocks in {1,1,2}.
  int count = 0;
  for (std::uint32_t m = 0; m < (1u << 9); ++m) {
    if (std::popcount(m) != 4) continue;
    std::vector<int> s{std::popcount(m & 7u), std::popcount(m & 56u), std::popcount(m & 448u)};
    std::sort(s.begin(), s.end());
    if (s == std::vector<int>{1, 1, 2}) ++count;
  }
  Code oi = odd_imp(3, 3, {2, 1, 1});
  CHECK(static_cast<int>(oi.size()) == count);
  CHECK_THROWS_AS(odd_imp(3, 3, {1, 1, 1}), UsageError);

  Code t = tetrahedron_code();
  CHECK(t.size() == 560);
  CHECK(t.graph().spec() == "kneser:v=13,k=6");
}

TEST_CASE("regular spreads") {
  for (int q : {2, 3, 4}) {
    Code c = regular_spread_code(q);
    CAPTURE(q);
    CHECK(c.size() == static_cast<std::size_t>(q * q + 1));
    const auto& g = static_cast<const GeometryGraph&>(c.graph());
    std::vector<int> cover(g.point_count(), 0);
    for (Vertex v : c.ids())
      for (Vertex p : g.neighbors(v)) ++cover[p];
    CHECK(std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; }));
  }
  CHECK(builtin_group("spread_aut", regular_spread_code(2)).order() == BigInt{360});
  CHECK(builtin_group("spread_aut", regular_spread_code(3)).order() == BigInt{5760});
  CHECK_THROWS_AS(regular_spread_code(5), UsageError);
}

TEST_CASE("partial ovoids of W3(q)") {
  for (int q : {2, 3, 5}) {
    Code c = w3_partial_ovoid(q);
    CAPTURE(q);
    CHECK(c.size() == static_cast<std::size_t>(q * q - 1));
    if (q > 2) CHECK(find_sl2_sharply_transitive(q) == sl2_sharply_transitive(q));
  }
  Code c2 = w3_partial_ovoid(2);
  CHECK(min_distance(c2) == 4);
  CHECK(builtin_group("w3_ovoid_aut", c2).order() == BigInt{9});
  CHECK_THROWS_AS(w3_partial_ovoid(7), PreconditionError);
  // Generators of a group that is not regular on nonzero vectors.
  CHECK_THROWS_AS(w3_partial_ovoid(3, {{{1, 1}, {0, 1}}}), PreconditionError);
  auto gl = matrix_group_closure(FiniteField::make(3, 1), {{{1, 1}, {0, 1}}, {{0, 1}, {2, 0}}});
  CHECK(gl.size() == 24);
}

TEST_CASE("builtin groups preserve their codes") {
  CHECK(builtin_group("rep_full", rep_nq(8, 2)).order() == BigInt{2 * 40320});
  CHECK(builtin_group("hamming7_aut", make_construction("hamming7")).order() == BigInt{16 * 168});
  CHECK(builtin_group("cycle_aut", cycle_code(5)).order() == BigInt{4});
  CHECK(builtin_group("tetrahedron_aut", tetrahedron_code()).order() == BigInt{1344 * 120});
  CHECK(builtin_group("kneser_int_aut", kneser_int(2, 5, 2, 1)).order() == BigInt{2 * 120});
  CHECK(builtin_group("johnson_subset_aut", johnson_subset_code(5, 2, 4, SubsetMode::inside)).order() ==
        BigInt{24});
  CHECK(builtin_group("odd_imp_aut", odd_imp(3, 3, {2, 1, 1})).order() == BigInt{6 * 6 * 6 * 6});
  CHECK(builtin_group("holomorph", permutation_code(PermGroup::alternating(4))).order() == BigInt{288});
  CHECK_THROWS_AS(builtin_group("rm13_aut", linear_code(FiniteField::make(2, 1), {{1, 1, 0, 0, 0, 0, 0, 0}})),
                  PreconditionError);
  CHECK_THROWS_AS(builtin_group("nope", rep_nq(8, 2)), UsageError);
  CHECK(agl2_generators(3).size() == 3);
  CHECK(PermGroup(8, agl2_generators(3)).order() == BigInt{1344});
  CHECK(PermGroup(4, agl2_generators(2)).order() == BigInt{24});
}

TEST_CASE("construction expressions") {
  CHECK(make_construction("rep:n=8,q=2") == rep_nq(8, 2));
  CHECK(make_construction("grm:q=2,k=1,t=3") == grm(2, 1, 3));
  CHECK(make_construction("johnson_subset:v=5,k=2,u=4,mode=inside").size() == 6);
  CHECK(make_construction("odd_imp:a=3,b=3,m=1.1.2").size() == odd_imp(3, 3, {1, 1, 2}).size());
  CHECK(make_construction("perm:group=a4").size() == 12);
  CHECK(make_construction("twisted:name=s6").size() == 720);
  CHECK(make_construction("tetrahedron").size() == 560);
  CHECK(make_construction("gabidulin:q=2,n=3,k=2,s=1").size() == 64);
  CHECK_THROWS_AS(make_construction("rep:n=8"), UsageError);
  CHECK_THROWS_AS(make_construction("rep:n=x,q=2"), UsageError);
  CHECK_THROWS_AS(make_construction("unknown"), UsageError);
  CHECK_THROWS_AS(make_construction("perm:group=q8"), UsageError);
}
