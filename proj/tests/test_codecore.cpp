#include <random>
#include <set>

#include "doctest.h"
#include "gcw/code.hpp"
#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"
#include "gcw/incidence.hpp"
#include "oracles.hpp"

using namespace gcw;

namespace {

GraphPtr ham(int n, int q) { return std::make_shared<HammingGraph>(n, q); }

Code from_labels(GraphPtr g, std::vector<std::string> ls) {
  std::vector<Vertex> ids;
  for (auto& l : ls) ids.push_back(g->parse_label(l));
  return Code(g, ids);
}

// Cyclic code with generator polynomial g (low to high) of length n.
Matrix cyclic_generator(const std::vector<int>& g, int n) {
  const int k = n - static_cast<int>(g.size()) + 1;
  Matrix m(k, Row(n, 0));
  for (int r = 0; r < k; ++r)
    for (std::size_t i = 0; i < g.size(); ++i) m[r][r + i] = g[i];
  return m;
}

Code golay23() {
  return linear_code(FiniteField::make(2, 1), cyclic_generator({1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1}, 23), "golay23");
}

// Distance from v to the nearest codeword, by scanning all codewords.
int oracle_level(const Graph& g, const Code& c, Vertex v) {
  int best = 1 << 20;
  for (Vertex a : c.ids()) best = std::min(best, distance(g, a, v));
  return best;
}

Code random_linear(std::mt19937_64& rng, int n, int q, int k) {
  auto f = FiniteField::make(q == 4 ? 2 : q, q == 4 ? 2 : 1);
  std::uniform_int_distribution<int> d(0, q - 1);
  Matrix m(k, Row(n));
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  m[0][0] = 1;  // never the zero matrix
  return linear_code(f, m);
}

}  // namespace

TEST_CASE("repetition code Rep4(2)") {
  auto c = from_labels(ham(4, 2), {"0000", "1111"});
  CHECK(min_distance(c) == 4);
  CHECK(error_capacity(c) == 1);
  auto p = distance_partition(c, PartitionMode::dense);
  CHECK(p.sizes() == std::vector<std::uint64_t>{2, 8, 6});
  CHECK(p.rho() == 2);
  auto prof = s_regularity(c, p, 2);
  CHECK(prof.regular);
  // frozen from the exhaustive neighbour-count oracle below
  CHECK(prof.counts[0] == LevelCounts{0, 4, 0});
  CHECK(prof.counts[1] == LevelCounts{0, 3, 1});
  CHECK(prof.counts[2] == LevelCounts{0, 0, 4});
  CHECK(is_completely_regular(c));
  CHECK_FALSE(is_perfect(c));
  CHECK(is_cyclic(c));
}

TEST_CASE("regularity oracle: per-vertex counts on small codes") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    int n = 3 + t % 4;
    auto g = ham(n, 2);
    std::uniform_int_distribution<Vertex> d(0, g->vertex_count() - 1);
    std::set<Vertex> s;
    int want = 1 + t % 5;
    while (static_cast<int>(s.size()) < want) s.insert(d(rng));
    Code c(g, {s.begin(), s.end()});
    auto p = distance_partition(c, PartitionMode::dense);
    // oracle: levels by brute force, then counts by direct inspection
    std::vector<int> lev(g->vertex_count());
    for (Vertex v = 0; v < g->vertex_count(); ++v) lev[v] = oracle_level(*g, c, v);
    int rho = *std::max_element(lev.begin(), lev.end());
    REQUIRE(p.rho() == rho);
    std::vector<std::set<std::tuple<int, int, int>>> seen(rho + 1);
    for (Vertex v = 0; v < g->vertex_count(); ++v) {
      REQUIRE(p.level_of(v) == lev[v]);
      int a = 0, b = 0, cc = 0;
      for (Vertex w : g->neighbors(v)) {
        a += lev[w] == lev[v];
        b += lev[w] == lev[v] + 1;
        cc += lev[w] == lev[v] - 1;
      }
      seen[lev[v]].insert({a, b, cc});
    }
    bool oracle_regular = true;
    for (auto& x : seen) oracle_regular &= x.size() == 1;
    auto prof = s_regularity(c, p, rho);
    CHECK(prof.regular == oracle_regular);
    if (!prof.regular) {
      REQUIRE(prof.witness);
      auto w = *prof.witness;
      CHECK(lev[w.vertex] == w.level);
      CHECK_FALSE(w.found == w.expected);
    }
  }
}

TEST_CASE("an adjacent pair in H(4,2) is a product with an edge, hence regular") {
  auto c = from_labels(ham(4, 2), {"0000", "0001"});
  CHECK(min_distance(c) == 1);
  auto prof = s_regularity(c, 3);
  CHECK(prof.regular);
  CHECK_FALSE(prof.witness);
  CHECK(prof.counts[1] == LevelCounts{1, 2, 1});
  // breaking the symmetry gives a witness
  auto d = from_labels(ham(4, 2), {"0000", "0001", "0110"});
  auto bad = s_regularity(d, 1);
  CHECK_FALSE(bad.regular);
  REQUIRE(bad.witness);
}

TEST_CASE("cycle code {0,4} in C8") {
  auto g = std::make_shared<CycleGraph>(8);
  Code c(g, {0, 4});
  auto p = distance_partition(c, PartitionMode::dense);
  CHECK(p.level_set(1) == std::vector<Vertex>{1, 3, 5, 7});
  CHECK(p.level_set(2) == std::vector<Vertex>{2, 6});
  CHECK(p.rho() == 2);
  CHECK(min_distance(c) == 4);
  CHECK(is_completely_regular(c));
}

TEST_CASE("binary Golay code parameters") {
  auto c = golay23();
  CHECK(c.size() == 4096);
  CHECK(min_distance(c) == 7);
  CHECK(error_capacity(c) == 3);
  auto syn = distance_partition(c, PartitionMode::syndrome);
  CHECK(syn.rho() == 3);
  CHECK(syn.coset_levels().size() == 2048);
  CHECK(syn.sizes() == std::vector<std::uint64_t>{4096, 4096 * 23, 4096 * 253, 4096 * 1771});
  CHECK(is_perfect(c));
  CHECK(s_regularity(c, syn, 3).regular);
  auto dense = distance_partition(c, PartitionMode::dense);
  CHECK(dense.sizes() == syn.sizes());
  CHECK(is_completely_regular(c, dense));
  CHECK(verify_sphere_packing(c, 3));
  CHECK_THROWS_AS(verify_sphere_packing(c, 4), PreconditionError);
  auto sp = distance_partition(c, PartitionMode::spheres, 2);
  CHECK_FALSE(sp.rho());
  CHECK(sp.sizes() == std::vector<std::uint64_t>{4096, 4096 * 23, 4096 * 253});
  CHECK_THROWS_AS(distance_partition(c, PartitionMode::spheres, 4), PreconditionError);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Vertex> d(0, c.graph().vertex_count() - 1);
  for (int t = 0; t < 2000; ++t) {
    Vertex v = d(rng);
    CHECK(syn.level_of(v) == dense.level_of(v));
    if (dense.level_of(v) <= 2) CHECK(sp.level_of(v) == dense.level_of(v));
    else CHECK_FALSE(sp.level_of(v));
  }
}

TEST_CASE("Reed-Muller RM(1,3) and the [7,4,3] Hamming code") {
  auto f = FiniteField::make(2, 1);
  Matrix rm = {{1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}};
  auto c = linear_code(f, rm);
  CHECK(c.size() == 16);
  CHECK(min_distance(c) == 4);
  std::vector<std::vector<int>> words;
  for (Vertex v : c.ids()) words.push_back(c.hamming()->digits(v));
  CHECK(oracle::min_distance(words) == 4);
  // [7,4,3] Hamming code as the dual of the simplex code
  Matrix simplex = {{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}};
  auto h = dual_code(linear_code(f, simplex));
  CHECK(h.size() == 16);
  CHECK(min_distance(h) == 3);
  CHECK(is_perfect(h));
  CHECK(is_cyclic(h));
}

TEST_CASE("perfection on repetition codes") {
  auto r3 = from_labels(ham(3, 2), {"000", "111"});
  CHECK(is_perfect(r3));
  CHECK(verify_sphere_packing(r3, 1));
  auto r4 = from_labels(ham(4, 2), {"0000", "1111"});
  CHECK_FALSE(is_perfect(r4));
}

TEST_CASE("partition agreement on random linear codes") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    int q = (t % 3 == 0) ? 3 : (t % 3 == 1 ? 2 : 4);
    int n = q == 2 ? 6 + t % 9 : (q == 3 ? 4 + t % 5 : 3 + t % 4);
    int k = 1 + t % std::max(1, n - 2);
    auto c = random_linear(rng, n, q, k);
    if (c.size() < 2) continue;
    auto dense = distance_partition(c, PartitionMode::dense);
    auto syn = distance_partition(c, PartitionMode::syndrome);
    REQUIRE(dense.sizes() == syn.sizes());
    REQUIRE(dense.rho() == syn.rho());
    auto rd = s_regularity(c, dense, *dense.rho());
    auto rs = s_regularity(c, syn, *syn.rho());
    CHECK(rd.regular == rs.regular);
    if (rd.regular) CHECK(rd.counts == rs.counts);
    int e = error_capacity(c);
    auto sp = distance_partition(c, PartitionMode::spheres, e);
    for (int i = 0; i <= e; ++i) {
      CHECK(sp.level_set(i) == dense.level_set(i));
      CHECK(sp.sizes()[i] == c.size() * sphere(c.graph(), 0, i).size());
    }
    CHECK(is_perfect(c) == (*dense.rho() == e));
  }
}

TEST_CASE("nonlinear codes: pairwise and BFS minimum distance") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    int n = 3 + t % 4, q = 2 + t % 3;
    auto g = ham(n, q);
    std::uniform_int_distribution<Vertex> d(0, g->vertex_count() - 1);
    std::set<Vertex> s;
    while (s.size() < 2 + static_cast<std::size_t>(t % 6)) s.insert(d(rng));
    Code c(g, {s.begin(), s.end()});
    std::vector<std::vector<int>> words;
    for (Vertex v : c.ids()) words.push_back(c.hamming()->digits(v));
    CHECK(min_distance(c) == oracle::min_distance(words));
    auto p = distance_partition(c, PartitionMode::dense);
    CHECK(*p.rho() == oracle::covering_radius(words, q));
    CHECK(is_perfect(c) == (*p.rho() == error_capacity(c)));
  }
  auto g = incidence_graph(build_w3(2));
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<Vertex> d(0, g->vertex_count() - 1);
    std::set<Vertex> s;
    while (s.size() < 3) s.insert(d(rng));
    Code c(g, {s.begin(), s.end()});
    int best = 1 << 20;
    for (Vertex a : c.ids())
      for (Vertex b : c.ids())
        if (a < b) best = std::min(best, distance(*g, a, b));
    CHECK(min_distance(c) == best);
  }
}

TEST_CASE("cyclicity scan") {
  auto c = from_labels(ham(4, 2), {"0000", "1100"});
  CHECK_FALSE(is_cyclic(c));
  auto full = from_labels(ham(2, 2), {"00", "01", "10", "11"});
  CHECK(is_cyclic(full));
}

TEST_CASE("trivial and invalid codes") {
  auto g = ham(3, 2);
  Code one(g, {5});
  CHECK_THROWS_AS(min_distance(one), PreconditionError);
  CHECK_THROWS_AS(Code(g, {1, 1}), UsageError);
  CHECK_THROWS_AS(Code(g, {8}), UsageError);
  auto empty = read_code_text(g, "\n# nothing here\n");
  CHECK(empty.size() == 0);
  CHECK_THROWS_AS(min_distance(empty), PreconditionError);
  auto f = FiniteField::make(2, 1);
  CHECK_THROWS_AS(Code(g, {0, 7, 3}, LinearDescriptor{f, {{1, 1, 1}}}), ImplementationContradiction);
  CHECK_NOTHROW(Code(g, {0, 7}, LinearDescriptor{f, {{1, 1, 1}}}));
}

TEST_CASE("code file formats round trip") {
  auto g = ham(5, 3);
  auto c = read_code_text(g, "01201\n  22222 \n00000 # zero\n");
  CHECK(c.size() == 3);
  CHECK(write_code_text(c) == "00000\n01201\n22222\n");
  auto j = read_code_json(g, write_code_json(c));
  CHECK(j.ids() == c.ids());
  CHECK_THROWS_AS(read_code_json(g, "{\"x\":1}"), UsageError);
  CHECK_THROWS_AS(read_code_text(g, "0123"), UsageError);
}
