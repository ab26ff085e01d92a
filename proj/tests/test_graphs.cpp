#include <random>
#include <set>

#include "doctest.h"
#include "gcw/error.hpp"
#include "gcw/graph.hpp"
#include "gcw/graph_algo.hpp"
#include "gcw/incidence.hpp"
#include "gcw/spec.hpp"

using namespace gcw;

namespace {

void check_symmetric_irreflexive(const Graph& g) {
  std::vector<Vertex> nb, nb2;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    g.neighbors(v, nb);
    std::set<Vertex> s(nb.begin(), nb.end());
    REQUIRE(s.size() == nb.size());
    REQUIRE(!s.count(v));
    for (Vertex w : nb) {
      g.neighbors(w, nb2);
      REQUIRE(std::find(nb2.begin(), nb2.end(), v) != nb2.end());
    }
  }
}

}  // namespace

TEST_CASE("hamming graph adjacency against exhaustive oracle") {
  HammingGraph h(4, 2);
  CHECK(h.vertex_count() == 16);
  for (Vertex u = 0; u < 16; ++u) {
    auto nb = h.neighbors(u);
    CHECK(nb.size() == 4);
    std::set<Vertex> s(nb.begin(), nb.end());
    for (Vertex v = 0; v < 16; ++v) CHECK(s.count(v) == (__builtin_popcountll(u ^ v) == 1));
  }
  check_symmetric_irreflexive(h);
  auto sp = sphere(h, 0, 2);
  CHECK(sp.size() == 6);
  for (Vertex v : sp) CHECK(h.weight_of(v) == 2);
  CHECK(ball(h, 5, 0) == std::vector<Vertex>{5});
  CHECK(h.label(h.parse_label("0110")) == "0110");
  CHECK(h.parse_label("1000") == 8);  // entry 0 most significant
}

TEST_CASE("hamming distance equals differing coordinates (exhaustive, n*q <= 16)") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 4}, {5, 3}, {8, 2}}) {
    HammingGraph h(n, q);
    auto lev0 = bfs_levels(h, {0});
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      auto d = h.digits(v);
      int w = 0;
      for (int x : d) w += x != 0;
      CHECK(lev0[v] == w);
      CHECK(h.from_digits(d) == v);
    }
    check_symmetric_irreflexive(h);
  }
}

TEST_CASE("subset codec round trip and johnson distance") {
  JohnsonGraph j(8, 3);
  CHECK(j.vertex_count() == 56);
  for (Vertex v = 0; v < j.vertex_count(); ++v) CHECK(j.codec().rank(j.codec().unrank(v)) == v);
  check_symmetric_irreflexive(j);
  for (Vertex u = 0; u < j.vertex_count(); ++u) {
    auto lev = bfs_levels(j, {u});
    auto a = j.codec().unrank(u);
    for (Vertex v = 0; v < j.vertex_count(); ++v) {
      auto b = j.codec().unrank(v);
      int inter = 0;
      for (int x : a)
        for (int y : b) inter += x == y;
      CHECK(lev[v] == 3 - inter);
      CHECK(distance(j, u, v) == 3 - inter);
    }
  }
  CHECK(j.codec().unrank(0) == std::vector<int>{0, 1, 2});
  CHECK(j.label(j.parse_label("{1,4,6}")) == "{1,4,6}");
  SubsetCodec big(20, 7);
  for (Vertex v = 0; v < big.count(); v += 7) CHECK(big.rank(big.unrank(v)) == v);
}

TEST_CASE("kneser graph: petersen") {
  KneserGraph k(5, 2);
  CHECK(k.vertex_count() == 10);
  for (Vertex v = 0; v < 10; ++v) CHECK(k.neighbors(v).size() == 3);
  check_symmetric_irreflexive(k);
  CHECK(diameter(k) == 2);
  auto ia = is_distance_regular(k);
  REQUIRE(ia);
  CHECK(ia->str() == "{3,2;1,1}");
  // neighbours are exactly the disjoint subsets
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v : k.neighbors(u)) CHECK((k.codec().mask(u) & k.codec().mask(v)) == 0);
  KneserGraph k136(13, 6);
  CHECK(k136.vertex_count() == 1716);
  CHECK(k136.neighbors(0).size() == 7);
}

TEST_CASE("distance-regular arrays") {
  auto ia = is_distance_regular(HammingGraph(3, 2));
  REQUIRE(ia);
  CHECK(ia->str() == "{3,2,1;1,2,3}");
  // A path on 3 vertices is not distance-regular.
  ExplicitGraph path("custom", "path3", {{1}, {0, 2}, {1}});
  CHECK_FALSE(is_distance_regular(path));
  IncidenceStructure s;
  s.name = "irregular";
  s.points = 3;
  s.lines = {{0, 1}, {1, 2}};
  CHECK_FALSE(is_distance_regular(*incidence_graph(s)));
}

TEST_CASE("cycle graph") {
  CycleGraph c(8);
  CHECK(distance(c, 0, 5) == 3);
  check_symmetric_irreflexive(c);
  CHECK(is_bipartite(c));
  CHECK_FALSE(is_bipartite(CycleGraph(7)));
  CHECK(girth(c) == 8);
}

TEST_CASE("forms graph: rank metric") {
  FormsGraph fg(2, 3, 2);
  CHECK(fg.vertex_count() == 64);
  CHECK(fg.neighbors(0).size() == 3 * 7);
  check_symmetric_irreflexive(fg);
  auto lev = bfs_levels(fg, {0});
  for (Vertex v = 0; v < fg.vertex_count(); ++v) CHECK(lev[v] == rank(fg.field(), fg.matrix(v)));
  CHECK(fg.label(fg.parse_label("101/011")) == "101/011");
  FormsGraph f3(2, 2, 3);
  check_symmetric_irreflexive(f3);
  CHECK(f3.neighbors(5).size() == 8 * 8 / 2);
}

TEST_CASE("generalised quadrangle W3(q) and PG3(q)") {
  auto w2 = build_w3(2);
  CHECK(w2.points == 15);
  CHECK(w2.lines.size() == 15);
  auto ord = w2.gq_order();
  REQUIRE(ord);
  CHECK(*ord == std::make_pair(2, 2));
  auto g = incidence_graph(w2);
  CHECK(g->vertex_count() == 30);
  for (Vertex v = 0; v < 30; ++v) CHECK(g->neighbors(v).size() == 3);
  CHECK(girth(*g) == 8);
  CHECK(diameter(*g) == 4);
  auto w3 = build_w3(3);
  CHECK(w3.points == 40);
  CHECK(w3.lines.size() == 40);
  CHECK(w3.gq_order() == std::make_optional(std::make_pair(3, 3)));
  auto g3 = incidence_graph(w3);
  CHECK(girth(*g3) == 8);
  CHECK(diameter(*g3) == 4);
  auto pg = build_pg3(2);
  CHECK(pg.points == 15);
  CHECK(pg.lines.size() == 35);
  CHECK_FALSE(pg.gq_order());
  CHECK(incidence_graph(pg)->vertex_count() == 50);
  // Gaussian binomials for q=3: 40 points, 130 lines
  auto pg33 = build_pg3(3);
  CHECK(pg33.points == 40);
  CHECK(pg33.lines.size() == 130);
  // dual of W3(q) is again a GQ of order (q,q)
  CHECK(dualize(w2).gq_order() == std::make_optional(std::make_pair(2, 2)));
}

TEST_CASE("single flag incidence graph is an edge") {
  IncidenceStructure s;
  s.name = "flag";
  s.points = 1;
  s.lines = {{0}};
  auto g = incidence_graph(s);
  CHECK(g->vertex_count() == 2);
  CHECK(g->neighbors(0) == std::vector<Vertex>{1});
}

TEST_CASE("collinearity graph of the dual of PG3(2) is J_2(4,2)") {
  auto pg = build_pg3(2);
  auto col = collinearity_graph(dualize(pg));
  auto gr = grassmann_graph(4, 2, 2);
  REQUIRE(col->vertex_count() == gr->vertex_count());
  CHECK(col->adjacency() == gr->adjacency());
  auto ia = is_distance_regular(*gr);
  REQUIRE(ia);
  CHECK(ia->str() == "{18,8;1,9}");
}

TEST_CASE("graph spec strings") {
  CHECK(make_graph("hamming:n=8,q=2")->vertex_count() == 256);
  CHECK(make_graph("kneser:v=13,k=6")->vertex_count() == 1716);
  CHECK(make_graph("w3:q=2")->vertex_count() == 30);
  CHECK(make_graph("pg3:q=2")->vertex_count() == 50);
  CHECK(make_graph("cycle:m=8")->vertex_count() == 8);
  CHECK(make_graph("johnson:v=5,k=2")->vertex_count() == 10);
  CHECK(make_graph("forms:m=3,n=3,q=2")->vertex_count() == 512);
  CHECK(make_graph("grassmann:d=4,k=2,q=3")->vertex_count() == 130);
}

TEST_CASE("graph spec errors") {
  CHECK_THROWS_AS(make_graph("hamming:n=8"), UsageError);
  CHECK_THROWS_AS(make_graph("kneser:v=5,k=3"), UsageError);
  CHECK_THROWS_AS(make_graph("johnson:v=5,k=5"), UsageError);
  CHECK_THROWS_AS(make_graph("nosuch:x=1"), UsageError);
  CHECK(SpecString::parse("hamming:q=2,n=8").format() == "hamming:n=8,q=2");
}

TEST_CASE("random distance symmetry and triangle inequality") {
  std::mt19937_64 rng(1);
  std::vector<GraphPtr> gs{make_graph("hamming:n=6,q=3"), make_graph("kneser:v=9,k=3"),
                           make_graph("johnson:v=9,k=4"), make_graph("w3:q=3"),
                           make_graph("forms:m=2,n=3,q=3"), make_graph("cycle:m=11")};
  for (const auto& g : gs) {
    std::uniform_int_distribution<Vertex> d(0, g->vertex_count() - 1);
    for (int t = 0; t < 300; ++t) {
      Vertex a = d(rng), b = d(rng), c = d(rng);
      int ab = distance(*g, a, b), ba = distance(*g, b, a);
      CHECK(ab == ba);
      CHECK(ab <= distance(*g, a, c) + distance(*g, c, b));
    }
  }
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(HammingGraph(3, 2)));
  CHECK_FALSE(is_reduced(HammingGraph(2, 2)));
  CHECK(is_reduced(KneserGraph(7, 3)));
  CHECK_FALSE(is_reduced(JohnsonGraph(4, 2)));
  CHECK_FALSE(is_reduced(CycleGraph(4)));
  // the formulas agree with the exhaustive check on small members
  auto exhaustive = [](const Graph& g) {
    std::set<std::vector<Vertex>> s;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto nb = g.neighbors(v);
      std::sort(nb.begin(), nb.end());
      if (!s.insert(nb).second) return false;
    }
    return true;
  };
  for (auto spec : {"hamming:n=2,q=2", "hamming:n=2,q=3", "hamming:n=3,q=2", "johnson:v=4,k=2",
                    "johnson:v=5,k=2", "johnson:v=6,k=3", "kneser:v=5,k=2", "kneser:v=7,k=3", "cycle:m=4",
                    "cycle:m=5"}) {
    auto g = make_graph(spec);
    CHECK_MESSAGE(is_reduced(*g) == exhaustive(*g), spec);
  }
}
