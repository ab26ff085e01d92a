#include <algorithm>
#include <set>

#include "doctest.h"
#include "gcw/constructions.hpp"
#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"
#include "gcw/structure.hpp"
#include "gcw/symmetry.hpp"

using namespace gcw;

namespace {

std::set<std::string> labels(const Graph& g, const std::vector<Vertex>& ids) {
  std::set<std::string> out;
  for (Vertex v : ids) out.insert(g.label(v));
  return out;
}

Code words(const std::string& graph, std::vector<std::string> ls) {
  auto g = make_graph(graph);
  std::vector<Vertex> ids;
  for (auto& l : ls) ids.push_back(g->parse_label(l));
  return Code(g, ids);
}

// Oracle: C_1 by brute force over all vertices.
std::vector<Vertex> neighbours_oracle(const Code& c) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < c.graph().vertex_count(); ++v) {
    if (c.contains(v)) continue;
    for (Vertex a : c.ids())
      if (distance(c.graph(), a, v) == 1) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

// T_V ⋊ AGL3(2) on H(8,2).
GraphGroup full_translations_agl(const Code& rm) {
  const auto& h = *rm.hamming();
  auto f2 = FiniteField::make(2, 1);
  std::vector<Perm> gens;
  for (int i = 0; i < h.n(); ++i) gens.push_back(wreath_translation(f2, h, h.weight(i)));
  for (const Perm& s : agl2_generators(3)) gens.push_back(wreath_entry_perm(s, 2));
  return GraphGroup(rm.graph_ptr(), GroupKind::wreath, gens, "TV:AGL3(2)");
}

}  // namespace

TEST_CASE("neighbour sets and reconstruction") {
  SUBCASE("binary Golay round trip") {
    Code c = classical_code("golay23");
    auto ns = neighbour_set(c);
    CHECK(ns.ids.size() == 4096u * 23u);
    Code back = reconstruct(ns);
    CHECK(back.ids() == c.ids());
    CHECK(reconstruction_roundtrip(c));
  }
  SUBCASE("oracle on small codes") {
    for (Code c : {rep_nq(5, 2), grm(2, 1, 3), rep_nq(3, 3)}) CHECK(neighbour_set(c).ids == neighbours_oracle(c));
  }
  SUBCASE("single vertex") {
    Code c = words("hamming:n=3,q=2", {"000"});
    CHECK(labels(c.graph(), reconstruct(neighbour_set(c)).ids()) == std::set<std::string>{"000"});
  }
  SUBCASE("below δ = 5 reconstruction can over-shoot") {
    Code c = words("hamming:n=4,q=2", {"0000", "1111"});
    Code c2 = words("hamming:n=4,q=2", {"0000", "1010", "0101", "1111"});
    auto x = neighbour_set(c);
    CHECK(labels(c.graph(), x.ids) == std::set<std::string>{"0001", "0010", "1101", "1110", "0100", "1000", "0111", "1011"});
    CHECK(neighbour_set(c2).ids == x.ids);
    Code back = reconstruct(x);
    CHECK(std::includes(back.ids().begin(), back.ids().end(), c.ids().begin(), c.ids().end()));
    CHECK(std::includes(back.ids().begin(), back.ids().end(), c2.ids().begin(), c2.ids().end()));
    CHECK(back.size() == 8);  // the even-weight vectors
    CHECK_FALSE(reconstruction_roundtrip(c));
  }
  SUBCASE("non-reduced hosts are flagged") {
    Code c = words("hamming:n=2,q=2", {"00"});
    CHECK_THROWS_AS(reconstruct(neighbour_set(c)), PreconditionError);
    Code k = words("cycle:m=4", {"0"});
    CHECK_THROWS_AS(reconstruct(neighbour_set(k)), PreconditionError);
  }
}

TEST_CASE("elusive codes") {
  SUBCASE("the H(4,2) pair") {
    Code c = words("hamming:n=4,q=2", {"0000", "1111"});
    Code c2 = words("hamming:n=4,q=2", {"0000", "1010", "0101", "1111"});
    auto r = is_elusive(c);
    REQUIRE(r.verdict == ElusiveVerdict::elusive);
    REQUIRE(r.witness);
    CHECK(r.image != c.ids());
    Code img(c.graph_ptr(), r.image);
    CHECK(neighbour_set(img).ids == neighbour_set(c).ids);
    CHECK(is_spherical_bitrade(c, img).holds);
    // translation by 1010 fixes C_1 and maps C into C'
    GraphGroup t(c.graph_ptr(), GroupKind::wreath,
                 {wreath_translation(FiniteField::make(2, 1), *c.hamming(), c.hamming()->parse_label("1010"))}, "t1010");
    auto rt = is_elusive(c, &t);
    REQUIRE(rt.verdict == ElusiveVerdict::elusive);
    CHECK(labels(c.graph(), rt.image) == std::set<std::string>{"1010", "0101"});
    CHECK(std::includes(c2.ids().begin(), c2.ids().end(), rt.image.begin(), rt.image.end()));
    CHECK(is_spherical_bitrade(c, Code(c.graph_ptr(), rt.image)).holds);
  }
  SUBCASE("binary Golay") {
    Code c = classical_code("golay23");
    auto g = builtin_group("golay23_aut", c);
    CHECK(is_elusive(c, &g).verdict == ElusiveVerdict::not_elusive_within_set);
    auto r = is_elusive(c);
    CHECK(r.verdict == ElusiveVerdict::inconclusive);
    CHECK(r.reason.find("determines") != std::string::npos);
  }
  SUBCASE("whole vertex set") {
    auto g = make_graph("hamming:n=3,q=2");
    Code all(g, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(is_elusive(all).verdict == ElusiveVerdict::not_elusive_within_set);
  }
  SUBCASE("searchers must fix C_1") {
    Code c = words("hamming:n=4,q=2", {"0000", "1111"});
    GraphGroup g(c.graph_ptr(), GroupKind::wreath,
                 {wreath_translation(FiniteField::make(2, 1), *c.hamming(), c.hamming()->parse_label("1000"))});
    CHECK_THROWS_AS(is_elusive(c, &g), PreconditionError);
  }
}

TEST_CASE("spherical bitrades") {
  Code c = words("hamming:n=4,q=2", {"0000"});
  Code d = words("hamming:n=4,q=2", {"0011"});
  auto r = is_spherical_bitrade(c, d);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(c.graph().label(*r.counterexample) == "0100");
  CHECK(r.count_c == 1);
  CHECK(r.count_c2 == 0);

  Code g = classical_code("golay23");
  CHECK(is_spherical_bitrade(g, g).holds);
  CHECK_THROWS_AS(is_spherical_bitrade(c, rep_nq(3, 2)), PreconditionError);
}

TEST_CASE("quotients") {
  SUBCASE("H(8,2) modulo the translations of RM2(1,3)") {
    Code rm = grm(2, 1, 3);
    auto g = full_translations_agl(rm);
    auto r = verify_quotient_prop(g, translation_generators(rm), 0, 2);
    CHECK(r.code_nt);
    CHECK(r.quotient_dt);
    CHECK(r.quotient_vertices == 16);
    // oracle: the quotient of H(8,2) by RM(1,3) has every coset at distance <= 2 from 0
    auto q = quotient(g.with_generators(translation_generators(rm), "N"));
    auto lv = bfs_levels(*q.graph, {0});
    CHECK(std::count(lv.begin(), lv.end(), 1) == 8);
    CHECK(std::count(lv.begin(), lv.end(), 2) == 7);
  }
  SUBCASE("4-cycle modulo rotation by 2") {
    auto c4 = make_graph("cycle:m=4");
    GraphGroup d(c4, GroupKind::vertex, {Perm::from_cycles("(0 1 2 3)", 4), Perm::from_cycles("(1 3)", 4)}, "D8");
    auto q = quotient(d.with_generators({Perm::from_cycles("(0 2)(1 3)", 4)}, "N"));
    CHECK(q.blocks.size() == 2);
    CHECK(q.graph->neighbors(0) == std::vector<Vertex>{1});
    CHECK(is_s_distance_transitive(induced_on_quotient(q, d), 1));
    CHECK(verify_quotient_prop(d, {Perm::from_cycles("(0 2)(1 3)", 4)}, 0, 1).quotient_dt);
  }
  SUBCASE("8-cycle modulo rotation by 4") {
    auto c8 = make_graph("cycle:m=8");
    GraphGroup d(c8, GroupKind::vertex,
                 {Perm::from_cycles("(0 1 2 3 4 5 6 7)", 8), Perm::from_cycles("(1 7)(2 6)(3 5)", 8)}, "D16");
    Perm rot4 = Perm::from_cycles("(0 4)(1 5)(2 6)(3 7)", 8);
    auto r = verify_quotient_prop(d, {rot4}, 0, 1);
    CHECK(r.code_nt);
    CHECK(r.quotient_dt);
    CHECK(r.quotient_vertices == 4);
    CHECK(r.quotient_girth == 4);
  }
  SUBCASE("hypotheses are checked") {
    auto c8 = make_graph("cycle:m=8");
    GraphGroup d(c8, GroupKind::vertex,
                 {Perm::from_cycles("(0 1 2 3 4 5 6 7)", 8), Perm::from_cycles("(1 7)(2 6)(3 5)", 8)}, "D16");
    // a reflection does not generate a normal subgroup
    CHECK_THROWS_AS(verify_quotient_prop(d, {Perm::from_cycles("(1 7)(2 6)(3 5)", 8)}, 0, 1), PreconditionError);
    // the full rotation group is transitive
    CHECK_THROWS_AS(verify_quotient_prop(d, {Perm::from_cycles("(0 1 2 3 4 5 6 7)", 8)}, 0, 1), PreconditionError);
  }
}
