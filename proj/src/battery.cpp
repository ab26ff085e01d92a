#include "gcw/battery.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gcw/action.hpp"
#include "gcw/constructions.hpp"
#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"
#include "gcw/structure.hpp"
#include "gcw/symmetry.hpp"

namespace gcw {

namespace {

std::string params(const Code& c) {
  auto p = auto_partition(c);
  std::ostringstream os;
  os << "(" << c.length() << "," << c.size() << "," << min_distance(c) << ";" << *p.rho() << ")";
  return os.str();
}

std::set<std::string> label_set(const Code& c) {
  std::set<std::string> out;
  for (Vertex v : c.ids()) out.insert(c.graph().label(v));
  return out;
}

Code from_labels(const std::string& graph, const std::vector<std::string>& ls) {
  auto g = make_graph(graph);
  std::vector<Vertex> ids;
  for (const auto& l : ls) ids.push_back(g->parse_label(l));
  return Code(g, ids);
}

void expect(BatteryCheck& r, const std::string& expected, const std::string& computed) {
  r.expected = expected;
  r.computed = computed;
  r.pass = expected == computed;
}

std::string yes(bool b) { return b ? "true" : "false"; }

// Same-type vertices of an incidence graph at distance >= 4 from every
// codeword: empty iff the partial ovoid/spread is maximal.
bool maximal_partial(const Code& c) {
  const auto& ig = dynamic_cast<const IncidenceGraph&>(c.graph());
  const bool points = c.ids().front() < ig.point_count();
  auto lv = bfs_levels(ig, c.ids());
  for (Vertex v = 0; v < ig.vertex_count(); ++v)
    if ((v < ig.point_count()) == points && !c.contains(v) && lv[v] != 2) return false;
  return true;
}

// ---------------------------------------------------------------- property suites

struct PropertyTally {
  int instances = 0;
  std::vector<std::string> failures;
  void fail(const std::string& what) {
    if (failures.size() < 5) failures.push_back(what);
    else failures.back() = "...";
  }
};

void check_partitions(const Code& c, PropertyTally& t) {
  auto dense = distance_partition(c, PartitionMode::dense);
  const int e = c.size() >= 2 ? error_capacity(c) : 0;
  auto sph = distance_partition(c, PartitionMode::spheres, e);
  for (int i = 0; i <= e; ++i)
    if (sph.level_set(i) != dense.level_set(i)) t.fail(c.name() + ": sphere level " + std::to_string(i));
  if (c.linear()) {
    auto syn = distance_partition(c, PartitionMode::syndrome);
    if (syn.sizes() != dense.sizes() || syn.rho() != dense.rho()) t.fail(c.name() + ": syndrome sizes");
    const Vertex nv = c.graph().vertex_count();
    const Vertex step = nv > 100000 ? nv / 100000 : 1;
    for (Vertex v = 0; v < nv; v += step)
      if (syn.level_of(v) != dense.level_of(v)) {
        t.fail(c.name() + ": syndrome level at " + c.graph().label(v));
        break;
      }
  }
  if (c.size() >= 2 && is_perfect(c) != (*dense.rho() == e)) t.fail(c.name() + ": perfect vs rho=e");
}

void check_group_properties(const Code& c, const GraphGroup& g, PropertyTally& t, std::mt19937_64& rng) {
  const Vertex alpha = c.ids().front();
  if (g.order() != g.orbit(alpha).size() * g.vertex_stabilizer(alpha).order())
    t.fail(c.name() + ": orbit-stabilizer");
  const int e = c.size() >= 2 ? error_capacity(c) : 0;
  for (int s = 1; s <= e; ++s) check_local_equivalence(c, g, s);  // throws on disagreement
  if (const auto* h = c.hamming(); h && e >= 1) {
    auto p = auto_partition(c);
    for (int s = 1; s <= std::min(e, *p.rho()); ++s)
      if (is_s_nt(c, g, p, s).s_nt && !check_entry_homogeneity(c, g, s).holds)
        t.fail(c.name() + ": s-NT without entry homogeneity at s=" + std::to_string(s));
  }
  std::uniform_int_distribution<Vertex> pick(0, c.graph().vertex_count() - 1);
  for (int k = 0; k < 5; ++k) {
    Perm x = g.domain().random_element(rng), y = g.domain().random_element(rng);
    Vertex v = pick(rng);
    if (g.apply(x * y, v) != g.apply(y, g.apply(x, v))) t.fail(c.name() + ": action is not compatible");
    if (const auto* h = c.hamming()) {
      if (WreathElement::from_domain(x, h->n(), h->q()).apply(*h, v) != g.apply(x, v))
        t.fail(c.name() + ": wreath action differs from compiled action");
    }
  }
}

Code random_code(std::mt19937_64& rng, int k) {
  static const std::vector<std::pair<int, int>> hosts = {{3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}};
  auto [n, q] = hosts[rng() % hosts.size()];
  auto h = std::make_shared<HammingGraph>(n, q);
  const std::string name = "random" + std::to_string(k);
  if (rng() % 2) {
    FiniteField f = FiniteField::make(q, 1);
    const int rows = 1 + static_cast<int>(rng() % (n - 1));
    while (true) {
      Matrix m(rows, Row(n));
      for (auto& r : m)
        for (auto& x : r) x = static_cast<int>(rng() % q);
      if (rank(f, m) == rows) return linear_code(f, m, name);
    }
  }
  const Vertex nv = h->vertex_count();
  std::set<Vertex> ids;
  const std::size_t size = 2 + rng() % std::min<Vertex>(5, nv - 2);
  while (ids.size() < size) ids.insert(rng() % nv);
  return Code(h, std::vector<Vertex>(ids.begin(), ids.end()), std::nullopt, name);
}

void properties_catalog(BatteryCheck& r) {
  PropertyTally t;
  std::mt19937_64 rng(13);
  for (const auto& e : catalog()) {
    Code c = classical_code(e.name);
    c.set_name(e.name);
    check_partitions(c, t);
    ++t.instances;
  }
  const std::vector<std::pair<Code, std::string>> pairs = {
      {classical_code("golay23"), "golay23_aut"}, {grm(2, 1, 3), "rm13_aut"},
      {dual_code(prm(2, 1, 3), "hamming7"), "hamming7_aut"}, {rep_nq(7, 2), "rep_full"}, {rep_nq(3, 5), "rep_full"}};
  for (const auto& [c, gname] : pairs) {
    check_group_properties(c, builtin_group(gname, c), t, rng);
    ++t.instances;
  }
  std::ostringstream os;
  os << t.instances << " instances, " << t.failures.size() << " failures";
  for (auto& f : t.failures) os << "; " << f;
  r.expected = std::to_string(t.instances) + " instances, 0 failures";
  r.computed = os.str();
  r.pass = t.failures.empty();
}

void properties_random(BatteryCheck& r) {
  PropertyTally t;
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 100; ++k) {
    Code c = random_code(rng, k);
    check_partitions(c, t);
    check_group_properties(c, aut_bruteforce(c), t, rng);
    ++t.instances;
  }
  std::ostringstream os;
  os << t.instances << " instances, " << t.failures.size() << " failures";
  for (auto& f : t.failures) os << "; " << f;
  r.expected = "100 instances, 0 failures";
  r.computed = os.str();
  r.pass = t.failures.empty();
}

// ---------------------------------------------------------------- items

std::vector<BatteryItem> make_items() {
  std::vector<BatteryItem> v;
  auto add = [&](int crit, std::string name, std::function<void(BatteryCheck&)> f) {
    v.push_back(BatteryItem{crit, std::move(name), std::move(f)});
  };

  add(1, "golay: golay23 parameters", [](BatteryCheck& r) { expect(r, "(23,4096,7;3)", params(classical_code("golay23"))); });
  add(1, "golay: golay11 parameters", [](BatteryCheck& r) { expect(r, "(11,729,5;2)", params(classical_code("golay11"))); });
  add(2, "golay: golay23 completely transitive under T_C:M23", [](BatteryCheck& r) {
    Code c = classical_code("golay23");
    auto rep = is_s_nt(c, builtin_group("golay23_aut", c), 3);
    expect(r, "s_nt=true completely_transitive=true",
           "s_nt=" + yes(rep.s_nt) + " completely_transitive=" + yes(rep.completely_transitive));
  });

  add(3, "reed-muller: grm(2,1,3) codewords", [](BatteryCheck& r) {
    const std::set<std::string> golden = {"11111111", "00000000", "11110000", "00001111", "11001100", "00110011",
                                         "11000011", "00111100", "10101010", "01010101", "10100101", "01011010",
                                         "10011001", "01100110", "10010110", "01101001"};
    auto got = label_set(grm(2, 1, 3));
    r.expected = "16 listed tuples";
    r.computed = got == golden ? "16 listed tuples" : "differs (" + std::to_string(got.size()) + " tuples)";
    r.pass = got == golden;
  });
  add(3, "reed-muller: projection of grm(2,1,3) to the first block", [](BatteryCheck& r) {
    const std::set<std::string> golden = {"1111", "0000", "1100", "0011", "1010", "0101", "1001", "0110"};
    auto got = label_set(project_code(grm(2, 1, 3), {0, 1, 2, 3}));
    r.expected = "8 listed tuples";
    r.computed = got == golden ? "8 listed tuples" : "differs (" + std::to_string(got.size()) + " tuples)";
    r.pass = got == golden;
  });
  add(3, "reed-muller: prm(3,1,2) codewords, distance and cyclicity", [](BatteryCheck& r) {
    const std::set<std::string> golden = {"0000", "0111", "0222", "1012", "2021", "2102", "1201", "2210", "1120"};
    Code c = prm(3, 1, 2);
    std::string tuples = label_set(c) == golden ? "9 listed tuples" : "differs";
    expect(r, "9 listed tuples, δ=3, cyclic=false",
           tuples + ", δ=" + std::to_string(min_distance(c)) + ", cyclic=" + yes(is_cyclic(c)));
  });

  for (auto [name, label, tw, rep] : std::vector<std::tuple<std::string, std::string, int, int>>{
           {"s6", "S6", 8, 4}, {"a6", "A6", 8, 6}, {"asl32", "ASL3(2)", 12, 8}}) {
    add(4, "twisted: " + label, [name, tw, rep](BatteryCheck& r) {
      TwistedPair tp = twisted_pair(name);
      Representation natural{tp.t.generators()};
      Code twc = twisted_permutation_code(tp.t, {natural, tp.second});
      Code repc = rep_code(permutation_code(tp.t), 2);
      expect(r, std::to_string(tw) + "/" + std::to_string(rep),
             std::to_string(min_distance(twc)) + "/" + std::to_string(min_distance(repc)));
    });
  }

  add(5, "permcode: criterion on every subgroup class of S3, S4, S5", [](BatteryCheck& r) {
    int classes = 0, agree = 0;
    for (int q = 3; q <= 5; ++q)
      for (const auto& t : subgroups_up_to_conjugacy(q)) {
        ++classes;
        agree += verify_permcode_criterion(t).agree();
      }
    expect(r, "34/34 classes agree", std::to_string(agree) + "/" + std::to_string(classes) + " classes agree");
  });

  add(6, "cycle: cycle codes n=2..8 completely transitive", [](BatteryCheck& r) {
    std::ostringstream exp, got;
    for (int n = 2; n <= 8; ++n) {
      Code c = cycle_code(n);
      auto rep = is_completely_transitive(c, builtin_group("cycle_aut", c));
      exp << "n=" << n << ":CT";
      got << "n=" << n << ":" << (rep.completely_transitive ? "CT" : "not-CT");
      for (int i = 1; i <= n / 2; ++i) {
        exp << "," << (2 * i == n ? 2 : 4);
        got << "," << (i < static_cast<int>(rep.level_sizes.size()) ? rep.level_sizes[i] : 0);
      }
      exp << " ";
      got << " ";
    }
    expect(r, exp.str(), got.str());
  });

  add(7, "elusive: H(4,2) pair, witness and bitrade", [](BatteryCheck& r) {
    Code c = from_labels("hamming:n=4,q=2", {"0000", "1111"});
    Code c2 = from_labels("hamming:n=4,q=2", {"0000", "1010", "0101", "1111"});
    Code x = from_labels("hamming:n=4,q=2", {"0001", "0010", "1101", "1110", "0100", "1000", "0111", "1011"});
    const bool same = neighbour_set(c).ids == x.ids() && neighbour_set(c2).ids == x.ids();
    auto el = is_elusive(c);
    bool bitrade = false;
    if (el.verdict == ElusiveVerdict::elusive) bitrade = is_spherical_bitrade(c, Code(c.graph_ptr(), el.image)).holds;
    expect(r, "C1=C1'=X elusive bitrade",
           std::string(same ? "C1=C1'=X" : "C1 mismatch") + " " + to_string(el.verdict) + (bitrade ? " bitrade" : " no-bitrade"));
  });

  add(8, "golay: golay23 reconstruction from its neighbour set", [](BatteryCheck& r) {
    Code c = classical_code("golay23");
    auto ns = neighbour_set(c);
    Code back = reconstruct(ns);
    expect(r, "|C1|=94208 reconstruct=C",
           "|C1|=" + std::to_string(ns.ids.size()) + (back.ids() == c.ids() ? " reconstruct=C" : " reconstruct!=C"));
  });

  add(9, "gq: w3_partial_ovoid(2)", [](BatteryCheck& r) {
    Code c = w3_partial_ovoid(2);
    auto p = auto_partition(c);
    auto nt = is_s_nt(c, builtin_group("w3_ovoid_aut", c), p, 1);
    expect(r, "δ=4 ρ=3 maximal=true nt=true",
           "δ=" + std::to_string(min_distance(c)) + " ρ=" + std::to_string(*p.rho()) +
               " maximal=" + yes(maximal_partial(c)) + " nt=" + yes(nt.s_nt));
  });
  for (int q : {2, 3}) {
    add(9, "gq: regular_spread_code(" + std::to_string(q) + ")", [q](BatteryCheck& r) {
      Code c = regular_spread_code(q);
      auto ct = is_completely_transitive(c, builtin_group("spread_aut", c));
      expect(r, "δ=4 ρ=2 ct=true",
             "δ=" + std::to_string(min_distance(c)) + " ρ=" + std::to_string(*ct.rho) + " ct=" + yes(ct.completely_transitive));
    });
  }

  add(10, "hadamard: hadamard12 parameters", [](BatteryCheck& r) { expect(r, "(12,24,6;3)", params(classical_code("hadamard12"))); });
  add(10, "hadamard: punct_hadamard11 parameters",
      [](BatteryCheck& r) { expect(r, "(11,24,5;3)", params(classical_code("punct_hadamard11"))); });

  add(11, "quotient: H(8,2) modulo T_RM2(1,3), s=2", [](BatteryCheck& r) {
    Code rm = grm(2, 1, 3);
    const auto& h = *rm.hamming();
    auto f2 = FiniteField::make(2, 1);
    std::vector<Perm> gens;
    for (int i = 0; i < h.n(); ++i) gens.push_back(wreath_translation(f2, h, h.weight(i)));
    for (const Perm& s : agl2_generators(3)) gens.push_back(wreath_entry_perm(s, 2));
    GraphGroup g(rm.graph_ptr(), GroupKind::wreath, gens, "TV:AGL3(2)");
    auto res = verify_quotient_prop(g, translation_generators(rm), 0, 2);
    expect(r, "code_nt=true quotient_dt=true vertices=16",
           "code_nt=" + yes(res.code_nt) + " quotient_dt=" + yes(res.quotient_dt) +
               " vertices=" + std::to_string(res.quotient_vertices));
  });

  add(12, "kneser: C_int table rows for v=7..9", [](BatteryCheck& r) {
    int rows = 0, good = 0;
    std::string bad;
    auto check = [&](int a, int b, int c, int d, int delta) {
      ++rows;
      Code code = kneser_int(a, b, c, d);
      auto g = builtin_group("kneser_int_aut", code);
      const bool ok = min_distance(code) == delta && is_s_nt(code, g, 1).s_nt;
      good += ok;
      if (!ok && bad.empty()) bad = " first failure " + code.name();
    };
    for (int v = 7; v <= 9; ++v)
      for (int k = 2; 2 * k + 1 <= v; ++k) {
        check(1, v - 1, 0, k, 1);
        for (int e = 1; e <= k; ++e)
          if (2 * e + 2 * (k - e) + 1 == v) check(2 * e, 2 * (k - e) + 1, e, k - e, 1);
        for (int a = 1; a < k; ++a) check(a, v - a, a, k - a, 2);
      }
    expect(r, std::to_string(rows) + "/" + std::to_string(rows) + " rows", std::to_string(good) + "/" + std::to_string(rows) + " rows" + bad);
  });
  add(12, "kneser: tetrahedron code in K(13,6)", [](BatteryCheck& r) {
    Code c = tetrahedron_code();
    auto rep = is_s_nt(c, builtin_group("tetrahedron_aut", c), 1);
    expect(r, "|C|=560 nt=true", "|C|=" + std::to_string(c.size()) + " nt=" + yes(rep.s_nt));
  });

  add(13, "properties: shipped catalog and code-group pairs", properties_catalog);
  add(13, "properties: 100 randomized small instances", properties_random);
  return v;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

}  // namespace

const std::vector<BatteryItem>& battery_items() {
  static const std::vector<BatteryItem> items = make_items();
  return items;
}

std::string criterion_title(int criterion) {
  static const std::map<int, std::string> titles = {
      {1, "Golay parameters"},          {2, "Golay complete transitivity"},
      {3, "Reed-Muller goldens"},       {4, "Twisted permutation distances"},
      {5, "Permutation-code criterion"}, {6, "Cycle codes"},
      {7, "Elusive pair"},              {8, "Reconstruction"},
      {9, "GQ codes"},                  {10, "Hadamard family"},
      {11, "Quotient theorem instance"}, {12, "Kneser battery"},
      {13, "Property suites"}};
  auto it = titles.find(criterion);
  return it == titles.end() ? "?" : it->second;
}

std::vector<BatteryCheck> run_battery(const std::string& filter, std::ostream* log) {
  std::vector<BatteryCheck> out;
  const std::string f = lower(filter);
  for (const auto& item : battery_items()) {
    if (!f.empty() && lower(item.name).find(f) == std::string::npos) continue;
    BatteryCheck r;
    r.criterion = item.criterion;
    r.name = item.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      item.run(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.computed = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (log)
      *log << (r.pass ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << r.name << "  expected " << r.expected
           << ", computed " << r.computed << "\n"
           << std::flush;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gcw
