#include "gcw/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "gcw/action.hpp"
#include "gcw/constructions.hpp"
#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"

namespace gcw {

namespace {

const HammingGraph& wreath_host(const GraphGroup& g) {
  const auto* h = dynamic_cast<const HammingGraph*>(&g.graph());
  if (!h || g.kind() != GroupKind::wreath) throw PreconditionError("needs a wreath group on a Hamming graph", g.graph().spec());
  return *h;
}

// Partition covering levels 0..s: dense or syndrome when available, spheres otherwise.
DistancePartition partition_for(const Code& c, int s) {
  try {
    return auto_partition(c);
  } catch (const PreconditionError&) {
    return distance_partition(c, PartitionMode::spheres, s);
  }
}

bool sorted_equal_orbit(const GraphGroup& g, const std::vector<Vertex>& set) {
  if (set.empty()) return true;
  return g.orbit(set.front()).size() == set.size();
}

struct PairHash {
  std::size_t operator()(const std::pair<Vertex, Vertex>& p) const noexcept {
    return std::hash<Vertex>()(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
  }
};

std::vector<int> block_tops(const Perm& p, int n, int q) {
  std::vector<int> top(n);
  for (int i = 0; i < n; ++i) top[i] = static_cast<int>(p[static_cast<Point>(i * q)] / q);
  return top;
}

std::size_t distinct_types(const InvariantMap& iota, const std::vector<Vertex>& vs) {
  std::set<std::vector<int>> t;
  for (Vertex v : vs) t.insert(iota.type(v));
  return t.size();
}

}  // namespace

void require_preserves(const Code& c, const GraphGroup& g) {
  if (c.graph().spec() != g.graph().spec())
    throw PreconditionError("group acts on a different graph", g.graph().spec());
  if (auto bad = g.preserves(c.ids()))
    throw PreconditionError("generator " + std::to_string(bad->first) + " does not preserve the code",
                            c.graph().label(bad->second));
}

// ---------------------------------------------------------------- s-NT

SymmetryReport is_s_nt(const Code& c, const GraphGroup& g, const DistancePartition& p, int s) {
  if (s < 0) throw UsageError("s must be non-negative");
  if (s >= p.levels())
    throw PreconditionError("level " + std::to_string(s) + " is not available (" + std::to_string(p.levels()) +
                            " levels stored)");
  require_preserves(c, g);
  SymmetryReport r;
  r.s = s;
  r.mode = p.mode();
  r.rho = p.rho();
  for (int i = 0; i <= s; ++i) {
    auto level = p.level_set(i);
    r.level_sizes.push_back(level.size());
    auto orb = g.orbit(level.front());
    if (!std::includes(level.begin(), level.end(), orb.begin(), orb.end()))
      throw ImplementationContradiction("an orbit of a code automorphism leaves its distance level");
    if (orb.size() == level.size()) {
      r.orbit_counts.push_back(1);
      continue;
    }
    r.orbit_counts.push_back(g.orbit_count(level));
    if (!r.witness) {
      std::vector<Vertex> missing;
      std::set_difference(level.begin(), level.end(), orb.begin(), orb.end(), std::back_inserter(missing));
      r.witness = TransitivityWitness{i, level.front(), missing.front(), orb.size(), level.size()};
    }
  }
  r.s_nt = std::all_of(r.orbit_counts.begin(), r.orbit_counts.end(), [](std::size_t k) { return k == 1; });
  r.completely_transitive = r.s_nt && r.rho && *r.rho == s;
  return r;
}

SymmetryReport is_s_nt(const Code& c, const GraphGroup& g, int s) {
  auto p = partition_for(c, s);
  return is_s_nt(c, g, p, s);
}

SymmetryReport is_completely_transitive(const Code& c, const GraphGroup& g) {
  auto p = auto_partition(c);
  return is_s_nt(c, g, p, *p.rho());
}

// ---------------------------------------------------------------- local equivalence

LocalEquivalence check_local_equivalence(const Code& c, const GraphGroup& g, int s) {
  if (s < 1) throw UsageError("s must be at least 1");
  const int e = error_capacity(c);
  if (s > e) throw PreconditionError("s exceeds the error capacity e=" + std::to_string(e));
  require_preserves(c, g);
  const Graph& gr = g.graph();
  LocalEquivalence r;
  r.s = s;

  auto p = distance_partition(c, PartitionMode::spheres, s);
  r.levels = is_s_nt(c, g, p, s).s_nt;

  const Vertex alpha = c.ids().front();
  bool stab_ok = g.orbit(alpha) == c.ids();
  if (stab_ok) {
    GraphGroup stab = g.vertex_stabilizer(alpha);
    for (int i = 1; i <= s && stab_ok; ++i) stab_ok = sorted_equal_orbit(stab, sphere(gr, alpha, i));
  }
  r.stabilizer = stab_ok;

  bool pairs_ok = true;
  for (int i = 1; i <= s && pairs_ok; ++i) {
    std::uint64_t total = 0;
    if (gr.vertex_transitive())
      total = c.size() * sphere(gr, alpha, i).size();
    else
      for (Vertex b : c.ids()) total += sphere(gr, b, i).size();
    std::pair<Vertex, Vertex> seed{alpha, sphere(gr, alpha, i).front()};
    std::unordered_set<std::pair<Vertex, Vertex>, PairHash> seen{seed};
    std::vector<std::pair<Vertex, Vertex>> queue{seed};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
        std::pair<Vertex, Vertex> y{g.apply_generator(gi, queue[k].first), g.apply_generator(gi, queue[k].second)};
        if (seen.insert(y).second) queue.push_back(y);
      }
    pairs_ok = queue.size() == total;
  }
  r.pairs = pairs_ok;

  if (r.levels != r.stabilizer || r.levels != r.pairs)
    throw ImplementationContradiction("local-equivalence conditions disagree: levels=" + std::to_string(r.levels) +
                                      " stabilizer=" + std::to_string(r.stabilizer) +
                                      " pairs=" + std::to_string(r.pairs));
  return r;
}

// ---------------------------------------------------------------- entry and alphabet actions

PermGroup entry_action(const GraphGroup& g) {
  const HammingGraph& h = wreath_host(g);
  std::vector<Perm> tops;
  for (const Perm& p : g.generators()) {
    auto t = block_tops(p, h.n(), h.q());
    tops.push_back(Perm(std::vector<Point>(t.begin(), t.end())));
  }
  return PermGroup(h.n(), std::move(tops));
}

PermGroup alphabet_action(const GraphGroup& g, int i) {
  const HammingGraph& h = wreath_host(g);
  const int q = h.q();
  if (i < 0 || i >= h.n()) throw UsageError("entry index out of range");
  const auto& gens = g.generators();
  auto stab = schreier_stabilizer(g.domain(), static_cast<std::uint64_t>(i), [&](std::size_t s, std::uint64_t x) {
    return static_cast<std::uint64_t>(gens[s][static_cast<Point>(x * q)] / q);
  });
  std::vector<Perm> local;
  for (const Perm& p : stab) {
    std::vector<Point> img(q);
    for (int a = 0; a < q; ++a) img[a] = p[static_cast<Point>(i * q + a)] - static_cast<Point>(i * q);
    local.push_back(Perm(img));
  }
  return PermGroup(q, std::move(local));
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::entry_faithful: return "entry_faithful";
    case PairClass::alphabet_almost_simple: return "alphabet_almost_simple";
    case PairClass::alphabet_affine: return "alphabet_affine";
  }
  return "?";
}

Classification classify_pair(const Code& c, const GraphGroup& g) {
  wreath_host(g);
  require_preserves(c, g);
  Classification r;
  PermGroup entries = entry_action(g);
  r.group_order = g.order();
  r.kernel_order = r.group_order / entries.order();
  if (r.kernel_order == 1) {
    r.tag = PairClass::entry_faithful;
    return r;
  }
  if (!entries.is_transitive()) throw PreconditionError("kernel is nontrivial but G is not transitive on entries");
  if (c.size() >= 2 && min_distance(c) >= 3) r.hypotheses = is_s_nt(c, g, 1).s_nt;
  PermGroup alpha = alphabet_action(g, 0);
  r.alphabet_order = alpha.order();
  r.alphabet_2transitive = alpha.degree() >= 2 && is_k_transitive(alpha, 2);
  if (!r.alphabet_2transitive) {
    if (r.hypotheses)
      throw ImplementationContradiction("alphabet action of a neighbour-transitive code with δ>=3 is not 2-transitive");
    throw PreconditionError("alphabet action is not 2-transitive; the trichotomy does not apply");
  }
  r.tag = two_transitive_type(alpha) == TwoTransitiveType::affine ? PairClass::alphabet_affine
                                                                  : PairClass::alphabet_almost_simple;
  return r;
}

// ---------------------------------------------------------------- homogeneity

HomogeneityReport check_entry_homogeneity(const Code& c, const GraphGroup& g, int s) {
  if (!c.hamming()) throw PreconditionError("entry homogeneity needs a Hamming host", c.graph().spec());
  wreath_host(g);
  const int e = error_capacity(c);
  if (e < 1) throw PreconditionError("entry homogeneity needs e >= 1");
  require_preserves(c, g);
  HomogeneityReport r;
  r.alpha = c.ids().front();
  PermGroup entries = entry_action(g.vertex_stabilizer(r.alpha));
  for (int i = 1; i <= std::min(e, s); ++i) {
    bool ok = is_k_homogeneous(entries, static_cast<std::size_t>(i));
    r.homogeneous.push_back(ok);
    r.holds = r.holds && ok;
  }
  return r;
}

// ---------------------------------------------------------------- permutation codes

PermcodeCriterion verify_permcode_criterion(const PermGroup& t, const std::vector<Perm>* normalizer_gens) {
  if (t.degree() < 2) throw UsageError("permutation codes need q >= 2");
  PermGroup n = normalizer_gens ? normalizer_in_sym(t, normalizer_gens) : normalizer_in_sym(t);
  PermcodeCriterion r;
  r.normalizer_order = n.order();
  r.normalizer_2transitive = is_k_transitive(n, 2);
  Code c = permutation_code(t);
  GraphGroup g = holomorph_autos(t, n.generators());
  r.nt = is_s_nt(c, g, 1).s_nt;
  return r;
}

// ---------------------------------------------------------------- invariants

InvariantMap subset_intersection_invariant(const SubsetGraph& g, const std::vector<int>& u) {
  return multi_intersection_invariant(g, {u});
}

InvariantMap multi_intersection_invariant(const SubsetGraph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<std::uint64_t> masks;
  std::string name = "intersection";
  for (const auto& part : parts) {
    std::uint64_t m = 0;
    for (int x : part) {
      if (x < 0 || x >= g.v()) throw UsageError("subset point out of range");
      m |= std::uint64_t{1} << x;
    }
    masks.push_back(m);
  }
  const SubsetCodec* codec = &g.codec();
  return InvariantMap{name, [codec, masks](Vertex v) {
                        std::vector<int> t;
                        const std::uint64_t m = codec->mask(v);
                        for (auto u : masks) t.push_back(std::popcount(m & u));
                        return t;
                      }};
}

InvariantReport check_invariant(const Code& c, const GraphGroup& g, int s, const InvariantMap& iota) {
  require_preserves(c, g);
  const Graph& gr = g.graph();
  const Vertex nv = gr.vertex_count();
  std::vector<Vertex> sample;
  if (nv <= 10000) {
    sample.resize(nv);
    std::iota(sample.begin(), sample.end(), Vertex{0});
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Vertex> pick(0, nv - 1);
    for (int k = 0; k < 1000; ++k) sample.push_back(pick(rng));
  }
  for (std::size_t gi = 0; gi < g.generators().size(); ++gi)
    for (Vertex v : sample)
      if (iota.type(v) != iota.type(g.apply_generator(gi, v)))
        throw PreconditionError(iota.name + " is not invariant under generator " + std::to_string(gi), gr.label(v));

  auto p = partition_for(c, s);
  InvariantReport r;
  r.s_nt = is_s_nt(c, g, p, s).s_nt;
  for (int i = 0; i <= s; ++i) {
    std::set<std::vector<int>> types;
    for (Vertex v : p.level_set(i)) types.insert(iota.type(v));
    r.level_types.emplace_back(types.begin(), types.end());
    r.level_constant = r.level_constant && types.size() == 1;
  }
  const Vertex alpha = c.ids().front();
  const int delta = c.size() >= 2 ? min_distance(c) : std::numeric_limits<int>::max();
  for (int i = 0; i <= s; ++i) {
    r.ball_bound = r.ball_bound && distinct_types(iota, ball(gr, alpha, i)) <= static_cast<std::size_t>(i + 1);
    if (delta >= 2 * i) r.sphere_constant = r.sphere_constant && distinct_types(iota, sphere(gr, alpha, i)) <= 1;
  }
  if (r.s_nt && !(r.level_constant && r.ball_bound && r.sphere_constant))
    throw ImplementationContradiction("type conclusions fail for an s-neighbour-transitive code");
  return r;
}

// ---------------------------------------------------------------- covering radius trichotomy

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::case1_rho_ge_2: return "case1_rho_ge_2";
    case Trichotomy::case2_perfect_delta3: return "case2_perfect_delta3";
    case Trichotomy::case3a_bipartite_part: return "case3a_bipartite_part";
    case Trichotomy::case3b_shared_neighbourhoods: return "case3b_shared_neighbourhoods";
  }
  return "?";
}

Trichotomy covering_radius_trichotomy(const Code& c, const GraphGroup& g) {
  const Graph& gr = c.graph();
  if (c.size() < 2 || c.size() == gr.vertex_count()) throw PreconditionError("the trichotomy needs a non-trivial code");
  require_preserves(c, g);
  const Vertex alpha = c.ids().front();
  if (g.orbit(alpha) != c.ids()) throw PreconditionError("G is not transitive on C", gr.label(alpha));
  GraphGroup stab = g.vertex_stabilizer(alpha);
  for (int i = 1; i <= 2; ++i)
    if (!sorted_equal_orbit(stab, sphere(gr, alpha, i)))
      throw PreconditionError("the codeword stabilizer is not transitive on Γ_" + std::to_string(i), gr.label(alpha));

  auto p = auto_partition(c);
  if (*p.rho() >= 2) return Trichotomy::case1_rho_ge_2;
  const int delta = min_distance(c);
  if (delta == 3) {
    if (!is_perfect(c)) throw ImplementationContradiction("ρ=1 and δ=3 but the code is not perfect");
    return Trichotomy::case2_perfect_delta3;
  }
  if (delta != 2) throw ImplementationContradiction("ρ=1 forces δ in {2,3}, found " + std::to_string(delta));
  auto c1 = p.level_set(1);
  std::vector<Vertex> nb, nb2;
  bool inner_edge = false, shared = true;
  auto code_nbrs = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : gr.neighbors(v))
      if (c.contains(w)) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (Vertex mu : c1) {
    gr.neighbors(mu, nb);
    for (Vertex nu : nb) {
      if (!std::binary_search(c1.begin(), c1.end(), nu)) continue;
      inner_edge = true;
      if (code_nbrs(mu) != code_nbrs(nu)) shared = false;
    }
  }
  if (!inner_edge) {
    if (!is_bipartite(gr)) throw ImplementationContradiction("no edges inside C_1 but the graph is not bipartite");
    return Trichotomy::case3a_bipartite_part;
  }
  if (!shared) throw ImplementationContradiction("adjacent code neighbours see different codewords");
  return Trichotomy::case3b_shared_neighbourhoods;
}

// ---------------------------------------------------------------- incidence to collinearity

IncidenceTransfer incidence_to_collinearity(const Code& c, const GraphGroup& g, int s) {
  const auto* ig = dynamic_cast<const IncidenceGraph*>(&c.graph());
  if (!ig) throw PreconditionError("code is not in an incidence graph", c.graph().spec());
  if (g.kind() != GroupKind::vertex) throw PreconditionError("needs a vertex-permutation group");
  const std::size_t np = ig->point_count();
  const bool points = std::all_of(c.ids().begin(), c.ids().end(), [&](Vertex v) { return v < np; });
  const bool lines = std::all_of(c.ids().begin(), c.ids().end(), [&](Vertex v) { return v >= np; });
  if (!points && !lines) throw PreconditionError("code mixes points and lines");
  const IncidenceStructure st = points ? ig->structure() : dualize(ig->structure());
  const Vertex offset = points ? 0 : np;
  auto coll = collinearity_graph(st);

  std::vector<Perm> gens;
  for (const Perm& x : g.generators()) {
    std::vector<Point> img(st.points);
    for (std::size_t v = 0; v < st.points; ++v) {
      Point y = x[static_cast<Point>(v + offset)];
      if (y < offset || y >= offset + st.points) throw PreconditionError("generator swaps points and lines", x.cycles());
      img[v] = static_cast<Point>(y - offset);
    }
    gens.push_back(Perm(img));
  }
  GraphGroup gc(coll, GroupKind::vertex, std::move(gens), g.name());
  std::vector<Vertex> ids;
  for (Vertex v : c.ids()) ids.push_back(v - offset);
  Code cc(coll, std::move(ids), std::nullopt, c.name());

  IncidenceTransfer r;
  r.collinearity_s = s / 2;
  r.incidence_nt = is_s_nt(c, g, s).s_nt;
  r.collinearity_nt = is_s_nt(cc, gc, r.collinearity_s).s_nt;
  if (r.incidence_nt && !r.collinearity_nt)
    throw ImplementationContradiction("s-NT in the incidence graph but not floor(s/2)-NT in the collinearity graph");
  return r;
}

// ---------------------------------------------------------------- brute-force automorphisms

GraphGroup ambient_group(const GraphPtr& gp) {
  const Graph& g = *gp;
  auto sym_gens = [](std::size_t n) {
    std::vector<Perm> out;
    if (n < 2) return out;
    std::vector<Point> sw(n), cy(n);
    std::iota(sw.begin(), sw.end(), Point{0});
    std::swap(sw[0], sw[1]);
    for (std::size_t i = 0; i < n; ++i) cy[i] = static_cast<Point>((i + 1) % n);
    out.push_back(Perm(sw));
    if (n > 2) out.push_back(Perm(cy));
    return out;
  };
  if (const auto* h = dynamic_cast<const HammingGraph*>(&g)) {
    std::vector<Perm> gens;
    for (const Perm& a : sym_gens(h->q())) {
      std::vector<Perm> base(h->n(), Perm(h->q()));
      base[0] = a;
      gens.push_back(wreath_from_parts(base, Perm(h->n())));
    }
    for (const Perm& s : sym_gens(h->n())) gens.push_back(wreath_entry_perm(s, h->q()));
    return GraphGroup(gp, GroupKind::wreath, gens, "ambient");
  }
  if (const auto* cg = dynamic_cast<const CycleGraph*>(&g)) {
    const int m = cg->m();
    std::vector<Point> rot(m), refl(m);
    for (int v = 0; v < m; ++v) {
      rot[v] = static_cast<Point>((v + 1) % m);
      refl[v] = static_cast<Point>((m - v) % m);
    }
    return GraphGroup(gp, GroupKind::vertex, {Perm(rot), Perm(refl)}, "ambient");
  }
  if (const auto* sg = dynamic_cast<const SubsetGraph*>(&g))
    return GraphGroup(gp, GroupKind::subset, sym_gens(sg->v()), "ambient");
  throw UsageError("no ambient group is known for " + g.spec() + "; supply one");
}

GraphGroup aut_bruteforce(const Code& c, const GraphGroup* ambient, std::uint64_t budget) {
  std::optional<GraphGroup> own;
  if (!ambient) {
    own.emplace(ambient_group(c.graph_ptr()));
    ambient = &*own;
  }
  const Graph& gr = c.graph();
  if (gr.vertex_count() > 10000) throw BudgetExceeded("brute-force automorphisms need |V| <= 10^4");
  if (ambient->order() > budget) throw BudgetExceeded("ambient group has " + to_string(ambient->order()) + " elements");
  const StabChain& chain = ambient->domain().chain();
  const std::size_t depth = chain.depth();
  const Vertex nv = gr.vertex_count();

  // Vertex permutation of every transversal element.
  std::vector<std::vector<std::vector<std::uint32_t>>> vp(depth);
  std::vector<std::vector<Point>> orbs(depth);
  for (std::size_t l = 0; l < depth; ++l) {
    orbs[l] = chain.orbit(l);
    for (Point b : orbs[l]) {
      const Perm& t = chain.transversal(l, b);
      std::vector<std::uint32_t> img(nv);
      for (Vertex v = 0; v < nv; ++v) img[v] = static_cast<std::uint32_t>(ambient->apply(t, v));
      vp[l].push_back(std::move(img));
    }
  }
  const auto& ids = c.ids();
  std::vector<bool> in_code(nv, false);
  for (Vertex v : ids) in_code[v] = true;

  StabChain acc(ambient->domain_degree());
  std::vector<Perm> gens;
  std::vector<std::size_t> idx(depth, 0);
  // Element = t_{depth-1} * ... * t_0; odometer over the transversal indices.
  while (true) {
    bool ok = true;
    for (Vertex v : ids) {
      std::uint32_t x = static_cast<std::uint32_t>(v);
      for (std::size_t l = depth; l-- > 0;) x = vp[l][idx[l]][x];
      if (!in_code[x]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Perm el(ambient->domain_degree());
      for (std::size_t l = depth; l-- > 0;) el = el * chain.transversal(l, orbs[l][idx[l]]);
      if (!acc.contains(el) && acc.add_generator(el)) gens.push_back(el);
    }
    std::size_t l = 0;
    while (l < depth && ++idx[l] == orbs[l].size()) idx[l++] = 0;
    if (l == depth) break;
  }
  return ambient->with_generators(std::move(gens), "aut_bruteforce");
}

}  // namespace gcw
