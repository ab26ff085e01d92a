#include "gcw/structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"
#include "gcw/symmetry.hpp"

namespace gcw {

namespace {

std::vector<Vertex> image_of(const GraphGroup& g, const Perm& x, const std::vector<Vertex>& set) {
  std::vector<Vertex> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(g.apply(x, v));
  std::sort(out.begin(), out.end());
  return out;
}

bool preserves_set(const GraphGroup& g, const Perm& x, const std::vector<Vertex>& set) {
  return std::all_of(set.begin(), set.end(),
                      [&](Vertex v) { return std::binary_search(set.begin(), set.end(), g.apply(x, v)); });
}

struct PairHash {
  std::size_t operator()(const std::pair<Vertex, Vertex>& p) const noexcept {
    return std::hash<Vertex>()(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
  }
};

}  // namespace

// ---------------------------------------------------------------- neighbour sets

NeighbourSet neighbour_set(const Code& c) {
  NeighbourSet ns{c.graph_ptr(), {}, c.name()};
  std::vector<Vertex> nb;
  for (Vertex a : c.ids()) {
    c.graph().neighbors(a, nb);
    for (Vertex b : nb)
      if (!c.contains(b)) ns.ids.push_back(b);
  }
  std::sort(ns.ids.begin(), ns.ids.end());
  ns.ids.erase(std::unique(ns.ids.begin(), ns.ids.end()), ns.ids.end());
  return ns;
}

Code reconstruct(const NeighbourSet& ns) {
  const Graph& g = *ns.graph;
  if (!is_reduced(g)) throw PreconditionError("host graph is not reduced", g.spec());
  std::vector<Vertex> cand, nb;
  for (Vertex m : ns.ids) {
    g.neighbors(m, nb);
    cand.insert(cand.end(), nb.begin(), nb.end());
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Vertex> out;
  for (Vertex a : cand) {
    g.neighbors(a, nb);
    if (std::all_of(nb.begin(), nb.end(), [&](Vertex b) { return std::binary_search(ns.ids.begin(), ns.ids.end(), b); }))
      out.push_back(a);
  }
  return Code(ns.graph, std::move(out), std::nullopt, "reconstruct(" + ns.code_name + ")");
}

bool reconstruction_roundtrip(const Code& c) {
  if (!is_reduced(c.graph())) return false;
  const bool equal = reconstruct(neighbour_set(c)).ids() == c.ids();
  if (!equal && c.size() >= 2 && c.size() < c.graph().vertex_count() && min_distance(c) >= 5)
    throw ImplementationContradiction("neighbour set of a code with δ >= 5 does not determine it");
  return equal;
}

// ---------------------------------------------------------------- elusive codes

std::string to_string(ElusiveVerdict v) {
  switch (v) {
    case ElusiveVerdict::elusive: return "elusive";
    case ElusiveVerdict::not_elusive_within_set: return "not_elusive_within_set";
    case ElusiveVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

ElusiveResult is_elusive(const Code& c, const GraphGroup* searchers, std::uint64_t budget) {
  ElusiveResult r;
  const NeighbourSet ns = neighbour_set(c);
  if (searchers) require_preserves(Code(c.graph_ptr(), ns.ids), *searchers);

  std::optional<GraphGroup> found;
  if (searchers) {
    r.scope = "group generated by " + (searchers->name().empty() ? std::string("the supplied generators") : searchers->name());
    found = *searchers;
  } else if (ns.ids.empty()) {
    r.scope = "Aut(Γ)";
    r.verdict = ElusiveVerdict::not_elusive_within_set;
    r.reason = "C_1 is empty, so every automorphism fixing it fixes C = V";
    return r;
  } else {
    r.scope = "stabilizer of C_1 in the ambient group";
    try {
      found = aut_bruteforce(Code(c.graph_ptr(), ns.ids), nullptr, budget);
    } catch (const BudgetExceeded& e) {
      r.verdict = ElusiveVerdict::inconclusive;
      r.reason = e.what();
      if (c.size() >= 2 && min_distance(c) >= 5 && reconstruction_roundtrip(c))
        r.reason += "; δ >= 5 on a reduced host, so C_1 determines C";
      return r;
    } catch (const UsageError& e) {
      r.verdict = ElusiveVerdict::inconclusive;
      r.reason = e.what();
      return r;
    }
  }
  for (const Perm& x : found->generators()) {
    if (preserves_set(*found, x, c.ids())) continue;
    auto img = image_of(*found, x, c.ids());
    if (image_of(*found, x, ns.ids) != ns.ids || img == c.ids())
      throw ImplementationContradiction("elusive witness fails re-verification");
    r.verdict = ElusiveVerdict::elusive;
    r.witness = x;
    r.image = std::move(img);
    return r;
  }
  r.verdict = ElusiveVerdict::not_elusive_within_set;
  r.reason = "every generator fixes C";
  return r;
}

BitradeCheck is_spherical_bitrade(const Code& c, const Code& c2) {
  if (c.graph().spec() != c2.graph().spec()) throw PreconditionError("codes live in different graphs", c2.graph().spec());
  const Graph& g = c.graph();
  std::vector<Vertex> cand, nb;
  for (const Code* x : {&c, &c2})
    for (Vertex a : x->ids()) {
      g.neighbors(a, nb);
      cand.insert(cand.end(), nb.begin(), nb.end());
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  BitradeCheck r;
  for (Vertex a : cand) {
    g.neighbors(a, nb);
    int k1 = 0, k2 = 0;
    for (Vertex b : nb) {
      k1 += c.contains(b);
      k2 += c2.contains(b);
    }
    if (k1 != k2 || k1 > 1) {
      r.holds = false;
      r.counterexample = a;
      r.count_c = k1;
      r.count_c2 = k2;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------- quotients

QuotientGraph quotient(const GraphGroup& n) {
  const Graph& g = n.graph();
  const Vertex nv = g.vertex_count();
  if (nv > kDenseLimit) throw BudgetExceeded("quotient graphs need |V| <= 2^24");
  constexpr std::uint32_t none = 0xffffffffu;
  QuotientGraph q;
  q.block_of.assign(nv, none);
  for (Vertex s = 0; s < nv; ++s) {
    if (q.block_of[s] != none) continue;
    const auto b = static_cast<std::uint32_t>(q.blocks.size());
    auto orb = n.orbit(s);
    for (Vertex v : orb) q.block_of[v] = b;
    q.blocks.push_back(std::move(orb));
  }
  std::vector<std::set<std::uint32_t>> nbs(q.blocks.size());
  std::vector<Vertex> nb;
  for (Vertex v = 0; v < nv; ++v) {
    g.neighbors(v, nb);
    for (Vertex w : nb)
      if (q.block_of[w] != q.block_of[v]) nbs[q.block_of[v]].insert(q.block_of[w]);
  }
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < q.blocks.size(); ++b) {
    adj.emplace_back(nbs[b].begin(), nbs[b].end());
    labels.push_back("[" + g.label(q.blocks[b].front()) + "]");
  }
  q.graph = std::make_shared<ExplicitGraph>("quotient", "quotient:" + g.spec() + "/" + n.name(), std::move(adj),
                                            std::move(labels));
  return q;
}

GraphGroup induced_on_quotient(const QuotientGraph& q, const GraphGroup& g) {
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    std::vector<Point> img(q.blocks.size());
    for (std::size_t b = 0; b < q.blocks.size(); ++b) img[b] = q.block_of[g.apply_generator(i, q.blocks[b].front())];
    for (Vertex v = 0; v < q.block_of.size(); ++v)
      if (q.block_of[g.apply_generator(i, v)] != img[q.block_of[v]])
        throw ImplementationContradiction("group does not permute the quotient blocks");
    gens.push_back(Perm(img));
  }
  return GraphGroup(q.graph, GroupKind::vertex, std::move(gens), g.name() + "/N");
}

bool is_s_distance_transitive(const GraphGroup& g, int s) {
  const Graph& gr = g.graph();
  const Vertex nv = gr.vertex_count();
  if (g.orbit(0).size() != nv) return false;
  auto sp = spheres(gr, 0, s);
  for (int i = 1; i <= s; ++i) {
    if (i >= static_cast<int>(sp.size()) || sp[i].empty()) continue;
    std::pair<Vertex, Vertex> seed{0, sp[i].front()};
    std::unordered_set<std::pair<Vertex, Vertex>, PairHash> seen{seed};
    std::vector<std::pair<Vertex, Vertex>> queue{seed};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
        std::pair<Vertex, Vertex> y{g.apply_generator(gi, queue[k].first), g.apply_generator(gi, queue[k].second)};
        if (seen.insert(y).second) queue.push_back(y);
      }
    if (queue.size() != nv * sp[i].size()) return false;
  }
  return true;
}

QuotientProp verify_quotient_prop(const GraphGroup& g, const std::vector<Perm>& n_gens, Vertex alpha, int s) {
  const Graph& gr = g.graph();
  for (const Perm& x : n_gens)
    if (!g.domain().contains(x)) throw PreconditionError("generator of N is not in G", x.cycles());
  GraphGroup n = g.with_generators(n_gens, "N");
  for (const Perm& y : g.generators())
    for (const Perm& x : n_gens)
      if (!n.domain().contains(perm_conjugate(x, y)))
        throw PreconditionError("N is not normal in G", x.cycles());
  if (g.orbit(0).size() != gr.vertex_count()) throw PreconditionError("G is not vertex-transitive");
  QuotientGraph q = quotient(n);
  if (q.blocks.size() == 1) throw PreconditionError("N is transitive");

  const std::uint32_t home = q.block_of[alpha];
  Code code(g.graph_ptr(), q.blocks[home], std::nullopt, "alpha^N");
  auto stab = schreier_stabilizer(g.domain(), home, [&](std::size_t i, std::uint64_t b) {
    return static_cast<std::uint64_t>(q.block_of[g.apply_generator(i, q.blocks[b].front())]);
  });
  GraphGroup gc = g.with_generators(std::move(stab), "G_C");

  QuotientProp r;
  r.code_nt = is_s_nt(code, gc, s).s_nt;
  GraphGroup induced = induced_on_quotient(q, g);
  r.quotient_dt = is_s_distance_transitive(induced, s);
  r.quotient_vertices = q.blocks.size();
  r.quotient_girth = girth(*q.graph);
  if (code.size() >= 2) r.code_delta = min_distance(code);
  if (!r.holds())
    throw ImplementationContradiction("α^N is s-neighbour-transitive but the quotient is not s-distance-transitive");
  return r;
}

}  // namespace gcw
