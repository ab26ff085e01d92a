#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gcw/field.hpp"
#include "gcw/graph.hpp"
#include "gcw/permgroup.hpp"

namespace gcw {

// Element h·σ of Sym(q) ≀ Sym(n). On the domain of n*q points, point (i,a)
// has index i*q+a and is sent to (i^σ, a^{h_i}); a vertex α goes to β with
// β(i^σ) = α(i)^{h_i}.
struct WreathElement {
  std::vector<Perm> base;  // n permutations of degree q
  Perm top;                // degree n

  static WreathElement identity(int n, int q);
  Perm to_domain() const;
  // Throws PreconditionError unless p permutes the n blocks of size q.
  static WreathElement from_domain(const Perm& p, int n, int q);
  Vertex apply(const HammingGraph& h, Vertex v) const;
};

WreathElement operator*(const WreathElement& a, const WreathElement& b);

// Domain permutations (degree n*q) of common wreath elements.
Perm wreath_translation(const FiniteField& f, const HammingGraph& h, Vertex v);
Perm wreath_entry_perm(const Perm& sigma, int q);
Perm wreath_diagonal(const Perm& alphabet, int n);
Perm wreath_from_parts(const std::vector<Perm>& base, const Perm& top);

enum class GroupKind { wreath, subset, vertex };
std::string to_string(GroupKind k);

// A permutation group together with its action on the vertices of a graph.
// The "domain" is n*q points (wreath, Hamming hosts), the underlying v-set
// (subset, Johnson/Kneser hosts) or V itself (vertex, any host).
class GraphGroup {
 public:
  // Verifies that every generator maps edges to edges: exhaustively for
  // |V| <= 10^4, else on 1000 random edges. Throws PreconditionError.
  GraphGroup(GraphPtr graph, GroupKind kind, std::vector<Perm> generators, std::string name = {});

  GroupKind kind() const { return kind_; }
  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::string& name() const { return name_; }
  std::size_t domain_degree() const { return domain_.degree(); }
  const PermGroup& domain() const { return domain_; }
  const std::vector<Perm>& generators() const { return domain_.generators(); }
  BigInt order() const { return domain_.order(); }

  Vertex apply_generator(std::size_t i, Vertex v) const;
  Vertex apply(const Perm& x, Vertex v) const;
  // Same graph and kind, different generators (no edge re-verification).
  GraphGroup with_generators(std::vector<Perm> gens, std::string name = {}) const;

  // Sorted orbit; BudgetExceeded beyond `budget` vertices.
  std::vector<Vertex> orbit(Vertex v, std::uint64_t budget = std::uint64_t{1} << 28) const;
  // Number of orbits on a vertex set that the group is expected to preserve;
  // ImplementationContradiction if an orbit leaves the set.
  std::size_t orbit_count(const std::vector<Vertex>& sorted_set) const;
  GraphGroup vertex_stabilizer(Vertex v) const;
  // Image of v is in `set` for every generator and every v in set; returns the
  // first offending (generator index, vertex) if any.
  std::optional<std::pair<std::size_t, Vertex>> preserves(const std::vector<Vertex>& sorted_set) const;

 private:
  struct Compiled;
  Vertex apply_compiled(const Compiled& c, Vertex v) const;
  std::shared_ptr<const Compiled> compile(const Perm& x) const;
  void verify_edges() const;

  GraphPtr graph_;
  GroupKind kind_;
  PermGroup domain_;
  std::string name_;
  std::vector<std::shared_ptr<const Compiled>> compiled_;
};

// Generators of the stabilizer of `seed` under an action given on generator
// indices (objects encoded as 64-bit keys). Schreier generators are sifted
// into a chain and the search stops once |G|/|orbit| is reached.
std::vector<Perm> schreier_stabilizer(const PermGroup& g, std::uint64_t seed,
                                      const std::function<std::uint64_t(std::size_t, std::uint64_t)>& act,
                                      std::uint64_t budget = 10'000'000);

// Transversal search: an element of g mapping `from` to `to` under the action,
// if one exists.
std::optional<Perm> find_mapping(const PermGroup& g, std::uint64_t from, std::uint64_t to,
                                 const std::function<std::uint64_t(std::size_t, std::uint64_t)>& act,
                                 std::uint64_t budget = 10'000'000);

}  // namespace gcw
