#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcw/code.hpp"
#include "gcw/graphgroup.hpp"

namespace gcw {

// C_1: non-codewords adjacent to some codeword.
struct NeighbourSet {
  GraphPtr graph;
  std::vector<Vertex> ids;  // sorted
  std::string code_name;
};

NeighbourSet neighbour_set(const Code& c);
// {α : Γ_1(α) ⊆ C_1}. PreconditionError when the host is not reduced.
Code reconstruct(const NeighbourSet& ns);
// reconstruct(neighbour_set(c)) == c; asserted (ImplementationContradiction)
// when δ >= 5 on a reduced host, otherwise just reported.
bool reconstruction_roundtrip(const Code& c);

enum class ElusiveVerdict { elusive, not_elusive_within_set, inconclusive };
std::string to_string(ElusiveVerdict v);

struct ElusiveResult {
  ElusiveVerdict verdict = ElusiveVerdict::inconclusive;
  std::optional<Perm> witness;  // domain permutation of the searched group
  std::vector<Vertex> image;    // C^g for the witness
  std::string scope;            // what was searched
  std::string reason;
};

// With `searchers`, the group they generate is searched (each generator must
// fix C_1). Otherwise Aut(C_1) is computed inside the ambient group of the
// host within `budget`; exceeding it gives an inconclusive verdict.
ElusiveResult is_elusive(const Code& c, const GraphGroup* searchers = nullptr, std::uint64_t budget = 10'000'000);

struct BitradeCheck {
  bool holds = true;
  std::optional<Vertex> counterexample;
  int count_c = 0, count_c2 = 0;  // at the counterexample
};

// |Γ_1(α)∩C| = |Γ_1(α)∩C'| ∈ {0,1} for every vertex α.
BitradeCheck is_spherical_bitrade(const Code& c, const Code& c2);

struct QuotientGraph {
  std::shared_ptr<const ExplicitGraph> graph;
  std::vector<std::uint32_t> block_of;       // vertex -> block
  std::vector<std::vector<Vertex>> blocks;  // sorted; blocks ordered by least vertex
};

// Orbits of ⟨n_gens⟩ as blocks; loops discarded.
QuotientGraph quotient(const GraphGroup& n);
// Action of g on the blocks; ImplementationContradiction if g does not permute them.
GraphGroup induced_on_quotient(const QuotientGraph& q, const GraphGroup& g);

// G transitive on ordered pairs at distance i, for i = 0..s.
bool is_s_distance_transitive(const GraphGroup& g, int s);

struct QuotientProp {
  bool code_nt = false;      // α^N is (G_C, s)-neighbour-transitive
  bool quotient_dt = false;  // Γ_N is (G/N, s)-distance-transitive
  std::size_t quotient_vertices = 0;
  int quotient_girth = 0;
  std::optional<int> code_delta;
  bool holds() const { return !code_nt || quotient_dt; }
};

// PreconditionError when N is not normal in G, N is transitive, or G is not
// vertex-transitive. ImplementationContradiction when the code is s-NT and
// the quotient is not s-distance-transitive.
QuotientProp verify_quotient_prop(const GraphGroup& g, const std::vector<Perm>& n_gens, Vertex alpha, int s);

}  // namespace gcw
