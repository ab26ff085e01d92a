#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcw/code.hpp"
#include "gcw/graphgroup.hpp"
#include "gcw/incidence.hpp"
#include "gcw/permgroup.hpp"

namespace gcw {

// Level i where the orbit of the least vertex misses part of the level.
struct TransitivityWitness {
  int level = 0;
  Vertex representative = 0;
  Vertex unreached = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t level_size = 0;
};

struct SymmetryReport {
  int s = 0;
  PartitionMode mode = PartitionMode::dense;
  std::optional<int> rho;  // unknown in sphere mode
  std::vector<std::uint64_t> level_sizes;  // C_0..C_s
  std::vector<std::size_t> orbit_counts;
  bool s_nt = false;
  bool completely_transitive = false;
  std::string classification;
  std::optional<TransitivityWitness> witness;
};

// PreconditionError naming the first codeword moved out of C.
void require_preserves(const Code& c, const GraphGroup& g);

// Levels 0..s must be stored by the partition (s <= rho, or s <= e in sphere mode).
SymmetryReport is_s_nt(const Code& c, const GraphGroup& g, const DistancePartition& p, int s);
SymmetryReport is_s_nt(const Code& c, const GraphGroup& g, int s);
// s = rho.
SymmetryReport is_completely_transitive(const Code& c, const GraphGroup& g);

struct LocalEquivalence {
  int s = 0;
  bool levels = false;      // (G,s)-neighbour-transitive
  bool stabilizer = false;  // G transitive on C, G_α transitive on each Γ_i(α)
  bool pairs = false;       // G transitive on each {(β,γ) : β∈C, γ∈Γ_i(β)}
  bool holds() const { return levels && stabilizer && pairs; }
};

// All three conditions computed independently; ImplementationContradiction if
// they disagree. Requires 1 <= s <= e.
LocalEquivalence check_local_equivalence(const Code& c, const GraphGroup& g, int s);

// Induced actions of a wreath group: on the n entries, and of the stabilizer
// of entry i on the alphabet Q_i.
PermGroup entry_action(const GraphGroup& g);
PermGroup alphabet_action(const GraphGroup& g, int i);

enum class PairClass { entry_faithful, alphabet_almost_simple, alphabet_affine };
std::string to_string(PairClass c);

struct Classification {
  PairClass tag = PairClass::entry_faithful;
  BigInt group_order = 1;
  BigInt kernel_order = 1;
  BigInt alphabet_order = 1;
  bool alphabet_2transitive = false;
  // δ >= 3 and G-neighbour-transitive: the alphabet group is then forced to be 2-transitive.
  bool hypotheses = false;
};

// PreconditionError when the kernel is nontrivial but the alphabet group is
// not 2-transitive and the hypotheses fail; ImplementationContradiction when
// they hold.
Classification classify_pair(const Code& c, const GraphGroup& g);

struct HomogeneityReport {
  Vertex alpha = 0;
  std::vector<bool> homogeneous;  // index i-1 for i = 1..min(e,s)
  bool holds = true;
};

// Entry action of the stabilizer of the least codeword; Hamming hosts, e >= 1.
HomogeneityReport check_entry_homogeneity(const Code& c, const GraphGroup& g, int s);

struct PermcodeCriterion {
  bool nt = false;  // C(T) neighbour-transitive under its holomorph automorphisms
  bool normalizer_2transitive = false;
  BigInt normalizer_order = 1;
  bool agree() const { return nt == normalizer_2transitive; }
};

// Normalizer found exhaustively (degree <= 8) unless generators are supplied.
PermcodeCriterion verify_permcode_criterion(const PermGroup& t, const std::vector<Perm>* normalizer_gens = nullptr);

// Named vertex -> type map.
struct InvariantMap {
  std::string name;
  std::function<std::vector<int>(Vertex)> type;
};

InvariantMap subset_intersection_invariant(const SubsetGraph& g, const std::vector<int>& u);
// ι(α) = (|α∩U_1|, ..., |α∩U_r|).
InvariantMap multi_intersection_invariant(const SubsetGraph& g, const std::vector<std::vector<int>>& parts);

struct InvariantReport {
  bool s_nt = false;
  std::vector<std::vector<std::vector<int>>> level_types;  // distinct types on C_0..C_s
  bool level_constant = true;
  bool ball_bound = true;     // |ι(B_i(α))| <= i+1
  bool sphere_constant = true;  // checked for i with δ >= 2i
};

// PreconditionError with a witness if ι is not G-invariant (all vertices when
// |V| <= 10^4, else 1000 sampled). When G is s-NT the three conclusions are
// asserted (ImplementationContradiction).
InvariantReport check_invariant(const Code& c, const GraphGroup& g, int s, const InvariantMap& iota);

enum class Trichotomy { case1_rho_ge_2, case2_perfect_delta3, case3a_bipartite_part, case3b_shared_neighbourhoods };
std::string to_string(Trichotomy t);

// PreconditionError when G is not transitive on C or G_α not transitive on
// Γ_1(α) and Γ_2(α).
Trichotomy covering_radius_trichotomy(const Code& c, const GraphGroup& g);

struct IncidenceTransfer {
  bool incidence_nt = false;
  bool collinearity_nt = false;
  int collinearity_s = 0;
};

// C must consist only of points (collinearity graph) or only of lines (dual
// collinearity graph) of an incidence graph; g acts on the incidence vertices.
IncidenceTransfer incidence_to_collinearity(const Code& c, const GraphGroup& g, int s);

// Aut(C) inside the ambient group: Sym(q)≀Sym(n) for Hamming hosts, the
// dihedral group for cycles, Sym(v) for Johnson/Kneser hosts, or `ambient`.
// BudgetExceeded beyond `budget` ambient elements.
GraphGroup aut_bruteforce(const Code& c, const GraphGroup* ambient = nullptr, std::uint64_t budget = 10'000'000);
GraphGroup ambient_group(const GraphPtr& g);

// Group files. {"representation": R, "generators": [...]} with R one of
//   wreath:  {"base": [n alphabet perms], "top": perm of entries}  (Hamming hosts)
//   subset:  perm of the v-set                                     (Johnson/Kneser)
//   vertex:  perm of V
//   matrix:  {"entries": M, "frobenius_power": k} plus top-level "field": q;
//            x -> x^(p^k) M on rows of a Hamming host (M monomial) or
//            X -> X^(p^k) M on a forms graph.
// Perms are image arrays. UsageError on malformed input; PreconditionError
// when a generator is not a graph automorphism.
GraphGroup read_group_json(const GraphPtr& g, std::string_view text, std::string name = {});
std::string write_group_json(const GraphGroup& g);

}  // namespace gcw
