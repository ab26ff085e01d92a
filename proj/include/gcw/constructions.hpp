#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcw/code.hpp"
#include "gcw/graphgroup.hpp"
#include "gcw/incidence.hpp"
#include "gcw/permgroup.hpp"

namespace gcw {

// ---------------------------------------------------------------- Hamming basics

// Entries of H(N×{1..k}, Q) are ordered block by block: entry (i,j) has index j*n + i.
Code rep_code(const Code& c, int k);
Code prod_code(const Code& c, int k);
Code rep_nq(int n, int q);

// C(T) in H(q,q): the codeword of t is (0^t, 1^t, ..., (q-1)^t).
Code permutation_code(const PermGroup& t);
// Domain permutations (degree q*q) of x_g, σ_g and x_gσ_g.
Perm diag_element(const Perm& g);
Perm top_element(const Perm& g);
// Diag_n(H) as wreath generators.
std::vector<Perm> diag_subgroup(const PermGroup& h, int n);
// ⟨x_t (t ∈ T), x_gσ_g (g ∈ normalizer generators)⟩ acting on H(q,q). The
// normalizer generators are checked with normalizer_in_sym.
GraphGroup holomorph_autos(const PermGroup& t, const std::vector<Perm>& normalizer_gens);
// Asserts the three identities x_g: α_t→α_{tg}, σ_g: α_t→α_{g⁻¹t},
// x_gσ_g: α_t→α_{g⁻¹tg} for g in `gs` on every codeword (ImplementationContradiction).
void check_permcode_identities(const PermGroup& t, const std::vector<Perm>& gs);

// A homomorphism T→Sym(q) given by the images of T's generators.
struct Representation {
  std::vector<Perm> images;
};
// Image of every element of T, verified to be a well-defined injective
// homomorphism by a multiplication check along a BFS of T. Throws PreconditionError.
std::vector<std::pair<Perm, Perm>> verify_representation(const PermGroup& t, const Representation& r);
Code twisted_permutation_code(const PermGroup& t, const std::vector<Representation>& reps);
// A faithful degree-q representation not equivalent to the natural one, with
// the generators of `t` forming a generating pair. Exhaustive over Sym(q).
std::optional<Representation> find_twisted_representation(const PermGroup& t);
bool equivalent_representations(const PermGroup& t, const Representation& a, const Representation& b);

// Stored twisted pairs: "s6", "a6", "asl32". Generators of T and images under
// the second representation.
struct TwistedPair {
  std::string name;
  PermGroup t;
  Representation second;
};
TwistedPair twisted_pair(const std::string& name);

Code prod_tkh(const PermGroup& t, int k, const PermGroup& h);

// ---------------------------------------------------------------- polynomial codes

// Entry i is the point with x_j = base-q digit j-1 of i (x_1 least significant).
Code grm(int q, int k, int t);
// Entries are the projective points with first nonzero coordinate 1, sorted.
Code prm(int q, int k, int t);
std::vector<Row> prm_points(const FiniteField& f, int t);
// Linearised-polynomial code in the bilinear forms graph H_q(n,n); q prime.
Code gabidulin(int q, int n, int k, int s);

Code project_code(const Code& c, const std::vector<int>& entries);
GraphGroup project_group(const GraphGroup& g, const std::vector<int>& entries);

// ---------------------------------------------------------------- named codes

struct CatalogEntry {
  std::string name;
  int n = 0;
  int q = 2;
  std::uint64_t size = 0;
  int delta = 0;
  int rho = 0;
  std::string provenance;  // "constructed" or "stored data"
};
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);
Code classical_code(const std::string& name);
// Paley-type normalized Hadamard matrix of order 12 (entries ±1), from data.
std::vector<std::vector<int>> hadamard12_matrix();

// ---------------------------------------------------------------- other graphs

Code cycle_code(int n);
enum class SubsetMode { inside, containing };
Code johnson_subset_code(int v, int k, int u, SubsetMode mode);
Code kneser_int(int a, int b, int c, int d);
// Blocks {i*b, ..., i*b+b-1}; M lists the intersection sizes (any order).
Code odd_imp(int a, int b, std::vector<int> m);
Code tetrahedron_code();

// Spread lines as line vertices of the PG3(q) incidence graph.
Code regular_spread_code(int q);
// Lines [I A] for A in G ≤ SL2(q) sharply transitive on nonzero vectors, in
// the W3(q) incidence graph. Stored G for q ∈ {2,3,5}; otherwise `g` must be supplied.
Code w3_partial_ovoid(int q, const std::vector<Matrix>& g = {});
std::vector<Matrix> sl2_sharply_transitive(int q);
// Closure search in SL2(q) for a subgroup of order q²-1 regular on nonzero vectors.
std::vector<Matrix> find_sl2_sharply_transitive(int q);
std::vector<Matrix> matrix_group_closure(const FiniteField& f, const std::vector<Matrix>& gens,
                                         std::size_t budget = 100000);

// ---------------------------------------------------------------- groups

// Named groups for a given code: golay23_aut, rm13_aut, rep_full, hamming7_aut,
// cycle_aut, tetrahedron_aut, spread_aut, w3_ovoid_aut, kneser_int_aut,
// johnson_subset_aut, odd_imp_aut, holomorph, translations (of a linear code)
// and tv_agl (all translations of H(2^d,2) with AGL_d(2) on the entries).
// Every group except tv_agl is checked to preserve the code.
GraphGroup builtin_group(const std::string& name, const Code& c);
// A Golay automorphism outside the cyclic 23:11, found by backtracking on the
// weight-7 words.
Perm golay_extra_automorphism(const Code& golay23);
// Translations by a basis of a linear code.
std::vector<Perm> translation_generators(const Code& c);
// AGL_d(2) on 2^d points (point i has coordinates = bits of i).
std::vector<Perm> agl2_generators(int d, bool include_translations = true);

// Parses construction expressions such as "rep:n=8,q=2", "grm:q=2,k=1,t=3",
// "prm:q=3,k=1,t=2", "cycle:n=4", "johnson_subset:v=5,k=2,u=4,mode=inside",
// "kneser_int:a=2,b=5,c=2,d=1", "odd_imp:a=3,b=3,m=1.1.1", "tetrahedron",
// "spread:q=2", "w3_ovoid:q=2", "gabidulin:q=2,n=3,k=2,s=1",
// "perm:group=a4", "twisted:name=s6", "hamming7".
Code make_construction(std::string_view expr);

}  // namespace gcw
