#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcw/permgroup.hpp"

namespace gcw {

// Evaluation rules for the standard actions of a permutation group.
enum class ActionKind { point, subset, tuple };

using PointList = std::vector<Point>;

// Image of a sorted subset (result sorted) or an ordered tuple.
PointList act_subset(const PointList& s, const Perm& g);
PointList act_tuple(const PointList& t, const Perm& g);

// Closure of {seed} under the generators, sorted. For the subset action the
// seed is normalized to sorted order first.
std::vector<PointList> orbit(const PermGroup& g, const PointList& seed, ActionKind act,
                             std::uint64_t budget = 50'000'000);
std::vector<Point> orbit(const PermGroup& g, Point seed);

bool is_k_transitive(const PermGroup& g, std::size_t k);
bool is_k_homogeneous(const PermGroup& g, std::size_t k);

enum class TwoTransitiveType { affine, almost_simple };
std::string to_string(TwoTransitiveType t);

// Requires g 2-transitive. Affine iff g has a regular elementary abelian normal
// subgroup, detected as the normal closure of a fixed-point-free element of order p.
TwoTransitiveType two_transitive_type(const PermGroup& g, std::uint64_t budget = 10'000'000);

// {g in Sym(n) : g^-1 T g = T}. Exhaustive for degree <= 8; otherwise the
// supplied candidates are verified and the group they generate is returned.
PermGroup normalizer_in_sym(const PermGroup& t, const std::vector<Perm>* candidates = nullptr);

// One subgroup of Sym(n) per conjugacy class, ordered by (order, sorted elements).
// Exhaustive lattice closure; n <= 5.
std::vector<PermGroup> subgroups_up_to_conjugacy(std::size_t n);

}  // namespace gcw
