#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gcw/perm.hpp"

namespace gcw {

using BigInt = unsigned __int128;
std::string to_string(BigInt v);

// Stabilizer chain built by deterministic Schreier-Sims. Generators can be
// added incrementally; each level stores explicit transversal elements.
class StabChain {
 public:
  explicit StabChain(std::size_t degree, std::vector<Point> base_prefix = {});

  // Adds g to the group; returns false when g was already a member.
  bool add_generator(const Perm& g);
  bool contains(const Perm& g) const;
  // Sifts g from `from`; returns the residue and the level where sifting stopped
  // (depth() when all levels were passed).
  std::pair<Perm, std::size_t> sift(const Perm& g, std::size_t from = 0) const;

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  BigInt order() const;
  std::vector<Point> base() const;
  Point base_point(std::size_t level) const { return levels_[level].base; }
  const std::vector<Perm>& generators(std::size_t level) const { return levels_[level].gens; }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  // Element mapping the level's base point to b (b must lie in the basic orbit).
  const Perm& transversal(std::size_t level, Point b) const;
  // Chain for the pointwise stabilizer of the first `k` base points.
  StabChain tail(std::size_t k) const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;
    std::vector<Perm> trans, trans_inv;
  };
  void rebuild(Level& l) const;
  void push_level(Point b);
  void complete(std::size_t from);
  Point moved_point(const Perm& g) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  // Adopts a chain already built for exactly these generators.
  PermGroup(std::size_t degree, std::vector<Perm> generators, StabChain chain);

  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup cyclic(std::size_t n);
  static PermGroup trivial(std::size_t n) { return PermGroup(n, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const StabChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Perm& g) const { return chain().contains(g); }
  PermGroup stabilizer(Point pt) const;

  std::vector<Point> orbit(Point pt) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  // All elements in sorted order; throws BudgetExceeded beyond `budget`.
  std::vector<Perm> elements(std::uint64_t budget = 10'000'000) const;
  Perm random_element(std::mt19937_64& rng) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool is_normalized_by(const Perm& g) const;
  bool is_normal_in(const PermGroup& other) const;
  bool is_abelian() const;

 private:
  struct Lazy;
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<Lazy> lazy_;
};

// Closure of ⟨xs⟩ under conjugation by the generators of g.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& xs);

}  // namespace gcw
