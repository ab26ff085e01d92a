#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gcw/graph.hpp"

namespace gcw {

constexpr int kUnreachable = -1;
constexpr std::uint8_t kNoLevel = 0xff;
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

// Membership set over vertex ids: a bitmap when |V| is small enough, a hash set otherwise.
class VertexSet {
 public:
  explicit VertexSet(Vertex universe);
  bool insert(Vertex v);  // true when newly inserted
  bool contains(Vertex v) const;
  std::size_t size() const { return count_; }

 private:
  bool dense_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<Vertex> hash_;
  std::size_t count_ = 0;
};

// Multi-source BFS levels (kNoLevel when unreached). Levels above 254 are out of scope.
std::vector<std::uint8_t> bfs_levels(const Graph& g, const std::vector<Vertex>& sources,
                                     std::uint64_t limit = kDenseLimit);

int distance(const Graph& g, Vertex u, Vertex v);
std::vector<Vertex> sphere(const Graph& g, Vertex v, int i);
std::vector<Vertex> ball(const Graph& g, Vertex v, int i);
// Spheres 0..r around v.
std::vector<std::vector<Vertex>> spheres(const Graph& g, Vertex v, int r);

struct IntersectionArray {
  std::vector<std::uint64_t> b, c;  // b_0..b_{d-1}, c_1..c_d
  std::string str() const;          // "{b0,b1;c1,c2}"
  bool operator==(const IntersectionArray& o) const { return b == o.b && c == o.c; }
};

// Checks every base vertex when |V| <= budget.
std::optional<IntersectionArray> is_distance_regular(const Graph& g, std::uint64_t budget = 100000);

int diameter(const Graph& g, std::uint64_t budget = 100000);
// 0 for acyclic graphs.
int girth(const Graph& g, std::uint64_t budget = 100000);
bool is_bipartite(const Graph& g, std::uint64_t budget = kDenseLimit);
// Γ1(α)=Γ1(β) ⇒ α=β, by formula when available, otherwise exhaustively.
bool is_reduced(const Graph& g, std::uint64_t budget = 10000);

}  // namespace gcw
