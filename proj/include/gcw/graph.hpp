#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcw/field.hpp"
#include "gcw/linalg.hpp"

namespace gcw {

using Vertex = std::uint64_t;

// A graph given by a vertex codec and a neighbour iterator; edges are never
// stored for the codec-based families.
class Graph {
 public:
  virtual ~Graph() = default;

  virtual std::string family() const = 0;
  virtual std::string spec() const = 0;
  virtual Vertex vertex_count() const = 0;
  // Replaces `out` with the neighbours of v (duplicate-free).
  virtual void neighbors(Vertex v, std::vector<Vertex>& out) const = 0;
  // Closed-form distance when the family has one.
  virtual std::optional<int> formula_distance(Vertex, Vertex) const { return std::nullopt; }
  virtual std::string label(Vertex v) const { return std::to_string(v); }
  virtual Vertex parse_label(std::string_view s) const;
  // True when the family is known to be vertex-transitive.
  virtual bool vertex_transitive() const { return false; }
  // Γ1(α)=Γ1(β) only for α=β, when decidable from the parameters.
  virtual std::optional<bool> reduced_by_formula() const { return std::nullopt; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    neighbors(v, out);
    return out;
  }
  void check_vertex(Vertex v) const;
};

using GraphPtr = std::shared_ptr<const Graph>;

class HammingGraph : public Graph {
 public:
  HammingGraph(int n, int q);
  int n() const { return n_; }
  int q() const { return q_; }
  std::string family() const override { return "hamming"; }
  std::string spec() const override;
  Vertex vertex_count() const override { return size_; }
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;
  using Graph::neighbors;
  std::optional<int> formula_distance(Vertex u, Vertex v) const override;
  std::string label(Vertex v) const override;
  Vertex parse_label(std::string_view s) const override;
  bool vertex_transitive() const override { return true; }
  std::optional<bool> reduced_by_formula() const override { return !(n_ == 2 && q_ == 2); }

  // Entry 0 is the most significant digit.
  std::vector<int> digits(Vertex v) const;
  Vertex from_digits(const std::vector<int>& d) const;
  int digit(Vertex v, int i) const { return static_cast<int>((v / weight_[i]) % q_); }
  Vertex weight(int i) const { return weight_[i]; }
  int weight_of(Vertex v) const;

 private:
  int n_, q_;
  Vertex size_;
  std::vector<Vertex> weight_;
};

// k-subsets of {0..v-1} ranked by the combinatorial number system:
// rank({s_1 < ... < s_k}) = sum C(s_i, i).
class SubsetCodec {
 public:
  SubsetCodec(int v, int k);
  Vertex count() const { return count_; }
  Vertex rank(const std::vector<int>& s) const;
  std::vector<int> unrank(Vertex r) const;
  std::uint64_t mask(Vertex r) const;
  Vertex rank_mask(std::uint64_t m) const;
  int v() const { return v_; }
  int k() const { return k_; }

 private:
  int v_, k_;
  Vertex count_;
  std::vector<std::vector<Vertex>> binom_;
};

class SubsetGraph : public Graph {
 public:
  SubsetGraph(int v, int k) : codec_(v, k) {}
  const SubsetCodec& codec() const { return codec_; }
  int v() const { return codec_.v(); }
  int k() const { return codec_.k(); }
  Vertex vertex_count() const override { return codec_.count(); }
  std::string label(Vertex v) const override;
  Vertex parse_label(std::string_view s) const override;
  bool vertex_transitive() const override { return true; }

 protected:
  SubsetCodec codec_;
};

class JohnsonGraph : public SubsetGraph {
 public:
  JohnsonGraph(int v, int k);
  std::string family() const override { return "johnson"; }
  std::string spec() const override;
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;
  using Graph::neighbors;
  std::optional<int> formula_distance(Vertex u, Vertex v) const override;
  std::optional<bool> reduced_by_formula() const override { return !(v() == 4 && k() == 2); }
};

class KneserGraph : public SubsetGraph {
 public:
  KneserGraph(int v, int k);
  std::string family() const override { return "kneser"; }
  std::string spec() const override;
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;
  using Graph::neighbors;
  std::optional<bool> reduced_by_formula() const override { return true; }
};

class CycleGraph : public Graph {
 public:
  explicit CycleGraph(int m);
  int m() const { return m_; }
  std::string family() const override { return "cycle"; }
  std::string spec() const override;
  Vertex vertex_count() const override { return static_cast<Vertex>(m_); }
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;
  using Graph::neighbors;
  std::optional<int> formula_distance(Vertex u, Vertex v) const override;
  bool vertex_transitive() const override { return true; }
  std::optional<bool> reduced_by_formula() const override { return m_ != 4; }

 private:
  int m_;
};

// Bilinear forms graph H_q(m,n): m x n matrices, adjacent iff rank(α−β)=1.
// Ids are row-major base-q numbers with entry (0,0) most significant.
class FormsGraph : public Graph {
 public:
  FormsGraph(int m, int n, int q);
  int rows() const { return m_; }
  int cols() const { return n_; }
  const FiniteField& field() const { return f_; }
  std::string family() const override { return "forms"; }
  std::string spec() const override;
  Vertex vertex_count() const override { return size_; }
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;
  using Graph::neighbors;
  std::optional<int> formula_distance(Vertex u, Vertex v) const override;
  std::string label(Vertex v) const override;
  Vertex parse_label(std::string_view s) const override;
  bool vertex_transitive() const override { return true; }

  Matrix matrix(Vertex v) const;
  Vertex from_matrix(const Matrix& a) const;

 private:
  int m_, n_;
  FiniteField f_;
  Vertex size_;
  std::vector<Vertex> rank_one_;  // ids of the rank-1 matrices
};

// Adjacency lists held in memory: incidence, collinearity, Grassmann and
// custom graphs.
class ExplicitGraph : public Graph {
 public:
  ExplicitGraph(std::string family, std::string spec, std::vector<std::vector<std::uint32_t>> adj,
                std::vector<std::string> labels = {});
  std::string family() const override { return family_; }
  std::string spec() const override { return spec_; }
  Vertex vertex_count() const override { return adj_.size(); }
  void neighbors(Vertex v, std::vector<Vertex>& out) const override;
  using Graph::neighbors;
  std::string label(Vertex v) const override;
  Vertex parse_label(std::string_view s) const override;
  const std::vector<std::vector<std::uint32_t>>& adjacency() const { return adj_; }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  std::string family_, spec_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::string> labels_;
};

// Parses "hamming:n=8,q=2", "johnson:v=5,k=2", "kneser:v=13,k=6", "cycle:m=8",
// "forms:m=3,n=3,q=2", "grassmann:d=4,k=2,q=2", "w3:q=2", "pg3:q=2".
GraphPtr make_graph(std::string_view spec);

std::shared_ptr<const ExplicitGraph> grassmann_graph(int d, int k, int q);

}  // namespace gcw
