#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcw/field.hpp"
#include "gcw/graph.hpp"
#include "gcw/linalg.hpp"

namespace gcw {

// Generator rows over the field; entry j of a row is coordinate j of the
// Hamming host (entry 0 is the most significant digit of a vertex id).
struct LinearDescriptor {
  FiniteField field;
  Matrix generator;  // full row rank
};

class Code {
 public:
  Code(GraphPtr graph, std::vector<Vertex> ids, std::optional<LinearDescriptor> linear = std::nullopt,
       std::string name = {});

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::vector<Vertex>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains(Vertex v) const;
  const std::optional<LinearDescriptor>& linear() const { return linear_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  // nullptr unless the host is a Hamming graph.
  const HammingGraph* hamming() const;
  int length() const;  // Hamming length n (throws for other hosts)

  bool operator==(const Code& o) const { return ids_ == o.ids_ && graph_->spec() == o.graph_->spec(); }

 private:
  GraphPtr graph_;
  std::vector<Vertex> ids_;
  std::optional<LinearDescriptor> linear_;
  std::string name_;
};

// Row space of `generator` inside H(n, q); the rows are reduced to full rank.
Code linear_code(const FiniteField& f, const Matrix& generator, std::string name = {});
// Dual code (orthogonal complement under the standard dot product).
Code dual_code(const Code& c, std::string name = {});
Vertex row_to_vertex(const HammingGraph& h, const Row& r);
Row vertex_to_row(const HammingGraph& h, Vertex v);

// δ; PreconditionError for |C| <= 1 (trivial code, δ undefined).
int min_distance(const Code& c, std::uint64_t pair_budget = 200'000'000);
int error_capacity(const Code& c);
int error_capacity_from(int delta);

enum class PartitionMode { dense, spheres, syndrome };
std::string to_string(PartitionMode m);

class DistancePartition {
 public:
  PartitionMode mode() const { return mode_; }
  // Number of stored levels (ρ+1 when ρ is known, s+1 in sphere mode).
  int levels() const { return static_cast<int>(sizes_.size()); }
  std::optional<int> rho() const { return rho_; }
  const std::vector<std::uint64_t>& sizes() const { return sizes_; }
  // Level index of v, or nullopt when v lies beyond the stored levels.
  std::optional<int> level_of(Vertex v) const;
  // Materialized, sorted level set.
  std::vector<Vertex> level_set(int i) const;
  const std::vector<std::uint8_t>& dense_levels() const { return dense_; }

  // Syndrome mode internals: coset table indexed by syndrome.
  std::uint64_t syndrome(Vertex v) const;
  const std::vector<std::uint8_t>& coset_levels() const { return coset_level_; }

 private:
  friend DistancePartition distance_partition(const class Code&, PartitionMode, int);
  friend struct PartitionAccess;
  PartitionMode mode_ = PartitionMode::dense;
  const Code* code_ = nullptr;
  std::vector<std::uint8_t> dense_;
  std::vector<std::vector<Vertex>> sets_;
  std::optional<int> rho_;
  std::vector<std::uint64_t> sizes_;
  // syndrome mode
  std::optional<FiniteField> field_;
  int redundancy_ = 0;
  std::vector<std::vector<std::uint64_t>> column_shift_;  // [j][a] = syndrome of a*e_j
  std::vector<std::uint8_t> coset_level_;
};

// The partition keeps a pointer to `c`; the code must outlive it.
// spheres mode requires s <= e; dense requires |V| <= 2^24; syndrome requires a linear
// descriptor with q^(n-k) <= 2^24.
DistancePartition distance_partition(const Code& c, PartitionMode mode, int s = 0);
// Dense when |V| fits, else syndrome for linear codes; throws otherwise.
DistancePartition auto_partition(const Code& c);

struct LevelCounts {
  std::uint64_t a = 0, b = 0, c = 0;
  bool operator==(const LevelCounts& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct RegularityViolation {
  Vertex vertex;
  int level;
  LevelCounts found, expected;
};

struct RegularityProfile {
  bool regular = true;
  std::vector<LevelCounts> counts;  // levels 0..s
  std::optional<RegularityViolation> witness;
};

// Requires the partition to cover levels 0..s.
RegularityProfile s_regularity(const Code& c, const DistancePartition& p, int s);
RegularityProfile s_regularity(const Code& c, int s);
bool is_completely_regular(const Code& c);
bool is_completely_regular(const Code& c, const DistancePartition& p);

bool is_perfect(const Code& c);
// Throws PreconditionError for i > e.
bool verify_sphere_packing(const Code& c, int i);

// Invariance of C under some n-cycle of coordinates (exhaustive over (n-1)! cycles, n <= 10).
bool is_cyclic(const Code& c);

// One codeword per line in the host's label syntax; blank lines and '#' comments skipped.
Code read_code_text(GraphPtr g, std::string_view text, std::string name = {});
std::string write_code_text(const Code& c);
// JSON array of vertex ids.
Code read_code_json(GraphPtr g, std::string_view text, std::string name = {});
std::string write_code_json(const Code& c);

}  // namespace gcw
