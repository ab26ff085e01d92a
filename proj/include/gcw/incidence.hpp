#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcw/graph.hpp"
#include "gcw/perm.hpp"

namespace gcw {

// Points 0..points-1; each line is a sorted list of points.
struct IncidenceStructure {
  std::string name;
  std::size_t points = 0;
  std::vector<std::vector<std::uint32_t>> lines;
  std::vector<std::string> point_labels, line_labels;

  std::vector<std::vector<std::uint32_t>> lines_through() const;
  // (s, t) when every line has s+1 points, every point lies on t+1 lines, and
  // each antiflag (p, L) has exactly one point of L collinear with p.
  std::optional<std::pair<int, int>> gq_order() const;
};

IncidenceStructure dualize(const IncidenceStructure& s);

// Bipartite graph on points-then-lines.
class IncidenceGraph : public ExplicitGraph {
 public:
  IncidenceGraph(std::string spec, IncidenceStructure s);
  const IncidenceStructure& structure() const { return s_; }
  std::size_t point_count() const { return s_.points; }
  bool is_point(Vertex v) const { return v < s_.points; }

 private:
  IncidenceStructure s_;
};

std::shared_ptr<const IncidenceGraph> incidence_graph(const IncidenceStructure& s, std::string spec = {});
std::shared_ptr<const ExplicitGraph> collinearity_graph(const IncidenceStructure& s, std::string spec = {});

// PG3(q) point/line geometry, optionally restricted to the totally isotropic
// lines of the symplectic form f(x,y) = x0y1 - x1y0 - x2y3 + x3y2 (W3(q)).
class Geometry3 {
 public:
  Geometry3(int q, bool symplectic);

  const FiniteField& field() const { return f_; }
  bool symplectic() const { return symplectic_; }
  const std::vector<Row>& points() const { return points_; }
  const std::vector<Matrix>& lines() const { return lines_; }
  const IncidenceStructure& structure() const { return s_; }

  std::uint32_t point_index(const Row& v) const;
  // Index of the line spanned by the rows, or nullopt if that 2-space is not
  // a line of this geometry.
  std::optional<std::uint32_t> line_index(const Matrix& rows) const;
  int form(const Row& x, const Row& y) const;

  // Permutation of the incidence graph (points then lines) induced by
  // x -> (x^(p^frob)) M; throws PreconditionError if a line is not mapped to a line.
  Perm vertex_perm(const Matrix& m, int frob = 0) const;

 private:
  FiniteField f_;
  bool symplectic_;
  std::vector<Row> points_;
  std::vector<Matrix> lines_;
  std::unordered_map<std::uint64_t, std::uint32_t> point_of_, line_of_;
  IncidenceStructure s_;
};

class GeometryGraph : public IncidenceGraph {
 public:
  GeometryGraph(std::string spec, std::shared_ptr<const Geometry3> geom)
      : IncidenceGraph(std::move(spec), geom->structure()), geom_(std::move(geom)) {}
  const Geometry3& geometry() const { return *geom_; }
  std::shared_ptr<const Geometry3> geometry_ptr() const { return geom_; }

 private:
  std::shared_ptr<const Geometry3> geom_;
};

IncidenceStructure build_w3(int q);
IncidenceStructure build_pg3(int q);
std::shared_ptr<const GeometryGraph> w3_graph(int q);
std::shared_ptr<const GeometryGraph> pg3_graph(int q);

}  // namespace gcw
