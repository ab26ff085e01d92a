#include "gcw/incidence.hpp"

#include <algorithm>
#include <set>

#include "gcw/error.hpp"

namespace gcw {

std::vector<std::vector<std::uint32_t>> IncidenceStructure::lines_through() const {
  std::vector<std::vector<std::uint32_t>> on(points);
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (auto p : lines[l]) on[p].push_back(static_cast<std::uint32_t>(l));
  return on;
}

std::optional<std::pair<int, int>> IncidenceStructure::gq_order() const {
  if (lines.empty() || points == 0) return std::nullopt;
  const std::size_t k = lines[0].size();
  for (const auto& l : lines)
    if (l.size() != k) return std::nullopt;
  auto on = lines_through();
  const std::size_t r = on[0].size();
  for (const auto& x : on)
    if (x.size() != r) return std::nullopt;
  // collinear[p] as a sorted set of points sharing a line with p
  std::vector<std::vector<char>> col(points, std::vector<char>(points, 0));
  for (const auto& l : lines)
    for (auto a : l)
      for (auto b : l)
        if (a != b) {
          if (col[a][b]) return std::nullopt;  // two points on two lines
          col[a][b] = 1;
        }
  for (std::size_t p = 0; p < points; ++p) {
    std::vector<char> on_p(lines.size(), 0);
    for (auto l : on[p]) on_p[l] = 1;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if (on_p[l]) continue;
      int cnt = 0;
      for (auto x : lines[l]) cnt += col[p][x];
      if (cnt != 1) return std::nullopt;
    }
  }
  return std::make_pair(static_cast<int>(k) - 1, static_cast<int>(r) - 1);
}

IncidenceStructure dualize(const IncidenceStructure& s) {
  IncidenceStructure d;
  d.name = s.name + "^D";
  d.points = s.lines.size();
  d.lines = s.lines_through();
  d.point_labels = s.line_labels;
  d.line_labels = s.point_labels;
  return d;
}

namespace {

std::vector<std::string> incidence_labels(const IncidenceStructure& s) {
  std::vector<std::string> labels;
  const std::size_t total = s.points + s.lines.size();
  labels.reserve(total);
  for (std::size_t p = 0; p < s.points; ++p)
    labels.push_back("P" + (s.point_labels.empty() ? std::to_string(p) : s.point_labels[p]));
  for (std::size_t l = 0; l < s.lines.size(); ++l)
    labels.push_back("L" + (s.line_labels.empty() ? std::to_string(l) : s.line_labels[l]));
  return labels;
}

std::vector<std::vector<std::uint32_t>> incidence_adjacency(const IncidenceStructure& s) {
  std::vector<std::vector<std::uint32_t>> adj(s.points + s.lines.size());
  for (std::size_t l = 0; l < s.lines.size(); ++l)
    for (auto p : s.lines[l]) {
      if (p >= s.points) throw UsageError("line contains an unknown point");
      adj[p].push_back(static_cast<std::uint32_t>(s.points + l));
      adj[s.points + l].push_back(p);
    }
  return adj;
}

}  // namespace

IncidenceGraph::IncidenceGraph(std::string spec, IncidenceStructure s)
    : ExplicitGraph("incidence", spec.empty() ? "incidence:" + s.name : spec, incidence_adjacency(s),
                    incidence_labels(s)),
      s_(std::move(s)) {}

std::shared_ptr<const IncidenceGraph> incidence_graph(const IncidenceStructure& s, std::string spec) {
  return std::make_shared<IncidenceGraph>(std::move(spec), s);
}

std::shared_ptr<const ExplicitGraph> collinearity_graph(const IncidenceStructure& s, std::string spec) {
  std::vector<std::set<std::uint32_t>> nb(s.points);
  for (const auto& l : s.lines)
    for (auto a : l)
      for (auto b : l)
        if (a != b) nb[a].insert(b);
  std::vector<std::vector<std::uint32_t>> adj(s.points);
  for (std::size_t p = 0; p < s.points; ++p) adj[p].assign(nb[p].begin(), nb[p].end());
  std::vector<std::string> labels;
  if (!s.point_labels.empty()) labels = s.point_labels;
  return std::make_shared<ExplicitGraph>("collinearity", spec.empty() ? "collinearity:" + s.name : spec,
                                         std::move(adj), std::move(labels));
}

// ------------------------------------------------------------------ PG3 / W3

namespace {

std::string row_label(const Row& r) {
  std::string s;
  for (int x : r) s.push_back(static_cast<char>(x < 10 ? '0' + x : 'a' + x - 10));
  return s;
}

}  // namespace

Geometry3::Geometry3(int q, bool symplectic) : symplectic_(symplectic) {
  auto [p, d] = prime_power(static_cast<std::uint64_t>(q));
  if (!p) throw UsageError("geometry needs a prime power q");
  if (q > 9) throw BudgetExceeded("PG3(q) enumeration limited to q <= 9");
  f_ = FiniteField::make(p, d);
  for (auto& m : enumerate_subspaces(f_, 4, 1)) points_.push_back(m[0]);
  for (std::size_t i = 0; i < points_.size(); ++i)
    point_of_[subspace_key(f_, {points_[i]})] = static_cast<std::uint32_t>(i);
  for (auto& m : enumerate_subspaces(f_, 4, 2)) {
    if (symplectic && form(m[0], m[1]) != 0) continue;
    line_of_[subspace_key(f_, m)] = static_cast<std::uint32_t>(lines_.size());
    lines_.push_back(m);
  }
  s_.name = (symplectic ? "W3(" : "PG3(") + std::to_string(q) + ")";
  s_.points = points_.size();
  for (const auto& r : points_) s_.point_labels.push_back(row_label(r));
  for (const auto& m : lines_) {
    std::vector<std::uint32_t> pts;
    // points a*r0 + b*r1, (a,b) projective
    const int qq = f_.q();
    for (int a = 0; a < qq; ++a)
      for (int b = 0; b < qq; ++b) {
        if (a == 0 && b == 0) continue;
        if (!(a == 1 || (a == 0 && b == 1))) continue;
        Row v(4);
        for (int i = 0; i < 4; ++i) v[i] = f_.add(f_.mul(a, m[0][i]), f_.mul(b, m[1][i]));
        pts.push_back(point_index(v));
      }
    std::sort(pts.begin(), pts.end());
    s_.lines.push_back(std::move(pts));
    s_.line_labels.push_back(row_label(m[0]) + "/" + row_label(m[1]));
  }
}

int Geometry3::form(const Row& x, const Row& y) const {
  int a = f_.sub(f_.mul(x[0], y[1]), f_.mul(x[1], y[0]));
  int b = f_.sub(f_.mul(x[2], y[3]), f_.mul(x[3], y[2]));
  return f_.sub(a, b);
}

std::uint32_t Geometry3::point_index(const Row& v) const {
  return point_of_.at(subspace_key(f_, {normalize_projective(f_, v)}));
}

std::optional<std::uint32_t> Geometry3::line_index(const Matrix& rows) const {
  Matrix r = rref(f_, rows);
  if (r.size() != 2) throw PreconditionError("rows do not span a 2-space");
  auto it = line_of_.find(subspace_key(f_, r));
  if (it == line_of_.end()) return std::nullopt;
  return it->second;
}

Perm Geometry3::vertex_perm(const Matrix& m, int frob) const {
  if (m.size() != 4 || m[0].size() != 4 || det(f_, m) == 0)
    throw PreconditionError("expected an invertible 4x4 matrix");
  auto image = [&](const Row& v) {
    Row w(4);
    for (int i = 0; i < 4; ++i) w[i] = f_.frobenius(v[i], frob);
    return vec_mat(f_, w, m);
  };
  const std::size_t np = points_.size();
  std::vector<Point> img(np + lines_.size());
  for (std::size_t i = 0; i < np; ++i) img[i] = point_index(image(points_[i]));
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    auto li = line_index({image(lines_[l][0]), image(lines_[l][1])});
    if (!li) throw PreconditionError("matrix does not preserve the line set", s_.line_labels[l]);
    img[np + l] = static_cast<Point>(np + *li);
  }
  return Perm(std::move(img));
}

IncidenceStructure build_w3(int q) { return Geometry3(q, true).structure(); }
IncidenceStructure build_pg3(int q) { return Geometry3(q, false).structure(); }

std::shared_ptr<const GeometryGraph> w3_graph(int q) {
  return std::make_shared<GeometryGraph>("w3:q=" + std::to_string(q), std::make_shared<Geometry3>(q, true));
}

std::shared_ptr<const GeometryGraph> pg3_graph(int q) {
  return std::make_shared<GeometryGraph>("pg3:q=" + std::to_string(q), std::make_shared<Geometry3>(q, false));
}

}  // namespace gcw
