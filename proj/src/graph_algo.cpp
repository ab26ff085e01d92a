#include "gcw/graph_algo.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "gcw/error.hpp"

namespace gcw {

VertexSet::VertexSet(Vertex universe) : dense_(universe <= (Vertex{1} << 28)) {
  if (dense_) bits_.assign((universe + 63) / 64, 0);
}

bool VertexSet::insert(Vertex v) {
  if (dense_) {
    std::uint64_t& w = bits_[v >> 6];
    std::uint64_t m = std::uint64_t{1} << (v & 63);
    if (w & m) return false;
    w |= m;
    ++count_;
    return true;
  }
  if (!hash_.insert(v).second) return false;
  ++count_;
  return true;
}

bool VertexSet::contains(Vertex v) const {
  if (dense_) return bits_[v >> 6] >> (v & 63) & 1;
  return hash_.count(v) > 0;
}

std::vector<std::uint8_t> bfs_levels(const Graph& g, const std::vector<Vertex>& sources, std::uint64_t limit) {
  const Vertex n = g.vertex_count();
  if (n > limit) throw BudgetExceeded("dense BFS limited to |V| <= " + std::to_string(limit));
  std::vector<std::uint8_t> lev(n, kNoLevel);
  std::vector<Vertex> frontier, next, nb;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (lev[s] != 0) {
      lev[s] = 0;
      frontier.push_back(s);
    }
  }
  std::uint8_t d = 0;
  while (!frontier.empty()) {
    if (d == kNoLevel - 1) throw BudgetExceeded("distance above 254");
    ++d;
    next.clear();
    for (Vertex u : frontier) {
      g.neighbors(u, nb);
      for (Vertex w : nb)
        if (lev[w] == kNoLevel) {
          lev[w] = d;
          next.push_back(w);
        }
    }
    frontier.swap(next);
  }
  return lev;
}

std::vector<std::vector<Vertex>> spheres(const Graph& g, Vertex v, int r) {
  g.check_vertex(v);
  std::vector<std::vector<Vertex>> out{{v}};
  std::unordered_set<Vertex> seen{v};
  std::vector<Vertex> nb;
  for (int i = 1; i <= r; ++i) {
    std::vector<Vertex> next;
    for (Vertex u : out.back()) {
      g.neighbors(u, nb);
      for (Vertex w : nb)
        if (seen.insert(w).second) next.push_back(w);
    }
    std::sort(next.begin(), next.end());
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Vertex> sphere(const Graph& g, Vertex v, int i) {
  if (i < 0) throw UsageError("negative radius");
  return spheres(g, v, i).back();
}

std::vector<Vertex> ball(const Graph& g, Vertex v, int i) {
  if (i < 0) throw UsageError("negative radius");
  std::vector<Vertex> out;
  for (auto& s : spheres(g, v, i)) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (auto d = g.formula_distance(u, v)) return *d;
  if (u == v) return 0;
  std::unordered_set<Vertex> seen{u};
  std::vector<Vertex> frontier{u}, next, nb;
  for (int d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (Vertex x : frontier) {
      g.neighbors(x, nb);
      for (Vertex w : nb) {
        if (w == v) return d;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier.swap(next);
  }
  return kUnreachable;
}

std::string IntersectionArray::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  s += ";";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

std::optional<IntersectionArray> is_distance_regular(const Graph& g, std::uint64_t budget) {
  const Vertex n = g.vertex_count();
  if (n > budget) throw BudgetExceeded("distance-regularity check limited to |V| <= " + std::to_string(budget));
  std::optional<IntersectionArray> ref;
  std::vector<Vertex> nb;
  for (Vertex v = 0; v < n; ++v) {
    auto lev = bfs_levels(g, {v});
    std::uint8_t d = 0;
    for (auto l : lev) {
      if (l == kNoLevel) return std::nullopt;  // disconnected
      d = std::max(d, l);
    }
    std::vector<std::int64_t> b(d + 1, -1), c(d + 1, -1);
    for (Vertex x = 0; x < n; ++x) {
      g.neighbors(x, nb);
      std::int64_t bx = 0, cx = 0;
      for (Vertex w : nb) {
        bx += lev[w] == lev[x] + 1;
        cx += lev[w] + 1 == lev[x];
      }
      auto& B = b[lev[x]];
      auto& C = c[lev[x]];
      if (B == -1) {
        B = bx;
        C = cx;
      } else if (B != bx || C != cx) {
        return std::nullopt;
      }
    }
    IntersectionArray ia;
    for (int i = 0; i < d; ++i) ia.b.push_back(static_cast<std::uint64_t>(b[i]));
    for (int i = 1; i <= d; ++i) ia.c.push_back(static_cast<std::uint64_t>(c[i]));
    if (!ref) {
      ref = ia;
    } else if (!(*ref == ia)) {
      return std::nullopt;
    }
  }
  return ref;
}

int diameter(const Graph& g, std::uint64_t budget) {
  const Vertex n = g.vertex_count();
  if (n > budget) throw BudgetExceeded("diameter check too large");
  int d = 0;
  for (Vertex v = 0; v < n; ++v)
    for (auto l : bfs_levels(g, {v})) {
      if (l == kNoLevel) return kUnreachable;
      d = std::max<int>(d, l);
    }
  return d;
}

int girth(const Graph& g, std::uint64_t budget) {
  const Vertex n = g.vertex_count();
  if (n > budget) throw BudgetExceeded("girth check too large");
  int best = 0;
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> nb;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::vector<Vertex> q{s};
    for (std::size_t i = 0; i < q.size(); ++i) {
      Vertex u = q[i];
      if (best && 2 * dist[u] + 1 >= best) break;
      g.neighbors(u, nb);
      for (Vertex w : nb) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = static_cast<int>(u);
          q.push_back(w);
        } else if (static_cast<int>(w) != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_bipartite(const Graph& g, std::uint64_t budget) {
  const Vertex n = g.vertex_count();
  if (n > budget) throw BudgetExceeded("bipartiteness check too large");
  std::vector<std::uint8_t> lev;
  std::vector<char> done(n, 0);
  std::vector<Vertex> nb;
  for (Vertex s = 0; s < n; ++s) {
    if (done[s]) continue;
    lev = bfs_levels(g, {s}, budget);
    for (Vertex x = 0; x < n; ++x) {
      if (lev[x] == kNoLevel) continue;
      done[x] = 1;
      g.neighbors(x, nb);
      for (Vertex w : nb)
        if (lev[w] == lev[x]) return false;
    }
  }
  return true;
}

bool is_reduced(const Graph& g, std::uint64_t budget) {
  if (auto r = g.reduced_by_formula()) return *r;
  const Vertex n = g.vertex_count();
  if (n > budget) throw BudgetExceeded("reducedness check limited to |V| <= " + std::to_string(budget));
  std::map<std::vector<Vertex>, Vertex> seen;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::sort(nb.begin(), nb.end());
    if (!seen.emplace(std::move(nb), v).second) return false;
  }
  return true;
}

}  // namespace gcw
