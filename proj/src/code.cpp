#include "gcw/code.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"
#include "json.hpp"

namespace gcw {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 62) / b) throw BudgetExceeded("integer power overflow");
    r *= b;
  }
  return r;
}

// All F-linear combinations of the rows, as vertex ids of h.
std::vector<Vertex> span_ids(const FiniteField& f, const HammingGraph& h, const Matrix& rows) {
  std::vector<Vertex> out{0};
  for (const Row& r : rows) {
    std::size_t base = out.size();
    std::vector<Vertex> next;
    next.reserve(base * f.q());
    for (int a = 0; a < f.q(); ++a) {
      Row m(r.size());
      for (std::size_t j = 0; j < r.size(); ++j) m[j] = f.mul(a, r[j]);
      for (std::size_t t = 0; t < base; ++t) {
        Row x = vertex_to_row(h, out[t]);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.add(x[j], m[j]);
        next.push_back(row_to_vertex(h, x));
      }
    }
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Vertex row_to_vertex(const HammingGraph& h, const Row& r) {
  return h.from_digits(std::vector<int>(r.begin(), r.end()));
}

Row vertex_to_row(const HammingGraph& h, Vertex v) {
  auto d = h.digits(v);
  return Row(d.begin(), d.end());
}

Code::Code(GraphPtr graph, std::vector<Vertex> ids, std::optional<LinearDescriptor> linear, std::string name)
    : graph_(std::move(graph)), ids_(std::move(ids)), linear_(std::move(linear)), name_(std::move(name)) {
  if (!graph_) throw Error("code without host graph");
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw UsageError("duplicate codeword in code " + name_);
  for (Vertex v : ids_) graph_->check_vertex(v);
  if (linear_) {
    const HammingGraph* h = hamming();
    if (!h || h->q() != linear_->field.q()) throw Error("linear descriptor needs a Hamming host over its field");
    const auto k = linear_->generator.size();
    if (ipow(linear_->field.q(), static_cast<int>(k)) != ids_.size())
      throw ImplementationContradiction("linear descriptor rank disagrees with |C|");
    if (ids_.size() <= 100000 && span_ids(linear_->field, *h, linear_->generator) != ids_)
      throw ImplementationContradiction("linear descriptor span differs from the id set");
  }
}

bool Code::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

const HammingGraph* Code::hamming() const { return dynamic_cast<const HammingGraph*>(graph_.get()); }

int Code::length() const {
  const HammingGraph* h = hamming();
  if (!h) throw PreconditionError("code is not in a Hamming graph", graph_->spec());
  return h->n();
}

Code linear_code(const FiniteField& f, const Matrix& generator, std::string name) {
  if (generator.empty()) throw UsageError("empty generator matrix");
  const int n = static_cast<int>(generator[0].size());
  Matrix g = rref(f, generator);
  if (ipow(f.q(), static_cast<int>(g.size())) > 10'000'000) throw BudgetExceeded("linear code too large to enumerate");
  auto h = std::make_shared<HammingGraph>(n, f.q());
  auto ids = span_ids(f, *h, g);
  return Code(h, std::move(ids), LinearDescriptor{f, g}, std::move(name));
}

Code dual_code(const Code& c, std::string name) {
  if (!c.linear()) throw PreconditionError("dual needs a linear code", c.name());
  const auto& lin = *c.linear();
  Matrix k = kernel(lin.field, lin.generator);
  if (k.empty()) {
    auto h = std::make_shared<HammingGraph>(c.length(), lin.field.q());
    return Code(h, {0}, std::nullopt, std::move(name));
  }
  return linear_code(lin.field, k, std::move(name));
}

// ------------------------------------------------------------ min distance

int min_distance(const Code& c, std::uint64_t pair_budget) {
  const auto& ids = c.ids();
  if (ids.size() <= 1) throw PreconditionError("trivial code: minimum distance undefined", std::to_string(ids.size()));
  const Graph& g = c.graph();
  const HammingGraph* h = c.hamming();
  int best = 1 << 30;
  if (c.linear() && h) {
    for (Vertex v : ids)
      if (v != 0) best = std::min(best, h->weight_of(v));
    return best;
  }
  if (h && h->q() == 2) {
    for (std::size_t i = 0; i < ids.size() && best > 1; ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        best = std::min(best, __builtin_popcountll(ids[i] ^ ids[j]));
    return best;
  }
  const std::uint64_t pairs = ids.size() * (ids.size() - 1) / 2;
  if (g.formula_distance(ids[0], ids[1])) {
    if (pairs > pair_budget) throw BudgetExceeded("pairwise minimum distance over budget");
    for (std::size_t i = 0; i < ids.size() && best > 1; ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) best = std::min(best, *g.formula_distance(ids[i], ids[j]));
    return best;
  }
  // BFS from each codeword, cut at the running minimum.
  std::vector<Vertex> frontier, next, nb;
  for (Vertex a : ids) {
    VertexSet seen(g.vertex_count());
    seen.insert(a);
    frontier.assign(1, a);
    for (int d = 1; d < best && !frontier.empty(); ++d) {
      next.clear();
      bool hit = false;
      for (Vertex u : frontier) {
        g.neighbors(u, nb);
        for (Vertex w : nb)
          if (seen.insert(w)) {
            if (c.contains(w)) hit = true;
            next.push_back(w);
          }
      }
      if (hit) {
        best = d;
        break;
      }
      frontier.swap(next);
    }
    if (best == 1) break;
  }
  if (best == 1 << 30) throw PreconditionError("codewords lie in different components", c.name());
  return best;
}

int error_capacity_from(int delta) { return (delta - 1) / 2; }
int error_capacity(const Code& c) { return error_capacity_from(min_distance(c)); }

// ------------------------------------------------------------ partitions

std::string to_string(PartitionMode m) {
  switch (m) {
    case PartitionMode::dense: return "dense";
    case PartitionMode::spheres: return "spheres";
    case PartitionMode::syndrome: return "syndrome";
  }
  return "?";
}

struct PartitionAccess {
  static std::uint64_t add(const DistancePartition& p, std::uint64_t a, std::uint64_t b) {
    const FiniteField& f = *p.field_;
    if (f.q() == 2) return a ^ b;
    std::uint64_t r = 0, w = 1;
    for (int i = 0; i < p.redundancy_; ++i) {
      int x = static_cast<int>(a % f.q()), y = static_cast<int>(b % f.q());
      r += static_cast<std::uint64_t>(f.add(x, y)) * w;
      a /= f.q();
      b /= f.q();
      w *= f.q();
    }
    return r;
  }
};

std::uint64_t DistancePartition::syndrome(Vertex v) const {
  if (mode_ != PartitionMode::syndrome) throw Error("syndrome on a non-syndrome partition");
  const auto* h = code_->hamming();
  std::uint64_t s = 0;
  for (int j = h->n() - 1; j >= 0; --j) {
    int d = static_cast<int>(v % h->q());
    v /= h->q();
    if (d) s = PartitionAccess::add(*this, s, column_shift_[j][d]);
  }
  return s;
}

std::optional<int> DistancePartition::level_of(Vertex v) const {
  switch (mode_) {
    case PartitionMode::dense:
      if (dense_[v] == kNoLevel) return std::nullopt;
      return dense_[v];
    case PartitionMode::spheres:
      for (std::size_t i = 0; i < sets_.size(); ++i)
        if (std::binary_search(sets_[i].begin(), sets_[i].end(), v)) return static_cast<int>(i);
      return std::nullopt;
    case PartitionMode::syndrome: return coset_level_[syndrome(v)];
  }
  return std::nullopt;
}

std::vector<Vertex> DistancePartition::level_set(int i) const {
  if (i < 0 || i >= levels()) throw PreconditionError("level not available", std::to_string(i));
  if (mode_ == PartitionMode::spheres) return sets_[i];
  std::vector<Vertex> out;
  out.reserve(sizes_[i]);
  const Vertex n = code_->graph().vertex_count();
  if (mode_ == PartitionMode::dense) {
    for (Vertex v = 0; v < n; ++v)
      if (dense_[v] == i) out.push_back(v);
  } else {
    if (n > (Vertex{1} << 28)) throw BudgetExceeded("level set materialization over budget");
    for (Vertex v = 0; v < n; ++v)
      if (coset_level_[syndrome(v)] == i) out.push_back(v);
  }
  return out;
}

DistancePartition distance_partition(const Code& c, PartitionMode mode, int s) {
  DistancePartition p;
  p.mode_ = mode;
  p.code_ = &c;
  const Graph& g = c.graph();
  if (c.size() == 0) throw PreconditionError("empty code has no distance partition");
  switch (mode) {
    case PartitionMode::dense: {
      if (g.vertex_count() > kDenseLimit) throw PreconditionError("dense partition needs |V| <= 2^24", g.spec());
      p.dense_ = bfs_levels(g, c.ids());
      int rho = 0;
      for (auto x : p.dense_) {
        if (x == kNoLevel) throw PreconditionError("host graph is disconnected", g.spec());
        rho = std::max<int>(rho, x);
      }
      p.rho_ = rho;
      p.sizes_.assign(rho + 1, 0);
      for (auto x : p.dense_) ++p.sizes_[x];
      break;
    }
    case PartitionMode::spheres: {
      if (s < 0) throw UsageError("negative s");
      if (c.size() >= 2 && s > error_capacity(c))
        throw PreconditionError("sphere partition needs s <= e", std::to_string(s));
      p.sets_.assign(s + 1, {});
      for (Vertex a : c.ids()) {
        auto sp = spheres(g, a, s);
        for (int i = 0; i <= s; ++i) {
          if (i < static_cast<int>(sp.size()) && !sp[i].empty()) {
            p.sets_[i].insert(p.sets_[i].end(), sp[i].begin(), sp[i].end());
          } else if (c.size() >= 2) {
            throw ImplementationContradiction("empty sphere around a codeword within the error capacity");
          }
        }
      }
      for (auto& l : p.sets_) {
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
          throw ImplementationContradiction("spheres of radius <= e around codewords overlap");
        p.sizes_.push_back(l.size());
      }
      break;
    }
    case PartitionMode::syndrome: {
      const HammingGraph* h = c.hamming();
      if (!c.linear() || !h) throw PreconditionError("syndrome partition needs a linear code", c.name());
      const FiniteField& f = c.linear()->field;
      Matrix hm = kernel(f, c.linear()->generator);
      const int r = static_cast<int>(hm.size());
      if (ipow(f.q(), r) > kDenseLimit) throw PreconditionError("syndrome partition needs q^(n-k) <= 2^24");
      p.field_ = f;
      p.redundancy_ = r;
      const int n = h->n();
      p.column_shift_.assign(n, std::vector<std::uint64_t>(f.q(), 0));
      for (int j = 0; j < n; ++j)
        for (int a = 1; a < f.q(); ++a) {
          std::uint64_t v = 0, w = 1;
          for (int i = 0; i < r; ++i, w *= f.q()) v += static_cast<std::uint64_t>(f.mul(a, hm[i][j])) * w;
          p.column_shift_[j][a] = v;
        }
      const std::uint64_t cosets = ipow(f.q(), r);
      p.coset_level_.assign(cosets, kNoLevel);
      p.coset_level_[0] = 0;
      std::vector<std::uint64_t> frontier{0}, next;
      std::vector<std::uint64_t> count{1};
      for (int d = 1; !frontier.empty(); ++d) {
        next.clear();
        for (auto sy : frontier)
          for (int j = 0; j < n; ++j)
            for (int a = 1; a < f.q(); ++a) {
              auto t = PartitionAccess::add(p, sy, p.column_shift_[j][a]);
              if (p.coset_level_[t] == kNoLevel) {
                p.coset_level_[t] = static_cast<std::uint8_t>(d);
                next.push_back(t);
              }
            }
        if (!next.empty()) count.push_back(next.size());
        frontier.swap(next);
      }
      p.rho_ = static_cast<int>(count.size()) - 1;
      for (auto x : count) p.sizes_.push_back(x * c.size());
      break;
    }
  }
  return p;
}

DistancePartition auto_partition(const Code& c) {
  if (c.graph().vertex_count() <= kDenseLimit) return distance_partition(c, PartitionMode::dense);
  if (c.linear()) return distance_partition(c, PartitionMode::syndrome);
  throw PreconditionError("no partition mode applies: |V| > 2^24 and the code is not linear", c.graph().spec());
}

// ------------------------------------------------------------ regularity

RegularityProfile s_regularity(const Code& c, const DistancePartition& p, int s) {
  if (s < 0 || s >= p.levels()) throw PreconditionError("partition does not cover level " + std::to_string(s));
  RegularityProfile prof;
  prof.counts.assign(s + 1, LevelCounts{});
  std::vector<bool> seen(s + 1, false);
  const bool last_unknown = p.mode() == PartitionMode::spheres;
  auto classify = [&](Vertex v, int i, const LevelCounts& k) {
    if (!seen[i]) {
      seen[i] = true;
      prof.counts[i] = k;
    } else if (!(prof.counts[i] == k) && prof.regular) {
      prof.regular = false;
      prof.witness = RegularityViolation{v, i, k, prof.counts[i]};
    }
  };
  auto tally = [&](int i, std::optional<int> l, LevelCounts& k) {
    if (!l) {
      if (!(last_unknown && i == s)) throw ImplementationContradiction("neighbour outside the stored levels");
      ++k.b;
    } else if (*l == i - 1) {
      ++k.c;
    } else if (*l == i) {
      ++k.a;
    } else if (*l == i + 1) {
      ++k.b;
    } else if (!(last_unknown && i == s && *l > i)) {
      throw ImplementationContradiction("neighbour levels differ by more than one");
    }
  };

  if (p.mode() == PartitionMode::syndrome) {
    // Counts depend only on the syndrome, so one vertex per coset suffices.
    const HammingGraph* h = c.hamming();
    const auto& lev = p.coset_levels();
    const int q = h->q();
    // Coset leaders, rebuilt by BFS in the same order as the partition.
    std::vector<Vertex> leader(lev.size(), 0);
    std::vector<bool> done(lev.size(), false);
    done[0] = true;
    std::vector<std::uint64_t> frontier{0}, next, order{0};
    while (!frontier.empty()) {
      next.clear();
      for (auto sy : frontier)
        for (int j = 0; j < h->n(); ++j)
          for (int a = 1; a < q; ++a) {
            Vertex v = leader[sy] + static_cast<Vertex>(a) * h->weight(j);
            if (h->digit(leader[sy], j) != 0) continue;
            auto t = p.syndrome(v);
            if (!done[t]) {
              done[t] = true;
              leader[t] = v;
              next.push_back(t);
              order.push_back(t);
            }
          }
      frontier.swap(next);
    }
    std::vector<Vertex> nb;
    for (auto sy : order) {
      int i = lev[sy];
      if (i > s) continue;
      LevelCounts k;
      c.graph().neighbors(leader[sy], nb);
      for (Vertex w : nb) tally(i, p.level_of(w), k);
      classify(leader[sy], i, k);
    }
    return prof;
  }

  std::vector<Vertex> nb;
  if (p.mode() == PartitionMode::dense) {
    const auto& lev = p.dense_levels();
    for (int i = 0; i <= s; ++i)
      for (Vertex v = 0; v < lev.size(); ++v) {
        if (lev[v] != i) continue;
        LevelCounts k;
        c.graph().neighbors(v, nb);
        for (Vertex w : nb) tally(i, lev[w], k);
        classify(v, i, k);
      }
    return prof;
  }
  for (int i = 0; i <= s; ++i) {
    for (Vertex v : p.level_set(i)) {
      LevelCounts k;
      c.graph().neighbors(v, nb);
      for (Vertex w : nb) tally(i, p.level_of(w), k);
      classify(v, i, k);
    }
  }
  return prof;
}

RegularityProfile s_regularity(const Code& c, int s) {
  auto p = auto_partition(c);
  return s_regularity(c, p, s);
}

bool is_completely_regular(const Code& c, const DistancePartition& p) {
  if (!p.rho()) throw PreconditionError("complete regularity needs the covering radius");
  return s_regularity(c, p, *p.rho()).regular;
}

bool is_completely_regular(const Code& c) {
  auto p = auto_partition(c);
  return is_completely_regular(c, p);
}

bool is_perfect(const Code& c) {
  const int e = error_capacity(c);
  const Graph& g = c.graph();
  std::uint64_t total = 0;
  if (g.vertex_transitive()) {
    total = ball(g, c.ids()[0], e).size() * c.size();
  } else {
    for (Vertex a : c.ids()) total += ball(g, a, e).size();
  }
  return total == g.vertex_count();
}

bool verify_sphere_packing(const Code& c, int i) {
  const int e = c.size() >= 2 ? error_capacity(c) : i;
  if (i < 0 || i > e) throw PreconditionError("sphere packing needs i <= e", std::to_string(i));
  const Graph& g = c.graph();
  VertexSet seen(g.vertex_count());
  for (Vertex a : c.ids()) {
    auto sp = spheres(g, a, i);
    if (static_cast<int>(sp.size()) <= i || sp[i].empty()) return false;
    for (const auto& l : sp)
      for (Vertex v : l)
        if (!seen.insert(v)) return false;
  }
  return true;
}

bool is_cyclic(const Code& c) {
  const HammingGraph* h = c.hamming();
  if (!h) throw PreconditionError("cyclicity test needs a Hamming host", c.graph().spec());
  const int n = h->n();
  if (n > 10) throw BudgetExceeded("n-cycle scan limited to n <= 10");
  if (n == 1) return true;
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> cyc(n);
  do {
    // cycle 0 -> rest[0] -> ... -> rest[n-2] -> 0
    cyc[0] = rest[0];
    for (int t = 0; t + 1 < n - 1; ++t) cyc[rest[t]] = rest[t + 1];
    cyc[rest[n - 2]] = 0;
    bool ok = true;
    for (Vertex v : c.ids()) {
      auto d = h->digits(v);
      std::vector<int> e(n);
      for (int j = 0; j < n; ++j) e[cyc[j]] = d[j];
      if (!c.contains(h->from_digits(e))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// ------------------------------------------------------------ file formats

Code read_code_text(GraphPtr g, std::string_view text, std::string name) {
  std::vector<Vertex> ids;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    ids.push_back(g->parse_label(std::string_view(line).substr(b, e - b + 1)));
  }
  return Code(std::move(g), std::move(ids), std::nullopt, std::move(name));
}

std::string write_code_text(const Code& c) {
  std::string out;
  for (Vertex v : c.ids()) out += c.graph().label(v) + "\n";
  return out;
}

Code read_code_json(GraphPtr g, std::string_view text, std::string name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad JSON code file: ") + e.what());
  }
  if (j.is_object() && j.contains("ids")) j = j["ids"];
  if (!j.is_array()) throw UsageError("JSON code file must be an array of vertex ids");
  std::vector<Vertex> ids;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw UsageError("JSON vertex ids must be non-negative integers");
    ids.push_back(x.get<Vertex>());
  }
  return Code(std::move(g), std::move(ids), std::nullopt, std::move(name));
}

std::string write_code_json(const Code& c) { return nlohmann::json(c.ids()).dump(); }

}  // namespace gcw
