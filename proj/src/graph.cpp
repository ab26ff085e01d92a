#include "gcw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "gcw/error.hpp"

namespace gcw {

namespace {

std::vector<std::int64_t> parse_ints(std::string_view s) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] >= '0' && s[i] <= '9') {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
      if (ec != std::errc()) throw UsageError("bad integer in label");
      out.push_back(v);
      i = static_cast<std::size_t>(p - s.data());
    } else if (s[i] == ',' || s[i] == ' ' || s[i] == '{' || s[i] == '}' || s[i] == '(' ||
               s[i] == ')' || s[i] == '\t') {
      ++i;
    } else {
      throw UsageError("unexpected character in label: " + std::string(s));
    }
  }
  return out;
}

char digit_char(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

Vertex Graph::parse_label(std::string_view s) const {
  auto v = parse_ints(s);
  if (v.size() != 1) throw UsageError("expected a vertex id: " + std::string(s));
  check_vertex(static_cast<Vertex>(v[0]));
  return static_cast<Vertex>(v[0]);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw UsageError("vertex id out of range");
}

// ------------------------------------------------------------------ Hamming

HammingGraph::HammingGraph(int n, int q) : n_(n), q_(q), weight_(n) {
  if (n < 1 || q < 2) throw UsageError("Hamming graph needs n >= 1, q >= 2");
  Vertex w = 1;
  for (int i = n - 1; i >= 0; --i) {
    weight_[i] = w;
    if (i > 0 && w > (Vertex{1} << 62) / static_cast<Vertex>(q)) throw UsageError("Hamming graph too large");
    w *= static_cast<Vertex>(q);
  }
  size_ = w;
}

std::string HammingGraph::spec() const {
  return "hamming:n=" + std::to_string(n_) + ",q=" + std::to_string(q_);
}

void HammingGraph::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  out.reserve(static_cast<std::size_t>(n_) * (q_ - 1));
  if (q_ == 2) {
    for (int i = 0; i < n_; ++i) out.push_back(v ^ weight_[i]);
    return;
  }
  for (int i = 0; i < n_; ++i) {
    const Vertex w = weight_[i];
    const int d = digit(v, i);
    const Vertex base = v - static_cast<Vertex>(d) * w;
    for (int b = 0; b < q_; ++b)
      if (b != d) out.push_back(base + static_cast<Vertex>(b) * w);
  }
}

std::optional<int> HammingGraph::formula_distance(Vertex u, Vertex v) const {
  if (q_ == 2) return __builtin_popcountll(u ^ v);
  int d = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    d += (u % q_) != (v % q_);
    u /= q_;
    v /= q_;
  }
  return d;
}

int HammingGraph::weight_of(Vertex v) const { return *formula_distance(v, 0); }

std::vector<int> HammingGraph::digits(Vertex v) const {
  std::vector<int> d(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    d[i] = static_cast<int>(v % q_);
    v /= q_;
  }
  return d;
}

Vertex HammingGraph::from_digits(const std::vector<int>& d) const {
  if (static_cast<int>(d.size()) != n_) throw UsageError("tuple length mismatch");
  Vertex v = 0;
  for (int x : d) {
    if (x < 0 || x >= q_) throw UsageError("tuple entry out of range");
    v = v * static_cast<Vertex>(q_) + static_cast<Vertex>(x);
  }
  return v;
}

std::string HammingGraph::label(Vertex v) const {
  auto d = digits(v);
  std::string s;
  if (q_ <= 36) {
    for (int x : d) s.push_back(digit_char(x));
  } else {
    for (int i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(d[i]);
  }
  return s;
}

Vertex HammingGraph::parse_label(std::string_view s) const {
  std::vector<int> d;
  if (s.find(',') != std::string_view::npos || q_ > 36) {
    for (auto x : parse_ints(s)) d.push_back(static_cast<int>(x));
  } else {
    for (char c : s) {
      if (c == ' ' || c == '(' || c == ')') continue;
      int x = char_digit(c);
      if (x < 0) throw UsageError("bad Hamming label: " + std::string(s));
      d.push_back(x);
    }
  }
  return from_digits(d);
}

// ------------------------------------------------------------------ subsets

SubsetCodec::SubsetCodec(int v, int k) : v_(v), k_(k) {
  if (v < 1 || v > 63 || k < 0 || k > v) throw UsageError("subset codec parameters out of range");
  binom_.assign(v + 1, std::vector<Vertex>(k + 2, 0));
  for (int n = 0; n <= v; ++n) {
    binom_[n][0] = 1;
    for (int r = 1; r <= std::min(n, k + 1); ++r)
      binom_[n][r] = binom_[n - 1][r - 1] + (r <= n - 1 ? binom_[n - 1][r] : 0);
  }
  count_ = binom_[v][k];
}

Vertex SubsetCodec::rank(const std::vector<int>& s) const {
  if (static_cast<int>(s.size()) != k_) throw UsageError("subset has the wrong size");
  Vertex r = 0;
  for (int i = 0; i < k_; ++i) {
    if (s[i] < 0 || s[i] >= v_ || (i && s[i] <= s[i - 1])) throw UsageError("subset not strictly increasing");
    r += binom_[s[i]][i + 1];
  }
  return r;
}

std::vector<int> SubsetCodec::unrank(Vertex r) const {
  std::vector<int> s(k_);
  int x = v_ - 1;
  for (int i = k_; i >= 1; --i) {
    while (binom_[x][i] > r) --x;
    s[i - 1] = x;
    r -= binom_[x][i];
    --x;
  }
  return s;
}

std::uint64_t SubsetCodec::mask(Vertex r) const {
  std::uint64_t m = 0;
  for (int x : unrank(r)) m |= std::uint64_t{1} << x;
  return m;
}

Vertex SubsetCodec::rank_mask(std::uint64_t m) const {
  Vertex r = 0;
  int i = 1;
  while (m) {
    int x = __builtin_ctzll(m);
    r += binom_[x][i++];
    m &= m - 1;
  }
  return r;
}

std::string SubsetGraph::label(Vertex v) const {
  auto s = codec_.unrank(v);
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

Vertex SubsetGraph::parse_label(std::string_view s) const {
  std::vector<int> x;
  for (auto y : parse_ints(s)) x.push_back(static_cast<int>(y));
  std::sort(x.begin(), x.end());
  return codec_.rank(x);
}

JohnsonGraph::JohnsonGraph(int v, int k) : SubsetGraph(v, k) {
  if (k < 1 || k > v - 1) throw UsageError("Johnson graph needs 1 <= k <= v-1");
}

std::string JohnsonGraph::spec() const {
  return "johnson:v=" + std::to_string(v()) + ",k=" + std::to_string(k());
}

void JohnsonGraph::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  const std::uint64_t m = codec_.mask(v);
  for (int a = 0; a < this->v(); ++a) {
    if (!(m >> a & 1)) continue;
    for (int b = 0; b < this->v(); ++b) {
      if (m >> b & 1) continue;
      out.push_back(codec_.rank_mask((m & ~(std::uint64_t{1} << a)) | (std::uint64_t{1} << b)));
    }
  }
}

std::optional<int> JohnsonGraph::formula_distance(Vertex u, Vertex v) const {
  return k() - __builtin_popcountll(codec_.mask(u) & codec_.mask(v));
}

KneserGraph::KneserGraph(int v, int k) : SubsetGraph(v, k) {
  if (k < 1 || 2 * k + 1 > v) throw UsageError("Kneser graph needs 1 <= k <= (v-1)/2");
}

std::string KneserGraph::spec() const {
  return "kneser:v=" + std::to_string(v()) + ",k=" + std::to_string(k());
}

void KneserGraph::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  const std::uint64_t comp = ~codec_.mask(v) & ((std::uint64_t{1} << this->v()) - 1);
  std::vector<int> pts;
  for (int x = 0; x < this->v(); ++x)
    if (comp >> x & 1) pts.push_back(x);
  // k-subsets of the complement via an index odometer.
  const int k = this->k();
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(pts.size());
  for (;;) {
    std::uint64_t m = 0;
    for (int i : idx) m |= std::uint64_t{1} << pts[i];
    out.push_back(codec_.rank_mask(m));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// ------------------------------------------------------------------ cycle

CycleGraph::CycleGraph(int m) : m_(m) {
  if (m < 3) throw UsageError("cycle needs m >= 3");
}

std::string CycleGraph::spec() const { return "cycle:m=" + std::to_string(m_); }

void CycleGraph::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  const Vertex m = static_cast<Vertex>(m_);
  out.push_back((v + 1) % m);
  out.push_back((v + m - 1) % m);
}

std::optional<int> CycleGraph::formula_distance(Vertex u, Vertex v) const {
  int d = static_cast<int>(u > v ? u - v : v - u);
  return std::min(d, m_ - d);
}

// ------------------------------------------------------------------ forms

FormsGraph::FormsGraph(int m, int n, int q) : m_(m), n_(n) {
  auto [p, d] = prime_power(static_cast<std::uint64_t>(q));
  if (!p) throw UsageError("forms graph needs a prime power q");
  if (m < 1 || n < 1) throw UsageError("forms graph needs m, n >= 1");
  f_ = FiniteField::make(p, d);
  size_ = 1;
  for (int i = 0; i < m * n; ++i) {
    size_ *= static_cast<Vertex>(q);
    if (size_ > (Vertex{1} << 24)) throw BudgetExceeded("forms graph restricted to q^(mn) <= 2^24");
  }
  // u normalized (first nonzero = 1) times any nonzero v.
  std::vector<Row> us, vs;
  auto all_vectors = [&](int len) {
    std::vector<Row> out;
    Row x(len, 0);
    for (;;) {
      int i = len - 1;
      while (i >= 0 && ++x[i] == q) x[i--] = 0;
      if (i < 0) break;
      out.push_back(x);
    }
    return out;
  };
  for (auto& u : all_vectors(m))
    if (normalize_projective(f_, u) == u) us.push_back(u);
  vs = all_vectors(n);
  for (const auto& u : us)
    for (const auto& v : vs) {
      Matrix a(m, Row(n, 0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = f_.mul(u[i], v[j]);
      rank_one_.push_back(from_matrix(a));
    }
  std::sort(rank_one_.begin(), rank_one_.end());
}

std::string FormsGraph::spec() const {
  return "forms:m=" + std::to_string(m_) + ",n=" + std::to_string(n_) + ",q=" + std::to_string(f_.q());
}

Matrix FormsGraph::matrix(Vertex v) const {
  Matrix a(m_, Row(n_, 0));
  const int q = f_.q();
  for (int i = m_ - 1; i >= 0; --i)
    for (int j = n_ - 1; j >= 0; --j) {
      a[i][j] = static_cast<int>(v % q);
      v /= q;
    }
  return a;
}

Vertex FormsGraph::from_matrix(const Matrix& a) const {
  Vertex v = 0;
  for (const auto& r : a)
    for (int x : r) v = v * static_cast<Vertex>(f_.q()) + static_cast<Vertex>(x);
  return v;
}

void FormsGraph::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  Matrix a = matrix(v);
  for (Vertex r : rank_one_) {
    Matrix b = matrix(r);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) b[i][j] = f_.add(b[i][j], a[i][j]);
    out.push_back(from_matrix(b));
  }
}

std::optional<int> FormsGraph::formula_distance(Vertex u, Vertex v) const {
  Matrix a = matrix(u), b = matrix(v);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) a[i][j] = f_.sub(a[i][j], b[i][j]);
  return rank(f_, a);
}

std::string FormsGraph::label(Vertex v) const {
  Matrix a = matrix(v);
  std::string s;
  for (int i = 0; i < m_; ++i) {
    if (i) s.push_back('/');
    for (int j = 0; j < n_; ++j) {
      if (f_.q() <= 36) {
        s.push_back(digit_char(a[i][j]));
      } else {
        s += (j ? "," : "") + std::to_string(a[i][j]);
      }
    }
  }
  return s;
}

Vertex FormsGraph::parse_label(std::string_view s) const {
  Matrix a(m_, Row(n_, 0));
  std::vector<int> d;
  for (char c : s) {
    if (c == '/' || c == ' ') continue;
    int x = char_digit(c);
    if (x < 0 || x >= f_.q()) throw UsageError("bad matrix label: " + std::string(s));
    d.push_back(x);
  }
  if (static_cast<int>(d.size()) != m_ * n_) throw UsageError("matrix label has wrong size");
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) a[i][j] = d[i * n_ + j];
  return from_matrix(a);
}

// ------------------------------------------------------------------ explicit

ExplicitGraph::ExplicitGraph(std::string family, std::string spec,
                             std::vector<std::vector<std::uint32_t>> adj, std::vector<std::string> labels)
    : family_(std::move(family)), spec_(std::move(spec)), adj_(std::move(adj)), labels_(std::move(labels)) {
  for (auto& l : adj_) std::sort(l.begin(), l.end());
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (std::size_t i = 0; i < adj_[u].size(); ++i) {
      std::uint32_t v = adj_[u][i];
      if (v >= adj_.size() || v == u || (i && adj_[u][i - 1] == v))
        throw UsageError("adjacency must be irreflexive and duplicate-free");
      if (!std::binary_search(adj_[v].begin(), adj_[v].end(), static_cast<std::uint32_t>(u)))
        throw UsageError("adjacency must be symmetric");
    }
  if (!labels_.empty() && labels_.size() != adj_.size()) throw UsageError("label count mismatch");
}

void ExplicitGraph::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.assign(adj_[v].begin(), adj_[v].end());
}

bool ExplicitGraph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), static_cast<std::uint32_t>(v));
}

std::string ExplicitGraph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Vertex ExplicitGraph::parse_label(std::string_view s) const {
  if (!labels_.empty()) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == s) return i;
  }
  return Graph::parse_label(s);
}

std::shared_ptr<const ExplicitGraph> grassmann_graph(int d, int k, int q) {
  auto [p, e] = prime_power(static_cast<std::uint64_t>(q));
  if (!p) throw UsageError("Grassmann graph needs a prime power q");
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) {
    qd *= static_cast<std::uint64_t>(q);
    if (qd > (1u << 24)) throw BudgetExceeded("Grassmann graph restricted to q^d <= 2^24");
  }
  auto f = FiniteField::make(p, e);
  auto subs = enumerate_subspaces(f, d, k);
  if (subs.size() > 20000) throw BudgetExceeded("Grassmann graph too large to materialize");
  std::vector<std::vector<std::uint32_t>> adj(subs.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    std::string l;
    for (const auto& r : subs[i]) {
      if (!l.empty()) l.push_back('/');
      for (int x : r) l.push_back(digit_char(x));
    }
    labels.push_back(l);
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      Matrix m = subs[i];
      m.insert(m.end(), subs[j].begin(), subs[j].end());
      if (rank(f, m) == k + 1) {
        adj[i].push_back(static_cast<std::uint32_t>(j));
        adj[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  std::string spec = "grassmann:d=" + std::to_string(d) + ",k=" + std::to_string(k) + ",q=" + std::to_string(q);
  return std::make_shared<ExplicitGraph>("grassmann", spec, std::move(adj), std::move(labels));
}

}  // namespace gcw
