#include <algorithm>
#include <numeric>

#include "gcw/constructions.hpp"
#include "gcw/error.hpp"

namespace gcw {

namespace {

FiniteField field_for(int q) {
  auto [p, d] = prime_power(static_cast<std::uint64_t>(q));
  if (p == 0) throw UsageError("q must be a prime power");
  return FiniteField::make(p, d);
}

// Exponent vectors with entries <= q-1 accepted by `keep`, in lexicographic order.
template <class Keep>
std::vector<std::vector<int>> monomials(int q, int t, Keep keep) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(t, 0);
  while (true) {
    if (keep(std::accumulate(e.begin(), e.end(), 0))) out.push_back(e);
    int j = 0;
    while (j < t && ++e[j] == q) e[j++] = 0;
    if (j == t) break;
  }
  return out;
}

int evaluate(const FiniteField& f, const std::vector<int>& exps, const Row& point) {
  int v = 1;
  for (std::size_t j = 0; j < exps.size(); ++j) v = f.mul(v, f.pow(point[j], exps[j]));
  return v;
}

Code span_or_zero(const FiniteField& f, int n, const Matrix& g, std::string name) {
  bool any = false;
  for (const Row& r : g)
    any = any || std::any_of(r.begin(), r.end(), [](int x) { return x != 0; });
  if (!any) return Code(std::make_shared<HammingGraph>(n, f.q()), {0}, LinearDescriptor{f, {}}, std::move(name));
  return linear_code(f, g, std::move(name));
}

}  // namespace

Code grm(int q, int k, int t) {
  FiniteField f = field_for(q);
  if (t < 1 || k < 0 || k > t * (q - 1)) throw UsageError("grm needs t >= 1 and 0 <= k <= t(q-1)");
  std::uint64_t n = 1;
  for (int j = 0; j < t; ++j) n *= static_cast<std::uint64_t>(q);
  if (n > 4096) throw BudgetExceeded("grm length limited to 4096");
  std::vector<Row> points;
  for (std::uint64_t i = 0; i < n; ++i) {
    Row p(t);
    std::uint64_t x = i;
    for (int j = 0; j < t; ++j, x /= q) p[j] = static_cast<int>(x % q);
    points.push_back(p);
  }
  Matrix g;
  for (const auto& e : monomials(q, t, [&](int total) { return total <= k; })) {
    Row r;
    for (const Row& p : points) r.push_back(evaluate(f, e, p));
    g.push_back(r);
  }
  return span_or_zero(f, static_cast<int>(n), g,
                      "grm(" + std::to_string(q) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
}

std::vector<Row> prm_points(const FiniteField& f, int t) {
  std::vector<Row> out;
  Row v(t, 0);
  while (true) {
    auto nz = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (nz != v.end() && *nz == 1) out.push_back(v);
    int j = t - 1;
    while (j >= 0 && ++v[j] == f.q()) v[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

Code prm(int q, int k, int t) {
  FiniteField f = field_for(q);
  if (t < 1 || k < 0 || k > t * (q - 1)) throw UsageError("prm needs t >= 1 and 0 <= k <= t(q-1)");
  const auto points = prm_points(f, t);
  if (points.size() > 4096) throw BudgetExceeded("prm length limited to 4096");
  const int m = q - 1;
  Matrix g;
  for (const auto& e : monomials(q, t, [&](int total) { return total > 0 && total <= k && (total - k) % m == 0; })) {
    Row r;
    for (const Row& p : points) r.push_back(evaluate(f, e, p));
    g.push_back(r);
  }
  return span_or_zero(f, static_cast<int>(points.size()), g,
                      "prm(" + std::to_string(q) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
}

Code gabidulin(int q, int n, int k, int s) {
  if (!is_prime(static_cast<std::uint64_t>(q))) throw UsageError("gabidulin supports prime q only");
  if (n < 2 || k < 1 || k > n - 1) throw UsageError("gabidulin needs 1 <= k <= n-1");
  if (s < 1 || std::gcd(n, s) != 1) throw UsageError("gabidulin needs gcd(n,s) = 1");
  double verts = std::pow(static_cast<double>(q), n * n);
  if (verts > double(1 << 24)) throw BudgetExceeded("gabidulin host limited to q^(n^2) <= 2^24");
  FiniteField big = FiniteField::make(q, n);
  FiniteField small = FiniteField::make(q, 1);
  auto host = std::make_shared<FormsGraph>(n, n, q);
  const int Q = big.q();
  // Frobenius images x^(q^(s i)) of the basis elements x^j.
  std::vector<std::vector<int>> frob(k, std::vector<int>(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      int basis = static_cast<int>(std::pow(q, j));
      frob[i][j] = big.frobenius(basis, (s * i) % n);
    }
  std::vector<Vertex> ids;
  std::vector<int> coef(k, 0);
  int min_rank = n;
  while (true) {
    Matrix m(n);
    for (int j = 0; j < n; ++j) {
      int val = 0;
      for (int i = 0; i < k; ++i) val = big.add(val, big.mul(coef[i], frob[i][j]));
      m[j] = big.digits(val);
      m[j].resize(n, 0);
    }
    Vertex v = host->from_matrix(m);
    ids.push_back(v);
    if (v != 0) min_rank = std::min(min_rank, rank(small, m));
    int i = 0;
    while (i < k && ++coef[i] == Q) coef[i++] = 0;
    if (i == k) break;
  }
  if (min_rank != n - k + 1)
    throw ImplementationContradiction("gabidulin code has minimum rank " + std::to_string(min_rank));
  return Code(host, std::move(ids), std::nullopt,
              "gabidulin(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(k) + "," +
                  std::to_string(s) + ")");
}

}  // namespace gcw
