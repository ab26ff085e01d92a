#include "gcw/linalg.hpp"

#include <algorithm>

#include "gcw/error.hpp"

namespace gcw {

Matrix rref(const FiniteField& f, Matrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    int inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      int factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }
  m.resize(r);
  return m;
}

int rank(const FiniteField& f, const Matrix& m) { return static_cast<int>(rref(f, m).size()); }

Matrix kernel(const FiniteField& f, const Matrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  Matrix r = rref(f, m);
  std::vector<int> pivot_of_col(cols, -1);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t c = 0; c < cols; ++c)
      if (r[i][c] != 0) {
        pivot_of_col[c] = static_cast<int>(i);
        break;
      }
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Row x(cols, 0);
    x[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) x[c] = f.neg(r[pivot_of_col[c]][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), Row(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
    }
  return out;
}

Row vec_mat(const FiniteField& f, const Row& v, const Matrix& m) {
  Row out(m.empty() ? 0 : m[0].size(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[k], m[k][j]));
  }
  return out;
}

int det(const FiniteField& f, Matrix m) {
  const std::size_t n = m.size();
  int d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = f.neg(d);
    }
    d = f.mul(d, m[c][c]);
    int inv = f.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      int factor = f.mul(m[i][c], inv);
      for (std::size_t j = c; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
    }
  }
  return d;
}

Row normalize_projective(const FiniteField& f, Row v) {
  for (int x : v)
    if (x != 0) {
      int inv = f.inv(x);
      for (auto& y : v) y = f.mul(y, inv);
      return v;
    }
  throw PreconditionError("zero vector has no projective point");
}

std::vector<Matrix> enumerate_subspaces(const FiniteField& f, int d, int k) {
  if (k < 0 || k > d) throw UsageError("subspace dimension out of range");
  std::vector<Matrix> out;
  std::vector<int> piv(k);
  // Iterate over pivot sets in lexicographic order.
  std::vector<char> choose(d, 0);
  std::fill(choose.begin(), choose.begin() + k, 1);
  do {
    int j = 0;
    for (int c = 0; c < d; ++c)
      if (choose[c]) piv[j++] = c;
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
      for (int c = piv[i] + 1; c < d; ++c)
        if (!choose[c]) free.emplace_back(i, c);
    std::vector<int> val(free.size(), 0);
    for (;;) {
      Matrix m(k, Row(d, 0));
      for (int i = 0; i < k; ++i) m[i][piv[i]] = 1;
      for (std::size_t t = 0; t < free.size(); ++t) m[free[t].first][free[t].second] = val[t];
      out.push_back(std::move(m));
      std::size_t t = 0;
      while (t < val.size() && ++val[t] == f.q()) val[t++] = 0;
      if (t == val.size()) break;
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t subspace_key(const FiniteField& f, const Matrix& m) {
  std::uint64_t key = 0;
  for (const auto& r : m)
    for (int x : r) key = key * static_cast<std::uint64_t>(f.q()) + static_cast<std::uint64_t>(x);
  return key;
}

}  // namespace gcw
