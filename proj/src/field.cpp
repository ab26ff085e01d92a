#include "gcw/field.hpp"

#include <map>
#include <sstream>

#include "gcw/error.hpp"

namespace gcw {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::pair<int, int> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  int d = 0;
  while (q % p == 0) {
    q /= p;
    ++d;
  }
  if (q != 1) return {0, 0};
  return {static_cast<int>(p), d};
}

namespace {

// Fixed defining polynomials for q <= 32 (low to high). x is primitive for each.
const std::map<std::pair<int, int>, std::vector<int>>& fixed_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> t = {
      {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
  };
  return t;
}

// Multiply the digit vector a (degree < d) by x modulo the monic polynomial.
void times_x(std::vector<int>& a, const std::vector<int>& poly, int p) {
  const int d = static_cast<int>(a.size());
  int top = a[d - 1];
  for (int i = d - 1; i > 0; --i) a[i] = a[i - 1];
  a[0] = 0;
  if (top != 0)
    for (int i = 0; i < d; ++i) a[i] = ((a[i] - top * poly[i]) % p + p) % p;
}

// Fills exp/log by powers of x; returns false if x is not primitive.
bool build_tables(int p, int d, const std::vector<int>& poly, std::vector<int>& exp,
                  std::vector<int>& log) {
  int q = 1;
  for (int i = 0; i < d; ++i) q *= p;
  exp.assign(2 * (q - 1), 0);
  log.assign(q, -1);
  std::vector<int> cur(d, 0);
  cur[0] = 1;
  for (int k = 0; k < q - 1; ++k) {
    int idx = 0;
    for (int i = d - 1; i >= 0; --i) idx = idx * p + cur[i];
    if (log[idx] != -1) return false;
    log[idx] = k;
    exp[k] = idx;
    times_x(cur, poly, p);
  }
  for (int k = q - 1; k < 2 * (q - 1); ++k) exp[k] = exp[k - (q - 1)];
  return true;
}

}  // namespace

FiniteField FiniteField::make(int p, int d) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw UsageError("field characteristic must be prime");
  if (d < 1) throw UsageError("field degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < d; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1u << 16)) throw UsageError("field order exceeds 2^16");
  }
  FiniteField f;
  f.p_ = p;
  f.d_ = d;
  f.q_ = static_cast<int>(q);
  if (d == 1) {
    // Prime field: index = residue; generator = least primitive root.
    f.poly_ = {0, 1};
    for (int g = 1; g < p || p == 2; ++g) {
      std::vector<int> seen(p, 0);
      int x = 1, k = 0;
      bool ok = true;
      f.exp_.assign(2 * (p - 1), 0);
      f.log_.assign(p, -1);
      for (; k < p - 1; ++k) {
        if (seen[x]) {
          ok = false;
          break;
        }
        seen[x] = 1;
        f.exp_[k] = x;
        f.log_[x] = k;
        x = x * g % p;
      }
      if (ok) {
        f.gen_ = g;
        break;
      }
      if (p == 2) break;
    }
    for (int k = p - 1; k < 2 * (p - 1); ++k) f.exp_[k] = f.exp_[k - (p - 1)];
  } else {
    auto it = fixed_table().find({p, d});
    if (it != fixed_table().end()) {
      f.poly_ = it->second;
      if (!build_tables(p, d, f.poly_, f.exp_, f.log_))
        throw ImplementationContradiction("fixed field polynomial is not primitive");
    } else {
      // Least monic primitive polynomial in base-p order of (c_0..c_{d-1}).
      std::vector<int> poly(d + 1, 0);
      poly[d] = 1;
      bool found = false;
      for (std::uint64_t code = 1; code < q && !found; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < d; ++i) {
          poly[i] = static_cast<int>(c % p);
          c /= p;
        }
        if (poly[0] == 0) continue;
        if (build_tables(p, d, poly, f.exp_, f.log_)) found = true;
      }
      if (!found) throw ImplementationContradiction("no primitive polynomial found");
      f.poly_ = poly;
    }
    f.gen_ = f.exp_[1];
  }
  f.neg_.resize(f.q_);
  for (int a = 0; a < f.q_; ++a) {
    auto dg = f.digits(a);
    for (auto& x : dg) x = (p - x) % p;
    f.neg_[a] = f.from_digits(dg);
  }
  if (f.q_ <= 256) {
    f.add_.resize(static_cast<std::size_t>(f.q_) * f.q_);
    for (int a = 0; a < f.q_; ++a)
      for (int b = 0; b < f.q_; ++b) {
        int r = 0, mul = 1, x = a, y = b;
        for (int i = 0; i < d; ++i) {
          r += ((x % p + y % p) % p) * mul;
          x /= p;
          y /= p;
          mul *= p;
        }
        f.add_[static_cast<std::size_t>(a) * f.q_ + b] = static_cast<std::uint16_t>(r);
      }
  }
  return f;
}

int FiniteField::add(int a, int b) const {
  if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
  int r = 0, mul = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((a % p_ + b % p_) % p_) * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return r;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FiniteField::pow(int a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

int FiniteField::frobenius(int a, int k) const {
  std::uint64_t e = 1;
  for (int i = 0; i < ((k % d_) + d_) % d_; ++i) e *= static_cast<std::uint64_t>(p_);
  return pow(a, e);
}

int FiniteField::log(int a) const {
  if (a == 0) throw PreconditionError("log of zero");
  return log_[a];
}

std::vector<int> FiniteField::digits(int a) const {
  std::vector<int> r(d_);
  for (int i = 0; i < d_; ++i) {
    r[i] = a % p_;
    a /= p_;
  }
  return r;
}

int FiniteField::from_digits(const std::vector<int>& dg) const {
  int r = 0;
  for (int i = d_ - 1; i >= 0; --i) r = r * p_ + dg[i];
  return r;
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ") poly=[";
  for (std::size_t i = 0; i < poly_.size(); ++i) os << (i ? "," : "") << poly_[i];
  os << "]";
  return os.str();
}

}  // namespace gcw
