#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gcw {

// GF(p^d) with elements indexed 0..q-1. The index of an element is the
// integer whose base-p digits are the coefficients of its polynomial
// representative (digit i = coefficient of x^i). 0 and 1 are the field's 0 and 1.
class FiniteField {
 public:
  FiniteField() = default;

  static FiniteField make(int p, int d);

  int p() const { return p_; }
  int d() const { return d_; }
  int q() const { return q_; }

  // Monic defining polynomial, coefficients low to high (size d+1).
  const std::vector<int>& polynomial() const { return poly_; }
  // Multiplicative generator used for the log/exp tables.
  int generator() const { return gen_; }

  int add(int a, int b) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, std::uint64_t e) const;
  // a^(p^k)
  int frobenius(int a, int k) const;
  int log(int a) const;

  std::vector<int> digits(int a) const;
  int from_digits(const std::vector<int>& digits) const;

  std::string describe() const;

  bool operator==(const FiniteField& o) const { return q_ == o.q_ && poly_ == o.poly_; }
  bool operator!=(const FiniteField& o) const { return !(*this == o); }

 private:
  int p_ = 0, d_ = 0, q_ = 0, gen_ = 0;
  std::vector<int> poly_;
  std::vector<int> exp_, log_, neg_;
  std::vector<std::uint16_t> add_;  // full table when q <= 256
};

bool is_prime(std::uint64_t n);

// Returns (p, d) with q = p^d, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(std::uint64_t q);

}  // namespace gcw
