#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gcw {

using Point = std::uint32_t;

// Bijection of {0..degree-1} stored as images. Products act left to right:
// x^(a*b) = (x^a)^b.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);  // throws unless a bijection

  static Perm identity(std::size_t degree) { return Perm(degree); }
  // Caller guarantees `images` is a bijection.
  static Perm unchecked(std::vector<Point> images) {
    Perm p;
    p.img_ = std::move(images);
    return p;
  }
  // Disjoint-cycle text such as "(0 1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  std::uint64_t order() const;
  std::size_t support_size() const;
  std::string cycles() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<Point> img_;
};

Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
inline Perm operator*(const Perm& a, const Perm& b) { return perm_compose(a, b); }
// g^-1 a g
Perm perm_conjugate(const Perm& a, const Perm& g);
Perm perm_power(const Perm& a, std::int64_t e);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace gcw
