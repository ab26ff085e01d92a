#include "gcw/perm.hpp"

#include <numeric>
#include <sstream>

#include "gcw/error.hpp"

namespace gcw {

Perm::Perm(std::size_t degree) : img_(degree) { std::iota(img_.begin(), img_.end(), Point{0}); }

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x]) throw UsageError("image list is not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw UsageError("bad cycle text: " + std::string(text));
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw UsageError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw UsageError("bad cycle text: " + std::string(text));
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
      if (v >= degree) throw UsageError("cycle point out of range: " + std::string(text));
      if (used[v]) throw UsageError("cycles are not disjoint: " + std::string(text));
      used[v] = 1;
      cyc.push_back(static_cast<Point>(v));
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = img_[y]) {
      seen[y] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t Perm::support_size() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < img_.size(); ++x) n += img_[x] != x;
  return n;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    any = true;
    os << '(';
    bool first = true;
    for (Point y = static_cast<Point>(x); !seen[y]; y = img_[y]) {
      seen[y] = 1;
      os << (first ? "" : " ") << y;
      first = false;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw UsageError("permutation degree mismatch");
  std::vector<Point> img(a.degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = b[a[x]];
  return Perm::unchecked(std::move(img));
}

Perm perm_inverse(const Perm& a) {
  std::vector<Point> img(a.degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[a[x]] = static_cast<Point>(x);
  return Perm::unchecked(std::move(img));
}

Perm perm_conjugate(const Perm& a, const Perm& g) { return perm_inverse(g) * a * g; }

Perm perm_power(const Perm& a, std::int64_t e) {
  Perm base = e < 0 ? perm_inverse(a) : a;
  std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Perm r(a.degree());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace gcw
