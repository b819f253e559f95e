#ifndef HOOKFUSION_PERM_HPP
#define HOOKFUSION_PERM_HPP

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hookfusion/error.hpp"

namespace hookfusion {

// Permutation in one-line notation, images 1-based: image(i) is where i
// is sent.  Composition is function application, (a*b)(i) = a(b(i)).
// Inline storage keeps group-algebra maps allocation-free per key.
class Perm {
 public:
  static constexpr int kMaxDegree = 12;

  Perm() : n_(0) { img_.fill(0); }
  explicit Perm(int n) : n_(static_cast<uint8_t>(n)) {
    check_degree(n);
    img_.fill(0);
    for (int i = 1; i <= n; ++i) img_[i - 1] = static_cast<uint8_t>(i);
  }
  explicit Perm(const std::vector<int>& images) {
    check_degree(static_cast<int>(images.size()));
    n_ = static_cast<uint8_t>(images.size());
    img_.fill(0);
    std::array<bool, kMaxDegree + 1> seen{};
    for (int i = 0; i < n_; ++i) {
      int v = images[i];
      if (v < 1 || v > n_ || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = true;
      img_[i] = static_cast<uint8_t>(v);
    }
  }

  static Perm identity(int n) { return Perm(n); }

  static Perm transposition(int p, int q, int n) {
    Perm t(n);
    if (p == q || p < 1 || q < 1 || p > n || q > n)
      throw std::invalid_argument("bad transposition");
    std::swap(t.img_[p - 1], t.img_[q - 1]);
    return t;
  }
  // sigma_k = (k, k+1)
  static Perm adjacent(int k, int n) { return transposition(k, k + 1, n); }

  int n() const { return n_; }
  int image(int i) const { return img_[i - 1]; }
  int operator()(int i) const { return img_[i - 1]; }

  bool is_identity() const {
    for (int i = 1; i <= n_; ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  Perm operator*(const Perm& o) const {
    if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
    Perm r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) r.img_[i] = img_[o.img_[i] - 1];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.n_ = n_;
    for (int i = 1; i <= n_; ++i) r.img_[img_[i - 1] - 1] = static_cast<uint8_t>(i);
    return r;
  }

  int sign() const {
    std::array<bool, kMaxDegree> visited{};
    int s = 1;
    for (int i = 0; i < n_; ++i) {
      if (visited[i]) continue;
      int len = 0, j = i;
      while (!visited[j]) {
        visited[j] = true;
        j = img_[j] - 1;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  // Coxeter length = inversion count.
  int length() const {
    int inv = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (img_[i] > img_[j]) ++inv;
    return inv;
  }

  // One deterministic reduced word (bubble sort by descents).
  std::vector<int> reduced_word() const {
    std::vector<int> img(img_.begin(), img_.begin() + n_);
    std::vector<int> word;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i + 1 < n_; ++i) {
        if (img[i] > img[i + 1]) {
          // multiplying on the right by sigma_{i+1} swaps positions i, i+1
          std::swap(img[i], img[i + 1]);
          word.push_back(i + 1);
          moved = true;
        }
      }
    }
    // word holds sigma_k with target * sigma_{k_m} ... = id, so target =
    // sigma_{k_1} ... in reverse
    std::reverse(word.begin(), word.end());
    return word;
  }

  // Supports shifted up by x inside a larger symmetric group.
  Perm shifted(int x, int new_degree) const {
    if (n_ + x > new_degree) throw std::invalid_argument("shift out of range");
    Perm r(new_degree);
    for (int i = 1; i <= n_; ++i) r.img_[x + i - 1] = static_cast<uint8_t>(img_[i - 1] + x);
    return r;
  }

  std::vector<int> cycle_type_parts() const {
    std::array<bool, kMaxDegree> visited{};
    std::vector<int> lens;
    for (int i = 0; i < n_; ++i) {
      if (visited[i]) continue;
      int len = 0, j = i;
      while (!visited[j]) {
        visited[j] = true;
        j = img_[j] - 1;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
  }

  std::vector<int> one_line() const {
    return std::vector<int>(img_.begin(), img_.begin() + n_);
  }

  // "(1,4,3,6)" style product-of-cycles; identity prints as "()".
  std::string cycles_str() const {
    std::array<bool, kMaxDegree> visited{};
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (visited[i] || img_[i] == i + 1) { visited[i] = true; continue; }
      s += "(";
      int j = i;
      bool first = true;
      while (!visited[j]) {
        visited[j] = true;
        if (!first) s += ",";
        s += std::to_string(j + 1);
        first = false;
        j = img_[j] - 1;
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  static Perm parse_cycles(const std::string& s, int n) {
    Perm r(n);
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && (isspace(static_cast<unsigned char>(s[i])))) ++i; };
    skip();
    while (i < s.size()) {
      if (s[i] != '(') throw std::invalid_argument("expected '(' in cycles");
      ++i;
      std::vector<int> cyc;
      std::string num;
      for (; i < s.size() && s[i] != ')'; ++i) {
        if (isdigit(static_cast<unsigned char>(s[i]))) { num += s[i]; continue; }
        if (s[i] == ',' || s[i] == ' ') {
          if (!num.empty()) { cyc.push_back(std::stoi(num)); num.clear(); }
          continue;
        }
        throw std::invalid_argument("bad cycle notation");
      }
      if (i == s.size()) throw std::invalid_argument("unterminated cycle");
      ++i;  // ')'
      if (!num.empty()) cyc.push_back(std::stoi(num));
      for (size_t k = 0; k < cyc.size(); ++k) {
        int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
        if (from < 1 || from > n) throw std::invalid_argument("cycle entry out of range");
        r.img_[from - 1] = static_cast<uint8_t>(to);
      }
      skip();
    }
    // validate bijectivity
    return Perm(r.one_line());
  }

  bool operator==(const Perm& o) const { return n_ == o.n_ && img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return img_ < o.img_;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < n_; ++i) {
      h ^= img_[i];
      h *= 1099511628211ull;
    }
    return h ^ n_;
  }

 private:
  static void check_degree(int n) {
    if (n < 0 || n > kMaxDegree)
      throw BoundExceeded("permutation degree out of range: " + std::to_string(n));
  }
  uint8_t n_;
  std::array<uint8_t, kMaxDegree> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace hookfusion

#endif
