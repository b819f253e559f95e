#ifndef HOOKFUSION_PARTITION_HPP
#define HOOKFUSION_PARTITION_HPP

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hookfusion/error.hpp"

namespace hookfusion {

struct Box {
  int row = 0, col = 0;  // 1-based, matrix style
  bool operator==(const Box& o) const { return row == o.row && col == o.col; }
  bool operator!=(const Box& o) const { return !(*this == o); }
  bool operator<(const Box& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
  int content() const { return col - row; }
};

// Integer partition: weakly decreasing positive parts.  Box coordinates
// everywhere are 1-based matrix style: row grows downwards, column grows
// to the right, so the content of box (i,j) is j - i.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

  static Partition parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
  }

  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {  // 1-based, 0 beyond the last row
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool has_box(int i, int j) const { return i >= 1 && j >= 1 && j <= part(i); }

  Partition conjugate() const {
    if (empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
  }

  bool contains(const Partition& inner) const {
    for (int i = 1; i <= inner.rows(); ++i)
      if (inner.part(i) > part(i)) return false;
    return true;
  }

  // Side of the Durfee square = number of principal hooks.
  int durfee() const {
    int d = 0;
    while (part(d + 1) >= d + 1) ++d;
    return d;
  }

  bool is_hook() const { return !empty() && part(2) <= 1; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

 private:
  void validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  std::vector<int> parts_;
};

// Principal-hook coordinates (alpha | beta): alpha_i counts the boxes of
// row i strictly right of the diagonal (arm), beta_i counts the boxes of
// column i from the diagonal downwards (leg INCLUDING the diagonal box).
// The degenerate single-column hook has alpha_i = 0; that is permitted,
// e.g. (1) = (0 | 1).
struct HookCoordinates {
  std::vector<int> alpha;
  std::vector<int> beta;
  int d() const { return static_cast<int>(alpha.size()); }
};

inline HookCoordinates principal_hooks(const Partition& p) {
  HookCoordinates hc;
  const Partition conj = p.conjugate();
  const int d = p.durfee();
  for (int i = 1; i <= d; ++i) {
    hc.alpha.push_back(p.part(i) - i);
    hc.beta.push_back(conj.part(i) - i + 1);
  }
  return hc;
}

// The i-th principal hook as a standalone partition: (a | b) = (a+1, 1^(b-1)).
inline Partition hook_shape(int alpha, int beta) {
  std::vector<int> parts;
  parts.push_back(alpha + 1);
  for (int i = 1; i < beta; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

// Rebuilds the partition whose hook coordinates are (alpha | beta).
inline Partition from_hook_coordinates(const HookCoordinates& hc) {
  const int d = hc.d();
  std::vector<int> rows;
  for (int i = 1; i <= d; ++i) rows.push_back(hc.alpha[i - 1] + i);
  // column lengths determine the rows below the Durfee square
  std::vector<int> cols;
  for (int j = 1; j <= d; ++j) cols.push_back(hc.beta[j - 1] + j - 1);
  const int max_col = cols.empty() ? 0 : *std::max_element(cols.begin(), cols.end());
  for (int i = d + 1; i <= max_col; ++i) {
    int len = 0;
    for (int j = 1; j <= d; ++j)
      if (cols[j - 1] >= i) len = j;
    rows.push_back(len);
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

inline int hook_length(const Partition& p, int i, int j) {
  const Partition conj = p.conjugate();
  return (p.part(i) - j) + (conj.part(j) - i) + 1;
}

// Number of standard tableaux, by the hook length formula.
inline mpz_class f_lambda_big(const Partition& p) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), p.n());
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.part(i); ++j) num /= hook_length(p, i, j);
  return num;
}

inline long f_lambda(const Partition& p) { return f_lambda_big(p).get_si(); }

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int max_part) -> void {
    if (rem == 0) { out.emplace_back(cur); return; }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// lambda + mu, componentwise row sums.
inline Partition row_sum(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  for (int i = 1; i <= std::max(a.rows(), b.rows()); ++i)
    parts.push_back(a.part(i) + b.part(i));
  return Partition(std::move(parts));
}

}  // namespace hookfusion

#endif
