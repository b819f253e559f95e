#ifndef HOOKFUSION_TABLEAU_HPP
#define HOOKFUSION_TABLEAU_HPP

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hookfusion/partition.hpp"

namespace hookfusion {

// Standard tableau: rows and columns strictly increase, entries 1..n.
class StandardTableau {
 public:
  StandardTableau() = default;
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    index_boxes();
    if (!is_standard())
      throw std::invalid_argument("filling is not a standard tableau");
  }

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int entry(int i, int j) const { return rows_[i - 1][j - 1]; }
  int entry(const Box& b) const { return entry(b.row, b.col); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Box box_of(int k) const { return box_of_[k - 1]; }

  // c_k = column - row of the box holding k; c_1 = 0 always.
  int content_of(int k) const { return box_of(k).content(); }
  std::vector<int> contents() const {
    std::vector<int> c(n());
    for (int k = 1; k <= n(); ++k) c[k - 1] = content_of(k);
    return c;
  }

  // Exchanging k and k+1 never leaves them on one diagonal, so this is
  // well defined; the result may be non-standard.
  std::vector<std::vector<int>> swapped_rows(int k) const {
    std::vector<std::vector<int>> r = rows_;
    Box a = box_of(k), b = box_of(k + 1);
    r[a.row - 1][a.col - 1] = k + 1;
    r[b.row - 1][b.col - 1] = k;
    return r;
  }
  bool swap_keeps_standard(int k) const {
    Box a = box_of(k), b = box_of(k + 1);
    // nonstandard exactly when k, k+1 are row- or column-adjacent
    return !(a.row == b.row && b.col == a.col + 1) &&
           !(a.col == b.col && b.row == a.row + 1);
  }
  StandardTableau apply_swap(int k) const {
    return StandardTableau(shape_, swapped_rows(k));
  }

  bool row_adjacent(int k) const {
    Box a = box_of(k), b = box_of(k + 1);
    return a.row == b.row && b.col == a.col + 1;
  }
  bool column_adjacent(int k) const {
    Box a = box_of(k), b = box_of(k + 1);
    return a.col == b.col && b.row == a.row + 1;
  }

  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }
  bool operator!=(const StandardTableau& o) const { return rows_ != o.rows_; }
  bool operator<(const StandardTableau& o) const { return rows_ < o.rows_; }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += ",";
      s += "[";
      for (size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) s += ",";
        s += std::to_string(rows_[i][j]);
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  bool is_standard() const {
    const int N = n();
    std::vector<bool> seen(N + 1, false);
    for (int i = 1; i <= shape_.rows(); ++i)
      for (int j = 1; j <= shape_.part(i); ++j) {
        int e = entry(i, j);
        if (e < 1 || e > N || seen[e]) return false;
        seen[e] = true;
        if (j > 1 && entry(i, j - 1) >= e) return false;
        if (i > 1 && shape_.part(i - 1) >= j && entry(i - 1, j) >= e) return false;
      }
    return true;
  }
  void index_boxes() {
    box_of_.assign(n(), Box{});
    for (int i = 1; i <= shape_.rows(); ++i)
      for (int j = 1; j <= shape_.part(i); ++j)
        box_of_[entry(i, j) - 1] = Box{i, j};
  }

  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Box> box_of_;
};

// Row tableau: 1..lambda_1 across the first row, then the second row, etc.
inline StandardTableau row_tableau(const Partition& p) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int i = 1; i <= p.rows(); ++i) {
    std::vector<int> r;
    for (int j = 1; j <= p.part(i); ++j) r.push_back(next++);
    rows.push_back(std::move(r));
  }
  return StandardTableau(p, std::move(rows));
}

// Column tableau: fills columns consecutively instead.
inline StandardTableau column_tableau(const Partition& p) {
  std::vector<std::vector<int>> rows(p.rows());
  for (int i = 1; i <= p.rows(); ++i) rows[i - 1].resize(p.part(i));
  int next = 1;
  const Partition conj = p.conjugate();
  for (int j = 1; j <= conj.rows(); ++j)
    for (int i = 1; i <= conj.part(j); ++i) rows[i - 1][j - 1] = next++;
  return StandardTableau(p, std::move(rows));
}

// Hook tableau: per principal hook, first down the column, then along the
// row.  For (3,3,2) this is [[1,4,5],[2,6,8],[3,7]].
inline StandardTableau hook_tableau(const Partition& p) {
  std::vector<std::vector<int>> rows(p.rows());
  for (int i = 1; i <= p.rows(); ++i) rows[i - 1].resize(p.part(i));
  const Partition conj = p.conjugate();
  int next = 1;
  for (int h = 1; h <= p.durfee(); ++h) {
    for (int i = h; i <= conj.part(h); ++i) rows[i - 1][h - 1] = next++;
    for (int j = h + 1; j <= p.part(h); ++j) rows[h - 1][j - 1] = next++;
  }
  return StandardTableau(p, std::move(rows));
}

// Index of the principal hook each entry lives in (1-based labels).
inline std::vector<int> principal_hook_labels(const StandardTableau& t) {
  std::vector<int> lab(t.n());
  for (int k = 1; k <= t.n(); ++k) {
    Box b = t.box_of(k);
    lab[k - 1] = std::min(b.row, b.col);
  }
  return lab;
}

// Complete enumeration, deterministic order: recursively strip the box
// holding n from each removable corner.
inline std::vector<StandardTableau> all_standard_tableaux(const Partition& p,
                                                          int bound = 10) {
  if (p.n() > bound)
    throw BoundExceeded("tableau enumeration bound exceeded: n = " +
                        std::to_string(p.n()) + " > " + std::to_string(bound));
  std::map<Partition, std::vector<std::vector<std::vector<int>>>> memo;
  auto rec = [&](auto&& self, const Partition& shape)
      -> const std::vector<std::vector<std::vector<int>>>& {
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<std::vector<int>>> fills;
    const int N = shape.n();
    if (N == 0) {
      fills.push_back({});
    } else {
      for (int i = 1; i <= shape.rows(); ++i) {
        if (shape.part(i + 1) == shape.part(i)) continue;  // not a corner
        std::vector<int> parts = shape.parts();
        parts[i - 1] -= 1;
        if (parts[i - 1] == 0) parts.pop_back();
        Partition smaller(parts);
        for (const auto& sub : self(self, smaller)) {
          auto fill = sub;
          if (static_cast<int>(fill.size()) < i) fill.emplace_back();
          fill[i - 1].push_back(N);
          fills.push_back(std::move(fill));
        }
      }
    }
    return memo.emplace(shape, std::move(fills)).first->second;
  };
  std::vector<StandardTableau> out;
  for (const auto& fill : rec(rec, p)) out.emplace_back(p, fill);
  return out;
}

// Shortest chain of adjacent-transposition indices k_1, k_2, ... whose
// left-to-right application maps `from` to `to` through standard tableaux
// only.  BFS with lowest index first, so the output is deterministic.
inline std::vector<int> adjacent_chain(const StandardTableau& from,
                                       const StandardTableau& to) {
  if (from.shape() != to.shape())
    throw std::invalid_argument("adjacent_chain requires equal shapes");
  if (from == to) return {};
  std::map<StandardTableau, std::pair<StandardTableau, int>> parent;
  std::deque<StandardTableau> queue{from};
  parent.emplace(from, std::make_pair(from, 0));
  while (!queue.empty()) {
    StandardTableau cur = queue.front();
    queue.pop_front();
    for (int k = 1; k < cur.n(); ++k) {
      if (!cur.swap_keeps_standard(k)) continue;
      StandardTableau next = cur.apply_swap(k);
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, k));
      if (next == to) {
        std::vector<int> chain;
        StandardTableau walk = next;
        while (walk != from) {
          auto& [prev, kk] = parent.at(walk);
          chain.push_back(kk);
          walk = prev;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      queue.push_back(next);
    }
  }
  throw std::logic_error("standard tableau exchange graph is connected");
}

}  // namespace hookfusion

#endif
