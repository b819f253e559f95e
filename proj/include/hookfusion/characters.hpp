#ifndef HOOKFUSION_CHARACTERS_HPP
#define HOOKFUSION_CHARACTERS_HPP

#include <map>
#include <vector>

#include "hookfusion/partition.hpp"

namespace hookfusion {

// Horizontal strip: outer/inner differ by at most one box per column.
inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i <= outer.rows(); ++i)
    if (inner.part(i) < outer.part(i + 1)) return false;
  return true;
}

// Kostka number K_{mu,content}: semistandard tableaux of shape mu with
// content[k-1] entries equal to k.  The content may be any composition.
// Counted as chains of horizontal strips.
inline long kostka(const Partition& mu, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("negative content");
    total += c;
  }
  if (total != mu.n()) throw std::invalid_argument("content size mismatch");

  std::map<std::pair<Partition, int>, long> memo;
  auto rec = [&](auto&& self, const Partition& shape, int k) -> long {
    if (k == 0) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int step = content[k - 1];
    long count = 0;
    // enumerate inner shapes obtained by removing a horizontal strip of
    // `step` boxes from `shape`
    std::vector<int> parts = shape.parts();
    auto walk = [&](auto&& go, int row, int remaining) -> void {
      if (row > shape.rows()) {
        if (remaining == 0) {
          std::vector<int> trimmed = parts;
          while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
          Partition inner(trimmed);
          if (is_horizontal_strip(shape, inner)) count += self(self, inner, k - 1);
        }
        return;
      }
      const int orig = shape.part(row);
      const int low = std::max(shape.part(row + 1), orig - remaining);
      for (int newlen = orig; newlen >= low; --newlen) {
        parts[row - 1] = newlen;
        go(go, row + 1, remaining - (orig - newlen));
        parts[row - 1] = orig;
      }
    };
    walk(walk, 1, step);
    memo[key] = count;
    return count;
  };
  return rec(rec, mu, static_cast<int>(content.size()));
}

// Littlewood-Richardson coefficient c^{lam}_{mu,nu}: fillings of lam/mu
// with content nu, rows weakly and columns strictly increasing, whose
// reverse reading word (right to left within a row, rows top to bottom)
// is a lattice word.
inline long lr_coefficient(const Partition& lam, const Partition& mu,
                           const Partition& nu) {
  if (lam.n() != mu.n() + nu.n())
    throw std::invalid_argument("lr_coefficient size mismatch");
  if (!lam.contains(mu)) return 0;
  if (nu.empty()) return 1;

  // boxes in reverse reading order
  std::vector<Box> order;
  for (int i = 1; i <= lam.rows(); ++i)
    for (int j = lam.part(i); j > mu.part(i); --j) order.push_back(Box{i, j});

  const int rows = lam.rows();
  std::vector<std::vector<int>> fill(rows);
  for (int i = 0; i < rows; ++i) fill[i].assign(lam.part(i + 1), 0);
  std::vector<int> remaining;
  for (int i = 1; i <= nu.rows(); ++i) remaining.push_back(nu.part(i));
  std::vector<int> seen(nu.rows(), 0);

  long count = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) { ++count; return; }
    const Box b = order[idx];
    for (int v = 1; v <= nu.rows(); ++v) {
      if (remaining[v - 1] == 0) continue;
      if (v > 1 && seen[v - 2] <= seen[v - 1]) continue;  // lattice word
      // right neighbour (already placed) bounds from above, weakly
      if (b.col < lam.part(b.row) && fill[b.row - 1][b.col] < v) continue;
      // box above (already placed if in the skew part) bounds strictly
      if (b.row > 1 && b.col <= lam.part(b.row - 1) && b.col > mu.part(b.row - 1) &&
          fill[b.row - 2][b.col - 1] >= v)
        continue;
      fill[b.row - 1][b.col - 1] = v;
      --remaining[v - 1];
      ++seen[v - 1];
      self(self, idx + 1);
      fill[b.row - 1][b.col - 1] = 0;
      ++remaining[v - 1];
      --seen[v - 1];
    }
  };
  rec(rec, 0);
  return count;
}

// Multiplicities D_{mu,lambda} of the iterated product of the principal
// hooks of lambda; D_{lambda,lambda} = 1.
inline std::map<Partition, long> hook_product_decomposition(const Partition& lam) {
  HookCoordinates hc = principal_hooks(lam);
  std::map<Partition, long> acc;
  if (hc.d() == 0) return acc;
  acc[hook_shape(hc.alpha[0], hc.beta[0])] = 1;
  for (int h = 2; h <= hc.d(); ++h) {
    const Partition hook = hook_shape(hc.alpha[h - 1], hc.beta[h - 1]);
    std::map<Partition, long> next;
    for (const auto& [mu, mult] : acc) {
      for (const Partition& target : partitions_of(mu.n() + hook.n())) {
        if (!target.contains(mu)) continue;
        long c = lr_coefficient(target, mu, hook);
        if (c > 0) next[target] += mult * c;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Same shape of decomposition, rows instead of hooks: multiplicities are
// the Kostka numbers K_{mu,lambda}.
inline std::map<Partition, long> row_product_decomposition(const Partition& lam) {
  std::map<Partition, long> out;
  for (const Partition& mu : partitions_of(lam.n())) {
    long k = kostka(mu, lam.parts());
    if (k > 0) out[mu] = k;
  }
  return out;
}

// Murnaghan-Nakayama: character of S_n at a given cycle type.  Border
// strips of size k removable from lambda correspond to beta-numbers
// b = lambda_i + L - i with b - k >= 0 and b - k not itself a beta
// number; the strip height is the count of beta numbers strictly
// between b - k and b.
inline long mn_character(const Partition& lam, const Partition& cycle_type) {
  if (lam.n() != cycle_type.n())
    throw std::invalid_argument("character size mismatch");
  std::map<std::pair<Partition, size_t>, long> memo;
  const std::vector<int>& type = cycle_type.parts();
  auto rec = [&](auto&& self, const Partition& shape, size_t ti) -> long {
    if (ti == type.size()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, ti);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int k = type[ti];
    const int L = shape.rows();
    std::vector<int> beta(L);
    for (int i = 1; i <= L; ++i) beta[i - 1] = shape.part(i) + L - i;
    long total = 0;
    for (int i = 0; i < L; ++i) {
      const int b2 = beta[i] - k;
      if (b2 < 0) continue;
      bool clash = false;
      int height = 0;
      for (int j = 0; j < L; ++j) {
        if (j == i) continue;
        if (beta[j] == b2) { clash = true; break; }
        if (beta[j] > b2 && beta[j] < beta[i]) ++height;
      }
      if (clash) continue;
      std::vector<int> nb = beta;
      nb[i] = b2;
      std::sort(nb.begin(), nb.end(), std::greater<int>());
      std::vector<int> parts;
      for (int j = 1; j <= L; ++j) {
        int p = nb[j - 1] - (L - j);
        if (p > 0) parts.push_back(p);
      }
      total += ((height % 2) ? -1 : 1) * self(self, Partition(parts), ti + 1);
    }
    memo[key] = total;
    return total;
  };
  return rec(rec, lam, 0);
}

// |conjugacy class| of the given cycle type in S_n.
inline mpz_class class_size(const Partition& cycle_type) {
  std::map<int, int> mult;
  for (int p : cycle_type.parts()) ++mult[p];
  mpz_class z(1);
  for (auto& [k, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    mpz_class kk(k);
    mpz_pow_ui(kk.get_mpz_t(), kk.get_mpz_t(), m);
    z *= f * kk;
  }
  mpz_class nf;
  mpz_fac_ui(nf.get_mpz_t(), cycle_type.n());
  return nf / z;
}

}  // namespace hookfusion

#endif
