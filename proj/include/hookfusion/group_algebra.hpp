#ifndef HOOKFUSION_GROUP_ALGEBRA_HPP
#define HOOKFUSION_GROUP_ALGEBRA_HPP

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <vector>

#include "hookfusion/characters.hpp"
#include "hookfusion/perm.hpp"
#include "hookfusion/rational.hpp"
#include "hookfusion/ratfunc.hpp"
#include "hookfusion/tableau.hpp"

namespace hookfusion {

// Sparse element of the group algebra of S_n over a field F.  Zero
// coefficients are never stored.
template <class F>
class AlgebraElement {
 public:
  using Terms = std::unordered_map<Perm, F, PermHash>;

  AlgebraElement() : n_(0) {}
  explicit AlgebraElement(int n) : n_(n) {}
  AlgebraElement(int n, Terms terms) : n_(n), terms_(std::move(terms)) {
    prune();
  }

  static AlgebraElement unit(int n) {
    AlgebraElement e(n);
    e.terms_.emplace(Perm::identity(n), F(1));
    return e;
  }
  static AlgebraElement monomial(const Perm& p, F c) {
    AlgebraElement e(p.n());
    if (!c.is_zero()) e.terms_.emplace(p, std::move(c));
    return e;
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  F coeff(const Perm& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? F(0) : it->second;
  }
  F identity_coeff() const { return coeff(Perm::identity(n_)); }

  void add_term(const Perm& p, const F& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    check(o);
    AlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    check(o);
    AlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
  }
  AlgebraElement operator-() const {
    AlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
  }
  AlgebraElement operator*(const F& s) const {
    AlgebraElement r(n_);
    if (s.is_zero()) return r;
    for (const auto& [p, c] : terms_) {
      F v = c * s;
      if (!v.is_zero()) r.terms_.emplace(p, std::move(v));
    }
    return r;
  }
  AlgebraElement operator/(const F& s) const { return *this * s.inverse(); }

  // Bilinear convolution product.
  AlgebraElement operator*(const AlgebraElement& o) const {
    check(o);
    AlgebraElement r(n_);
    for (const auto& [pa, ca] : terms_)
      for (const auto& [pb, cb] : o.terms_) r.add_term(pa * pb, ca * cb);
    return r;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  bool operator==(const AlgebraElement& o) const {
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    for (const auto& [p, c] : terms_) {
      auto it = o.terms_.find(p);
      if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // Left/right multiplication by a single permutation, cheaper than the
  // generic product.
  AlgebraElement left_mul(const Perm& g) const {
    AlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(g * p, c);
    return r;
  }
  AlgebraElement right_mul(const Perm& g) const {
    AlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p * g, c);
    return r;
  }

  // Involutive antiautomorphism sigma -> sigma^{-1}.
  AlgebraElement phi() const {
    AlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p.inverse(), c);
    return r;
  }

  // Coefficientwise map into another field.
  template <class G>
  AlgebraElement<G> map_coeffs(const std::function<G(const F&)>& f) const {
    AlgebraElement<G> r(n_);
    for (const auto& [p, c] : terms_) r.add_term(p, f(c));
    return r;
  }

  std::vector<Perm> support_sorted() const {
    std::vector<Perm> s;
    s.reserve(terms_.size());
    for (const auto& [p, c] : terms_) s.push_back(p);
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  void check(const AlgebraElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("group algebra degree mismatch");
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  int n_;
  Terms terms_;
};

// ---- constructions -------------------------------------------------------

// Jucys-Murphy element X_k = (1 k) + (2 k) + ... + (k-1 k); X_1 = 0.
template <class F = Rat>
AlgebraElement<F> jm_element(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("jm_element index out of range");
  AlgebraElement<F> x(n);
  for (int j = 1; j < k; ++j) x.add_term(Perm::transposition(j, k, n), F(1));
  return x;
}

namespace detail {

// All permutations of S_n fixing everything outside the given blocks and
// permuting each block within itself, i.e. the Young subgroup of `blocks`.
inline std::vector<Perm> young_subgroup(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<Perm> result{Perm::identity(n)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> arrangement = sorted;
    std::vector<Perm> block_perms;
    do {
      std::vector<int> img(n);
      for (int i = 1; i <= n; ++i) img[i - 1] = i;
      for (size_t i = 0; i < sorted.size(); ++i) img[sorted[i] - 1] = arrangement[i];
      block_perms.emplace_back(img);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    std::vector<Perm> next;
    next.reserve(result.size() * block_perms.size());
    for (const auto& a : result)
      for (const auto& b : block_perms) next.push_back(a * b);
    result = std::move(next);
  }
  return result;
}

inline std::vector<std::vector<int>> row_blocks(const StandardTableau& t) {
  return t.rows();
}
inline std::vector<std::vector<int>> column_blocks(const StandardTableau& t) {
  std::vector<std::vector<int>> cols(t.shape().conjugate().rows());
  for (int i = 1; i <= t.shape().rows(); ++i)
    for (int j = 1; j <= t.shape().part(i); ++j) cols[j - 1].push_back(t.entry(i, j));
  return cols;
}

}  // namespace detail

// Row symmetrizer P = sum over the row group.
template <class F = Rat>
AlgebraElement<F> row_symmetrizer(const StandardTableau& t) {
  AlgebraElement<F> e(t.n());
  for (const auto& p : detail::young_subgroup(detail::row_blocks(t), t.n()))
    e.add_term(p, F(1));
  return e;
}

// Column antisymmetrizer Q = signed sum over the column group.
template <class F = Rat>
AlgebraElement<F> column_antisymmetrizer(const StandardTableau& t) {
  AlgebraElement<F> e(t.n());
  for (const auto& p : detail::young_subgroup(detail::column_blocks(t), t.n()))
    e.add_term(p, F(p.sign()));
  return e;
}

// Young symmetrizer Y = P * Q.
template <class F = Rat>
AlgebraElement<F> young_symmetrizer(const StandardTableau& t) {
  return row_symmetrizer<F>(t) * column_antisymmetrizer<F>(t);
}

// (pq) -> (p+x, q+x) embedding into a larger group algebra.
template <class F>
AlgebraElement<F> embed_shift(const AlgebraElement<F>& a, int x, int new_degree) {
  AlgebraElement<F> r(new_degree);
  for (const auto& [p, c] : a.terms()) r.add_term(p.shifted(x, new_degree), c);
  return r;
}

// Primitive central idempotent Z_nu = (dim V_nu / n!) sum_sigma chi(sigma) sigma.
inline AlgebraElement<Rat> central_idempotent(const Partition& nu, int bound = 8) {
  const int n = nu.n();
  if (n > bound)
    throw BoundExceeded("central idempotent bound exceeded: n = " + std::to_string(n));
  // character values per cycle type
  std::map<std::vector<int>, long> chi;
  for (const Partition& type : partitions_of(n))
    chi[type.parts()] = mn_character(nu, type);
  mpz_class nfact;
  mpz_fac_ui(nfact.get_mpz_t(), n);
  const Rat scale(mpq_class(f_lambda_big(nu), nfact));
  AlgebraElement<Rat> z(n);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  do {
    Perm p(img);
    long x = chi.at(p.cycle_type_parts());
    if (x != 0) z.add_term(p, scale * Rat(x));
  } while (std::next_permutation(img.begin(), img.end()));
  return z;
}

}  // namespace hookfusion

#endif
