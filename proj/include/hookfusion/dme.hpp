#ifndef HOOKFUSION_DME_HPP
#define HOOKFUSION_DME_HPP

#include <string>
#include <vector>

#include "hookfusion/group_algebra.hpp"

namespace hookfusion {

// Ground-truth construction of the diagonal matrix elements F_Lambda,
// independent of the fusion machinery: closed form for the row tableau,
// then the exchange recurrence
//   (1 - d^2) F_{swapped} = (sigma_k - d) F (sigma_k - d),
//   d = 1 / (c_{k+1} - c_k),
// along a chain of standard tableaux.  Everything stays in Q.

// d_k(Lambda); |d| <= 1, with |d| = 1 exactly when the swap leaves the
// standard tableaux (k, k+1 row- or column-adjacent).
inline Rat d_value(const StandardTableau& t, int k) {
  const int diff = t.content_of(k + 1) - t.content_of(k);
  return Rat(1, diff);
}

// F for the row tableau: P Q P / (lambda_1! lambda_2! ...).
inline AlgebraElement<Rat> dme_row(const Partition& shape) {
  const StandardTableau t = row_tableau(shape);
  AlgebraElement<Rat> p = row_symmetrizer<Rat>(t);
  AlgebraElement<Rat> q = column_antisymmetrizer<Rat>(t);
  AlgebraElement<Rat> f = p * q * p;
  Rat denom(1);
  for (int i = 1; i <= shape.rows(); ++i) {
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), shape.part(i));
    denom *= Rat(fac);
  }
  return f / denom;
}

// F for an arbitrary standard tableau, by walking an adjacent-transposition
// chain from the row tableau.  The result does not depend on the chain.
inline AlgebraElement<Rat> dme_any(const StandardTableau& target) {
  StandardTableau cur = row_tableau(target.shape());
  AlgebraElement<Rat> f = dme_row(target.shape());
  for (int k : adjacent_chain(cur, target)) {
    const Rat d = d_value(cur, k);
    const Perm sk = Perm::adjacent(k, cur.n());
    AlgebraElement<Rat> left = f.left_mul(sk) - f * d;
    AlgebraElement<Rat> both = left.right_mul(sk) - left * d;
    f = both / (Rat(1) - d * d);
    cur = cur.apply_swap(k);
  }
  return f;
}

struct EigenReport {
  bool ok = true;
  std::vector<int> failed_k;
  std::string str() const {
    if (ok) return "jm-eigenvalues: ok";
    std::string s = "jm-eigenvalues: failed at k =";
    for (int k : failed_k) s += " " + std::to_string(k);
    return s;
  }
};

// X_k F = F X_k = c_k(Lambda) F for every k.
inline EigenReport check_eigen(const StandardTableau& t) {
  const AlgebraElement<Rat> f = dme_any(t);
  EigenReport rep;
  for (int k = 1; k <= t.n(); ++k) {
    const AlgebraElement<Rat> xk = jm_element<Rat>(k, t.n());
    const AlgebraElement<Rat> want = f * Rat(t.content_of(k));
    if (xk * f != want || f * xk != want) {
      rep.ok = false;
      rep.failed_k.push_back(k);
    }
  }
  return rep;
}

}  // namespace hookfusion

#endif
