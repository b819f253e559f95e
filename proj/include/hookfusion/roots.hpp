#ifndef HOOKFUSION_ROOTS_HPP
#define HOOKFUSION_ROOTS_HPP

#include <map>
#include <string>
#include <vector>

#include "hookfusion/ratfunc.hpp"

namespace hookfusion {

struct RootSplit {
  Rat leading;                 // scalar so that p = leading * prod(x - r_i) * residual
  std::map<Rat, int> roots;    // rational roots with multiplicity
  UniPoly<Rat> residual;       // monic, no rational roots (1 if fully split)
};

namespace detail {

inline std::vector<mpz_class> positive_divisors(const mpz_class& n0) {
  mpz_class n = ::abs(n0);
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  return divs;
}

}  // namespace detail

// Splits off all rational roots of p (rational root theorem on the
// primitive integer image, deflating repeatedly for multiplicities).
inline RootSplit rational_roots(const UniPoly<Rat>& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  RootSplit out;
  out.leading = p.leading();
  UniPoly<Rat> q = p.monic();

  // factor out x^k first
  while (q.degree() >= 1 && q.constant_term().is_zero()) {
    out.roots[Rat(0)] += 1;
    std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
    q = UniPoly<Rat>(std::move(shifted));
  }

  while (q.degree() >= 1) {
    std::vector<mpz_class> z = detail::primitive_z(q);
    const auto p_divs = detail::positive_divisors(z.front());
    const auto q_divs = detail::positive_divisors(z.back());
    bool found = false;
    for (const auto& pd : p_divs) {
      for (const auto& qd : q_divs) {
        for (int s : {1, -1}) {
          Rat cand(mpq_class(s * pd, qd));
          if (!q.eval(cand).is_zero()) continue;
          out.roots[cand] += 1;
          q = q.divmod(UniPoly<Rat>::linear(-cand, Rat(1))).first;
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  out.residual = q;
  return out;
}

namespace detail {

inline std::string linear_factor_str(const Rat& root, const std::string& var) {
  if (root.is_zero()) return "(" + var + ")";
  if (root.sign() > 0) return "(" + var + "-" + root.str() + ")";
  return "(" + var + "+" + (-root).str() + ")";
}

inline std::string factored_poly_str(const RootSplit& split, const std::string& var,
                                     bool with_leading) {
  std::string s;
  if (with_leading && !split.leading.is_one()) s += split.leading.str() + "*";
  // largest root first, matching the usual presentation
  for (auto it = split.roots.rbegin(); it != split.roots.rend(); ++it)
    for (int i = 0; i < it->second; ++i) s += linear_factor_str(it->first, var);
  if (!split.residual.is_one()) s += "(" + split.residual.str({var}) + ")";
  if (s.empty() || (with_leading && s.back() == '*')) s += "1";
  return s;
}

}  // namespace detail

// "(u-4)(u-1)/((u)(u+1))" style display of a rational function, linear
// factors split off by the rational root theorem.
inline std::string factored_str(const RatFunc<Rat>& r, const std::string& var) {
  if (r.is_zero()) return "0";
  RootSplit num = rational_roots(r.num());
  std::string out;
  std::string num_str = detail::factored_poly_str(num, var, /*with_leading=*/false);
  if (!num.leading.is_one()) {
    bool bare = num.roots.empty() && num.residual.is_one();
    out += bare ? num.leading.str() : num.leading.str() + "*";
  }
  if (!(num.roots.empty() && num.residual.is_one())) out += num_str;
  if (out.empty()) out = "1";
  if (!r.is_polynomial()) {
    RootSplit den = rational_roots(r.den());
    out += "/(" + detail::factored_poly_str(den, var, /*with_leading=*/true) + ")";
  }
  return out;
}

}  // namespace hookfusion

#endif
