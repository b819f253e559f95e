#ifndef HOOKFUSION_POLYNOMIAL_HPP
#define HOOKFUSION_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hookfusion/error.hpp"
#include "hookfusion/fields.hpp"

namespace hookfusion {

// Dense univariate polynomial over a field F, coefficients lowest degree
// first.  Invariant: the coefficient sequence is empty (zero polynomial)
// or its last entry is nonzero.
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long n) { if (n != 0) c_ = {F(n)}; }  // NOLINT
  explicit UniPoly(F scalar) { if (!scalar.is_zero()) c_ = {std::move(scalar)}; }
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly variable() { return UniPoly(std::vector<F>{F(0), F(1)}); }
  // a + b*x
  static UniPoly linear(F a, F b) { return UniPoly(std::vector<F>{std::move(a), std::move(b)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : F(0);
  }
  const F& leading() const { return c_.back(); }
  F constant_term() const { return c_.empty() ? F(0) : c_[0]; }

  UniPoly operator-() const {
    std::vector<F> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    UniPoly out; out.c_ = std::move(r); return out;
  }
  UniPoly operator+(const UniPoly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), F(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<F> r(c_.size() + o.c_.size() - 1, F(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly operator*(const F& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<F> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UniPoly(std::move(r));
  }
  UniPoly operator/(const F& s) const { return *this * s.inverse(); }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  // Multiply by x^k.
  UniPoly shifted(int k) const {
    if (is_zero()) return UniPoly();
    std::vector<F> r(c_.size() + k, F(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UniPoly(std::move(r));
  }

  UniPoly monic() const {
    if (is_zero()) return UniPoly();
    return *this * leading().inverse();
  }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  F eval_at_zero() const { return constant_term(); }

  // p(-x)
  UniPoly negate_variable() const {
    std::vector<F> r = c_;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return UniPoly(std::move(r));
  }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    UniPoly rem = *this;
    if (rem.degree() < d.degree()) return {UniPoly(), rem};
    std::vector<F> q(rem.degree() - d.degree() + 1, F(0));
    const F inv_lead = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      const int k = rem.degree() - d.degree();
      const F factor = rem.leading() * inv_lead;
      q[k] = factor;
      // rem -= factor * x^k * d, done in place
      for (int i = 0; i <= d.degree(); ++i)
        rem.c_[i + k] -= factor * d.c_[i];
      rem.trim();
    }
    return {UniPoly(std::move(q)), rem};
  }

  bool divides(const UniPoly& other) const {
    return other.divmod(*this).second.is_zero();
  }

  std::string str(const VarNames& vars) const;
  static UniPoly parse(const std::string& s, const VarNames& vars);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

// ---- gcd ----------------------------------------------------------------

// Generic Euclid with monic normalisation per step.  gcd(a, 0) = monic(a).
template <class F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    UniPoly<F> r = a.divmod(b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a;
}

namespace detail {

// Integer image of a rational polynomial: primitive, positive leading
// coefficient.  Euclid over Q explodes coefficient sizes; the Q-gcd below
// runs a primitive pseudo-remainder sequence over Z instead.
inline std::vector<mpz_class> primitive_z(const UniPoly<Rat>& p) {
  mpz_class l(1);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
  mpz_class g(0);
  for (const auto& x : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 0)
    for (auto& x : z) x /= g;
  if (!z.empty() && sgn(z.back()) < 0)
    for (auto& x : z) x = -x;
  return z;
}

inline void trim_z(std::vector<mpz_class>& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline void make_primitive(std::vector<mpz_class>& a) {
  mpz_class g(0);
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : a) x /= g;
  if (!a.empty() && sgn(a.back()) < 0)
    for (auto& x : a) x = -x;
}

// Pseudo-remainder of a by b (deg a >= deg b > 0 not required; handles all).
inline std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a,
                                         const std::vector<mpz_class>& b) {
  trim_z(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int k = static_cast<int>(a.size()) - 1 - db;
    const mpz_class lead_a = a.back();
    const mpz_class& lead_b = b.back();
    for (auto& x : a) x *= lead_b;
    for (int i = 0; i <= db; ++i) a[i + k] -= lead_a * b[i];
    trim_z(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace detail

// Q-specialisation: primitive PRS over Z, result monic over Q.
inline UniPoly<Rat> poly_gcd(const UniPoly<Rat>& pa, const UniPoly<Rat>& pb) {
  if (pa.is_zero()) return pb.monic();
  if (pb.is_zero()) return pa.monic();
  std::vector<mpz_class> a = detail::primitive_z(pa);
  std::vector<mpz_class> b = detail::primitive_z(pb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<mpz_class> r = detail::pseudo_rem(a, b);
    detail::make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rat> out;
  out.reserve(a.size());
  for (const auto& x : a) out.emplace_back(mpq_class(x, a.back()));
  return UniPoly<Rat>(std::move(out));
}

// Scalar content of a rational polynomial (gcd of coefficients), >= 0.
inline Rat poly_content(const UniPoly<Rat>& p) {
  Rat g(0);
  for (const auto& c : p.coeffs()) g = rat_gcd(g, c);
  return g;
}

// ---- printing / parsing --------------------------------------------------

namespace detail {

template <class F>
std::string coeff_str_for_term(const F& c, const VarNames& vars) {
  std::string s = FieldIO<F>::str(c, VarNames(vars.begin() + 1, vars.end()));
  if (FieldIO<F>::needs_parens(c)) s = "(" + s + ")";
  return s;
}

}  // namespace detail

template <class F>
std::string UniPoly<F>::str(const VarNames& vars) const {
  if (is_zero()) return "0";
  const std::string& x = vars.at(0);
  const VarNames inner(vars.begin() + 1, vars.end());
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    F c = c_[k];
    if (c.is_zero()) continue;
    // pull an explicit sign out when that frees the coefficient of parens
    bool negative = false;
    if (FieldIO<F>::needs_parens(c) && !FieldIO<F>::needs_parens(-c)) {
      negative = true;
      c = -c;
    }
    std::string term;
    if (k == 0) {
      std::string cs = FieldIO<F>::str(c, inner);
      term = FieldIO<F>::needs_parens(c) ? "(" + cs + ")" : cs;
    } else {
      std::string xs = (k == 1) ? x : x + "^" + std::to_string(k);
      if (c == F(1)) term = xs;
      else term = detail::coeff_str_for_term(c, vars) + "*" + xs;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// Splits "a + b - c" at top parenthesis level into signed chunks.
inline std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0, sign = 1;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      bool at_start = cur.find_first_not_of(" \t") == std::string::npos;
      // exponent signs like ^-1 never occur in canonical form
      if (!at_start) {
        terms.emplace_back(sign, cur);
        cur.clear();
        sign = (ch == '+') ? 1 : -1;
        continue;
      }
      if (ch == '-') sign = -sign;
      if (ch == '+') { /* leading plus, ignore */ }
      continue;
    }
    cur += ch;
  }
  if (cur.find_first_not_of(" \t") != std::string::npos) terms.emplace_back(sign, cur);
  return terms;
}

inline std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> factors;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && ch == '*') {
      factors.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  factors.push_back(cur);
  return factors;
}

inline std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

inline std::string strip_outer_parens(std::string s) {
  s = strip(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool outer = true;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) { outer = false; break; }
    }
    if (!outer) break;
    s = strip(s.substr(1, s.size() - 2));
  }
  return s;
}

}  // namespace detail

template <class F>
UniPoly<F> UniPoly<F>::parse(const std::string& s, const VarNames& vars) {
  const std::string& x = vars.at(0);
  const VarNames inner(vars.begin() + 1, vars.end());
  UniPoly<F> out;
  for (auto& [sign, chunk] : detail::split_terms(s)) {
    int power = 0;
    F coeff(1);
    bool have_coeff = false;
    for (auto& raw : detail::split_factors(chunk)) {
      std::string f = detail::strip(raw);
      if (f.empty()) throw std::invalid_argument("empty factor in: " + s);
      // variable factor?
      if (f.compare(0, x.size(), x) == 0 &&
          (f.size() == x.size() || f[x.size()] == '^')) {
        if (f.size() == x.size()) power += 1;
        else power += std::stoi(f.substr(x.size() + 1));
        continue;
      }
      F c = FieldIO<F>::parse(detail::strip_outer_parens(f), inner);
      coeff = have_coeff ? coeff * c : c;
      have_coeff = true;
    }
    if (sign < 0) coeff = -coeff;
    out += UniPoly<F>(coeff).shifted(power);
  }
  return out;
}

}  // namespace hookfusion

#endif
