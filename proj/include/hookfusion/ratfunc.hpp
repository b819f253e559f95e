#ifndef HOOKFUSION_RATFUNC_HPP
#define HOOKFUSION_RATFUNC_HPP

#include <optional>
#include <string>
#include <utility>

#include "hookfusion/polynomial.hpp"

namespace hookfusion {

// Cancelled rational function num/den over a field F.  Canonical form:
// gcd(num, den) = 1 and den monic; the zero function is 0/1.  Equality of
// canonical forms is plain component equality and agrees with equality as
// functions.  RatFunc<F> is itself a field, so towers like Q(q)(t) are
// RatFunc<RatFunc<Rat>>.
template <class F>
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long n) : num_(n), den_(1) {}  // NOLINT
  explicit RatFunc(F scalar) : num_(std::move(scalar)), den_(1) {}
  explicit RatFunc(UniPoly<F> p) : num_(std::move(p)), den_(1) {}
  RatFunc(UniPoly<F> num, UniPoly<F> den) { assign(std::move(num), std::move(den)); }

  static RatFunc variable() { return RatFunc(UniPoly<F>::variable()); }

  const UniPoly<F>& num() const { return num_; }
  const UniPoly<F>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const { return RatFunc(unchecked{}, -num_, den_); }
  RatFunc operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // a/b + c/d = (a*(d/g) + c*(b/g)) / (b/g * d), g = gcd(b, d).
    // Denominators in a running product share most factors, so cancelling
    // g first keeps the intermediate degrees down.
    UniPoly<F> g = poly_gcd(den_, o.den_);
    UniPoly<F> b1 = den_.divmod(g).first;
    UniPoly<F> d1 = o.den_.divmod(g).first;
    return RatFunc(num_ * d1 + o.num_ * b1, b1 * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    UniPoly<F> g1 = poly_gcd(num_, o.den_);
    UniPoly<F> g2 = poly_gcd(o.num_, den_);
    UniPoly<F> n1 = num_.divmod(g1).first;
    UniPoly<F> d2 = o.den_.divmod(g1).first;
    UniPoly<F> n2 = o.num_.divmod(g2).first;
    UniPoly<F> d1 = den_.divmod(g2).first;
    return RatFunc(unchecked{}, n1 * n2, normalise_monic(d1 * d2));
  }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inverse();
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
  }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Cross-multiplication equality; must agree with canonical equality.
  bool equals_as_function(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
  }

  std::optional<F> try_eval(const F& x) const {
    F d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) * d.inverse();
  }
  std::optional<F> try_eval_at_zero() const {
    F d = den_.eval_at_zero();
    if (d.is_zero()) return std::nullopt;
    return num_.eval_at_zero() * d.inverse();
  }
  // Value at 0 of the cancelled form; a vanishing denominator here is a
  // genuine pole, not a removable one.
  F eval_at_zero() const {
    auto v = try_eval_at_zero();
    if (!v) throw PoleError("zero");
    return *v;
  }
  F eval(const F& x) const {
    auto v = try_eval(x);
    if (!v) throw PoleError("point");
    return *v;
  }

  // f(-x)
  RatFunc negate_variable() const {
    return RatFunc(num_.negate_variable(), den_.negate_variable());
  }

  std::string str(const VarNames& vars) const {
    if (is_polynomial()) return num_.str(vars);
    return "(" + num_.str(vars) + ")/(" + den_.str(vars) + ")";
  }

  static RatFunc parse(const std::string& s, const VarNames& vars) {
    // top-level "(num)/(den)", otherwise a plain polynomial
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && s[i] == '/' && i > 0 && s[i - 1] == ')') {
        UniPoly<F> n = UniPoly<F>::parse(detail::strip_outer_parens(s.substr(0, i)), vars);
        UniPoly<F> d = UniPoly<F>::parse(detail::strip_outer_parens(s.substr(i + 1)), vars);
        return RatFunc(n, d);
      }
    }
    return RatFunc(UniPoly<F>::parse(s, vars));
  }

 private:
  struct unchecked {};
  RatFunc(unchecked, UniPoly<F> n, UniPoly<F> d)
      : num_(std::move(n)), den_(std::move(d)) {}

  static UniPoly<F> normalise_monic(UniPoly<F> d) { return d.monic(); }

  void assign(UniPoly<F> n, UniPoly<F> d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) { num_ = UniPoly<F>(); den_ = UniPoly<F>(1); return; }
    UniPoly<F> g = poly_gcd(n, d);
    if (!g.is_one()) {
      n = n.divmod(g).first;
      d = d.divmod(g).first;
    }
    F lead_inv = d.leading().inverse();
    num_ = n * lead_inv;
    den_ = d * lead_inv;
  }

  UniPoly<F> num_;
  UniPoly<F> den_;
};

template <class F>
struct FieldIO<RatFunc<F>> {
  static std::string str(const RatFunc<F>& x, const VarNames& vars) {
    return x.str(vars);
  }
  static bool needs_parens(const RatFunc<F>& x) {
    if (!x.is_polynomial()) return true;
    if (x.num().degree() > 0) return true;
    if (x.num().is_zero()) return false;
    return FieldIO<F>::needs_parens(x.num().constant_term());
  }
  static RatFunc<F> parse(const std::string& s, const VarNames& vars) {
    return RatFunc<F>::parse(s, vars);
  }
};

// Convenient aliases for the towers used throughout.
using QT = RatFunc<Rat>;            // Q(t), Q(u) or Q(q) depending on context
using QQ_T = RatFunc<RatFunc<Rat>>; // Q(q)(t): outer variable t, inner q

// ratfunc_normalize: canonical form of a raw num/den pair.
template <class F>
RatFunc<F> ratfunc_normalize(const UniPoly<F>& num, const UniPoly<F>& den) {
  return RatFunc<F>(num, den);
}

}  // namespace hookfusion

#endif
