#ifndef HOOKFUSION_RATIONAL_HPP
#define HOOKFUSION_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hookfusion/error.hpp"

namespace hookfusion {

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0.  Plain value type around mpq_class; all operators return
// materialised values so the type behaves in generic template code
// (gmpxx expression templates never escape).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}                 // NOLINT: implicit integer embedding
  Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw DivisionByZero();
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& n) : v_(n) {}

  static Rat parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return Rat(q);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rat(mpq_class(1 / v_));
  }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  // "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rat rat_gcd(const Rat& a, const Rat& b) {
  // gcd of numerators over lcm of denominators; used to pull scalar
  // content out of polynomials.
  mpz_class g, l;
  mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  if (sgn(l) == 0) return Rat(0);
  return Rat(mpq_class(g, l));
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace hookfusion

#include <ostream>
namespace hookfusion {
inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}
}  // namespace hookfusion

#endif
