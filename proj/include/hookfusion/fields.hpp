#ifndef HOOKFUSION_FIELDS_HPP
#define HOOKFUSION_FIELDS_HPP

#include <string>
#include <vector>

#include "hookfusion/rational.hpp"

namespace hookfusion {

// A coefficient field F must be a regular value type with
//   F(), F(long), unary -, + - * /, ==, is_zero(), inverse()
// Rat satisfies this, and RatFunc<F> satisfies it for any such F,
// which is what builds the towers Q(t), Q(u), Q(q), Q(q)(t).

template <class F>
inline F field_zero() { return F(0); }
template <class F>
inline F field_one() { return F(1); }

// Printing/parsing carries one variable name per tower level,
// outermost level first, e.g. {"t", "q"} for Q(q)(t).
using VarNames = std::vector<std::string>;

template <class F>
struct FieldIO;  // specialised for Rat in this header, RatFunc in ratfunc.hpp

template <>
struct FieldIO<Rat> {
  static std::string str(const Rat& x, const VarNames&) { return x.str(); }
  static bool needs_parens(const Rat& x) { return x.sign() < 0 || !x.is_integer(); }
  static Rat parse(const std::string& s, const VarNames&) { return Rat::parse(s); }
};

}  // namespace hookfusion

#endif
