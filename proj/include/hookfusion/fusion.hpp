#ifndef HOOKFUSION_FUSION_HPP
#define HOOKFUSION_FUSION_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hookfusion/dme.hpp"
#include "hookfusion/group_algebra.hpp"

namespace hookfusion {

// Which spectral parameters are identified: entries with equal labels get
// equal z.  Row, column and hook modes label by the entry's row, column
// or principal hook; custom labellings come from connection diagrams.
struct SubspaceSpec {
  enum class Mode { Row, Column, Hook, Custom };
  Mode mode = Mode::Hook;
  std::vector<int> group;  // entry k -> group[k-1]

  static SubspaceSpec rows(const StandardTableau& t) {
    SubspaceSpec s{Mode::Row, {}};
    for (int k = 1; k <= t.n(); ++k) s.group.push_back(t.box_of(k).row);
    return s;
  }
  static SubspaceSpec columns(const StandardTableau& t) {
    SubspaceSpec s{Mode::Column, {}};
    for (int k = 1; k <= t.n(); ++k) s.group.push_back(t.box_of(k).col);
    return s;
  }
  static SubspaceSpec hooks(const StandardTableau& t) {
    return SubspaceSpec{Mode::Hook, principal_hook_labels(t)};
  }
  static SubspaceSpec custom(std::vector<int> labels) {
    return SubspaceSpec{Mode::Custom, std::move(labels)};
  }
  static SubspaceSpec from_mode(const std::string& mode, const StandardTableau& t) {
    if (mode == "row") return rows(t);
    if (mode == "column") return columns(t);
    if (mode == "hook") return hooks(t);
    throw std::invalid_argument("unknown subspace mode: " + mode);
  }
};

inline std::vector<std::pair<int, int>> lex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) pairs.emplace_back(p, q);
  return pairs;
}

// The alternative ordering used to exhibit regularity: for each principal
// hook i of the hook tableau, first the factors led by the column entries
// of the hook (C_i), then the ones led by its row entries (R_i).
inline std::vector<std::pair<int, int>> cr_pairs(const Partition& shape) {
  const StandardTableau t = hook_tableau(shape);
  const Partition conj = shape.conjugate();
  const int n = shape.n();
  std::vector<std::pair<int, int>> pairs;
  auto emit_block = [&](const std::vector<int>& leaders) {
    for (int q = 1; q <= n; ++q)
      for (int u : leaders)
        if (u < q) pairs.emplace_back(u, q);
  };
  for (int h = 1; h <= shape.durfee(); ++h) {
    std::vector<int> col_entries, row_entries;
    for (int i = h; i <= conj.part(h); ++i) col_entries.push_back(t.entry(i, h));
    for (int j = h + 1; j <= shape.part(h); ++j) row_entries.push_back(t.entry(h, j));
    emit_block(col_entries);
    emit_block(row_entries);
  }
  return pairs;
}

// A fully specified fusion product: tableau, factor ordering, parameter
// subspace and the substitution z_i = z_{g(i)}(t), one polynomial curve
// per group with z_g(0) = 0.  The default is the line z_g = s_g * t with
// pairwise distinct s; pole probing additionally uses quadratic curves
// whose s-values collide on a chosen pair of groups.
struct FusionProduct {
  StandardTableau tableau;
  std::vector<std::pair<int, int>> ordering;
  SubspaceSpec subspace;
  std::map<int, UniPoly<Rat>> directions;

  static FusionProduct make(const StandardTableau& t, SubspaceSpec spec) {
    FusionProduct fp{t, lex_pairs(t.n()), spec, {}};
    int next = 1;
    for (int g : spec.group)
      if (!fp.directions.count(g))
        fp.directions[g] = UniPoly<Rat>::linear(Rat(0), Rat(next++));
    return fp;
  }

  void set_direction(int label, const Rat& s) {
    directions.at(label) = UniPoly<Rat>::linear(Rat(0), s);
  }

  // z_p - z_q + c_p - c_q restricted to the curve, as a polynomial in t.
  UniPoly<Rat> pair_denominator(int p, int q) const {
    const UniPoly<Rat>& zp = directions.at(subspace.group[p - 1]);
    const UniPoly<Rat>& zq = directions.at(subspace.group[q - 1]);
    const Rat c_diff(tableau.content_of(p) - tableau.content_of(q));
    return zp - zq + UniPoly<Rat>(c_diff);
  }
};

// 1 - (pq)/(u - v), coefficients in Q(t).
inline AlgebraElement<QT> fusion_factor(int p, int q, const UniPoly<Rat>& u_minus_v, int n) {
  if (u_minus_v.is_zero()) throw HardSingularity(p, q);
  AlgebraElement<QT> f = AlgebraElement<QT>::unit(n);
  f.add_term(Perm::transposition(p, q, n), -QT(UniPoly<Rat>(1), u_minus_v));
  return f;
}

// Ordered product of all fusion factors, coefficients cancelled after
// every step.
inline AlgebraElement<QT> big_f(const FusionProduct& fp) {
  const int n = fp.tableau.n();
  AlgebraElement<QT> acc = AlgebraElement<QT>::unit(n);
  for (auto [p, q] : fp.ordering) {
    UniPoly<Rat> den = fp.pair_denominator(p, q);
    if (den.is_zero()) throw HardSingularity(p, q);
    const QT ginv(UniPoly<Rat>(1), den);
    // acc *= (1 - (pq)/den)
    AlgebraElement<QT> swapped = acc.right_mul(Perm::transposition(p, q, n));
    acc = acc - swapped * ginv;
  }
  return acc;
}

struct PoleDiagnosis {
  Perm perm;
  UniPoly<Rat> denominator;  // cancelled denominator of the offending coefficient
  std::string detail;        // which z-difference was driven to collide, if any
  std::string str() const {
    std::string s = "non-removable singularity at coefficient of " + perm.cycles_str();
    if (!denominator.is_zero()) s += ", denominator " + denominator.str({"t"});
    if (!detail.empty()) s += ", " + detail;
    return s;
  }
};

struct LimitOutcome {
  std::optional<AlgebraElement<Rat>> element;
  std::optional<PoleDiagnosis> pole;
  bool regular() const { return element.has_value(); }
};

inline LimitOutcome evaluate_limit_of(const AlgebraElement<QT>& product) {
  LimitOutcome out;
  AlgebraElement<Rat> value(product.n());
  for (const auto& [p, c] : product.terms()) {
    auto v = c.try_eval_at_zero();
    if (!v) {
      out.pole = PoleDiagnosis{p, c.den()};
      return out;
    }
    value.add_term(p, *v);
  }
  out.element = std::move(value);
  return out;
}

// Value of the fusion product at t = 0.  For valid parameter subspaces
// this is the diagonal matrix element.
inline LimitOutcome evaluate_limit(const FusionProduct& fp) {
  try {
    return evaluate_limit_of(big_f(fp));
  } catch (const HardSingularity& hs) {
    LimitOutcome out;
    out.pole = PoleDiagnosis{Perm::transposition(hs.p, hs.q, fp.tableau.n()),
                             UniPoly<Rat>()};
    return out;
  }
}

// Convenience entry point: fuse a tableau over one of the three named
// subspace modes and return the limit element.
inline AlgebraElement<Rat> fuse(const StandardTableau& t, const std::string& mode) {
  FusionProduct fp = FusionProduct::make(t, SubspaceSpec::from_mode(mode, t));
  LimitOutcome out = evaluate_limit(fp);
  if (!out.regular())
    throw std::runtime_error("unexpected pole in " + mode + "-mode fusion: " +
                             out.pole->str());
  return *out.element;
}

// Parameter-free product for hook shapes: all contents are distinct, so
// every factor is numeric.
inline AlgebraElement<Rat> hook_direct(const StandardTableau& t) {
  if (!t.shape().is_hook())
    throw std::invalid_argument("hook_direct needs a hook shape");
  const int n = t.n();
  AlgebraElement<Rat> acc = AlgebraElement<Rat>::unit(n);
  for (auto [p, q] : lex_pairs(n)) {
    const Rat d(t.content_of(p) - t.content_of(q));
    AlgebraElement<Rat> swapped = acc.right_mul(Perm::transposition(p, q, n));
    acc = acc - swapped * d.inverse();
  }
  return acc;
}

// ---- consistency reports ---------------------------------------------

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

// Yang-Baxter identities for the factors, on explicit rational parameters,
// plus agreement of the lexicographic and the C/R orderings.
inline CheckReport reorder_check(const Partition& shape) {
  CheckReport rep;
  const int n = 4;
  auto factor = [&](int p, int q, const Rat& u, const Rat& v) {
    AlgebraElement<Rat> f = AlgebraElement<Rat>::unit(n);
    f.add_term(Perm::transposition(p, q, n), -(u - v).inverse());
    return f;
  };
  const std::vector<std::array<Rat, 3>> samples = {
      {Rat(1), Rat(3), Rat(9)},
      {Rat(-2), Rat(5), Rat(1, 2)},
      {Rat(7, 3), Rat(-1, 5), Rat(4)},
  };
  for (const auto& [u, v, w] : samples) {
    auto lhs = factor(1, 2, u, v) * factor(1, 3, u, w) * factor(2, 3, v, w);
    auto rhs = factor(2, 3, v, w) * factor(1, 3, u, w) * factor(1, 2, u, v);
    rep.expect(lhs == rhs, "triple identity");
    auto ab = factor(1, 2, u, v) * factor(3, 4, v, w);
    auto ba = factor(3, 4, v, w) * factor(1, 2, u, v);
    rep.expect(ab == ba, "disjoint factors commute");
  }

  const StandardTableau t = hook_tableau(shape);
  FusionProduct lex = FusionProduct::make(t, SubspaceSpec::hooks(t));
  FusionProduct cr = lex;
  cr.ordering = cr_pairs(shape);
  rep.expect(big_f(lex) == big_f(cr), "lex ordering equals C/R ordering");
  return rep;
}

// Sign action on the limit element: sigma_k F = F = F sigma_k when k, k+1
// share a row, and sigma_k F = -F = F sigma_k when they share a column.
inline CheckReport divisibility_report(const StandardTableau& t,
                                       const AlgebraElement<Rat>& f) {
  CheckReport rep;
  for (int k = 1; k < t.n(); ++k) {
    const Perm sk = Perm::adjacent(k, t.n());
    if (t.row_adjacent(k)) {
      rep.expect(f.left_mul(sk) == f, "sigma_" + std::to_string(k) + " F = F");
      rep.expect(f.right_mul(sk) == f, "F sigma_" + std::to_string(k) + " = F");
    } else if (t.column_adjacent(k)) {
      rep.expect(f.left_mul(sk) == -f, "sigma_" + std::to_string(k) + " F = -F");
      rep.expect(f.right_mul(sk) == -f, "F sigma_" + std::to_string(k) + " = -F");
    }
  }
  return rep;
}

}  // namespace hookfusion

#endif
