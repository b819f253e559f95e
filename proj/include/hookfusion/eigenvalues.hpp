#ifndef HOOKFUSION_EIGENVALUES_HPP
#define HOOKFUSION_EIGENVALUES_HPP

#include <set>
#include <string>
#include <vector>

#include "hookfusion/dme.hpp"
#include "hookfusion/fusion.hpp"
#include "hookfusion/roots.hpp"

namespace hookfusion {

// Eigenvalue of the exchange operator on a multiplicity-one constituent,
// a rational function of u = z - w.
struct EigenvalueResult {
  QT r;
  std::string factored(const std::string& var = "u") const {
    return factored_str(r, var);
  }
  std::vector<Rat> num_roots() const { return roots_of(r.num()); }
  std::vector<Rat> den_roots() const { return roots_of(r.den()); }

 private:
  static std::vector<Rat> roots_of(const UniPoly<Rat>& p) {
    std::vector<Rat> out;
    if (p.is_zero()) return out;
    for (const auto& [root, mult] : rational_roots(p).roots)
      for (int i = 0; i < mult; ++i) out.push_back(root);
    return out;
  }
};

// The exchange operator as an explicit group-algebra element over
// S_{n+m}: for i ascending, j descending, factors
//   1 - (i, n+j) / (u + c_i(Lambda) - c_j(M)).
inline AlgebraElement<QT> r_operator(const StandardTableau& lam_tab,
                                     const StandardTableau& mu_tab,
                                     int bound = 8) {
  const int n = lam_tab.n(), m = mu_tab.n();
  if (n + m > bound)
    throw BoundExceeded("r_operator degree " + std::to_string(n + m) +
                        " exceeds bound " + std::to_string(bound));
  const int N = n + m;
  AlgebraElement<QT> acc = AlgebraElement<QT>::unit(N);
  for (int i = 1; i <= n; ++i)
    for (int j = m; j >= 1; --j) {
      UniPoly<Rat> den = UniPoly<Rat>::linear(
          Rat(lam_tab.content_of(i) - mu_tab.content_of(j)), Rat(1));
      const QT ginv(UniPoly<Rat>(1), den);
      acc = acc - acc.right_mul(Perm::transposition(i, n + j, N)) * ginv;
    }
  return acc;
}

namespace detail {

// v * (1 - t/den) in one pass; t is a transposition.
template <class F>
AlgebraElement<F> apply_exchange_factor(const AlgebraElement<F>& v, const Perm& t,
                                        const F& inv_den) {
  AlgebraElement<F> out(v.n());
  for (const auto& [p, c] : v.terms()) {
    out.add_term(p, c);
    out.add_term(p * t, -(c * inv_den));
  }
  return out;
}

}  // namespace detail

// Eigenvalue r^nu_{lambda,mu}(u) by the operator method: act with the
// exchange operator on the test vector v = Z_nu F_Lambda embed(F_M) and
// read off the proportionality factor, asserting it on every coefficient.
inline EigenvalueResult extract_eigenvalue(const Partition& lam, const Partition& mu,
                                           const Partition& nu, int bound = 8) {
  const int n = lam.n(), m = mu.n(), N = nu.n();
  if (N != n + m) throw std::invalid_argument("sizes of lambda, mu, nu inconsistent");
  if (N > bound)
    throw BoundExceeded("extract_eigenvalue degree " + std::to_string(N) +
                        " exceeds bound " + std::to_string(bound));
  if (n == 0 || m == 0) return EigenvalueResult{QT(1)};
  if (lr_coefficient(nu, lam, mu) != 1)
    throw std::invalid_argument("constituent " + nu.str() +
                                " does not have multiplicity one");

  const StandardTableau lam_tab = column_tableau(lam);
  const StandardTableau mu_tab = column_tableau(mu);
  AlgebraElement<Rat> pair =
      embed_shift(dme_any(lam_tab), 0, N) * embed_shift(dme_any(mu_tab), n, N);
  AlgebraElement<Rat> test_vector = central_idempotent(nu, bound) * pair;
  if (test_vector.is_zero())
    throw std::logic_error("test vector vanished for " + nu.str());

  AlgebraElement<QT> v = test_vector.map_coeffs<QT>([](const Rat& c) { return QT(UniPoly<Rat>(c)); });
  for (int i = 1; i <= n; ++i)
    for (int j = m; j >= 1; --j) {
      UniPoly<Rat> den = UniPoly<Rat>::linear(
          Rat(lam_tab.content_of(i) - mu_tab.content_of(j)), Rat(1));
      v = detail::apply_exchange_factor(v, Perm::transposition(i, n + j, N),
                                        QT(UniPoly<Rat>(1), den));
    }

  // read the ratio off one coefficient, then check it on all of them
  const std::vector<Perm> support = test_vector.support_sorted();
  const QT ratio = v.coeff(support.front()) / QT(UniPoly<Rat>(test_vector.coeff(support.front())));
  for (const Perm& p : support)
    if (v.coeff(p) != ratio * QT(UniPoly<Rat>(test_vector.coeff(p))))
      throw std::logic_error("exchange operator did not act as a scalar");
  if (v.size() != test_vector.size())
    throw std::logic_error("exchange operator did not preserve the support");
  return EigenvalueResult{ratio};
}

// ---- closed-form mixed hook eigenvalues -----------------------------------

// nu built from mu either by adding the rows of lambda to pairwise
// distinct rows of mu, or the columns of lambda to pairwise distinct
// columns of mu.
struct MixedHookSpec {
  enum class Kind { RowAdd, ColumnAdd };
  Kind kind;
  Partition added;        // lambda
  Partition base;         // mu
  std::vector<int> seq;   // a_1..a_{lambda'_1} or b_1..b_{lambda_1}

  Partition outcome() const {
    const Partition& lam = added;
    const Partition& mu = base;
    if (kind == Kind::RowAdd) {
      const int rows = lam.conjugate().part(1);
      if (static_cast<int>(seq.size()) != rows)
        throw std::invalid_argument("row-add sequence length mismatch");
      return build(mu, lam, seq);
    }
    const int cols = lam.part(1);
    if (static_cast<int>(seq.size()) != cols)
      throw std::invalid_argument("column-add sequence length mismatch");
    return build(mu.conjugate(), lam.conjugate(), seq).conjugate();
  }

 private:
  static Partition build(const Partition& base, const Partition& added,
                         const std::vector<int>& seq) {
    std::map<int, int> bump;
    for (size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] < 1) throw std::invalid_argument("sequence entries are positive");
      if (bump.count(seq[i]))
        throw std::invalid_argument("sequence entries must be pairwise distinct");
      bump[seq[i]] = added.part(static_cast<int>(i) + 1);
    }
    int len = base.rows();
    for (auto& [at, by] : bump) len = std::max(len, at);
    std::vector<int> parts;
    for (int i = 1; i <= len; ++i) {
      int p = base.part(i) + (bump.count(i) ? bump[i] : 0);
      parts.push_back(p);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1])
        throw std::invalid_argument("sequence does not yield a partition");
    return Partition(parts);
  }
};

// Closed form for the eigenvalue of a mixed-hook constituent.
inline EigenvalueResult mixed_hook_eigenvalue(const MixedHookSpec& spec) {
  const Partition& lam = spec.added;
  const Partition& mu = spec.base;
  spec.outcome();  // validates
  const Partition lam_conj = lam.conjugate();
  const Partition mu_conj = mu.conjugate();
  UniPoly<Rat> num(1), den(1);
  auto u_plus = [](long c) { return UniPoly<Rat>::linear(Rat(c), Rat(1)); };
  for (int i = 1; i <= lam.rows(); ++i)
    for (int j = 1; j <= lam.part(i); ++j) {
      if (spec.kind == MixedHookSpec::Kind::RowAdd) {
        const int a_i = spec.seq[i - 1];
        num = num * u_plus(-lam_conj.part(j) - mu.part(a_i) + a_i + j - 1);
      } else {
        const int b_j = spec.seq[j - 1];
        num = num * u_plus(lam.part(i) + mu_conj.part(b_j) - i - b_j + 1);
      }
      den = den * u_plus(-i + j);
    }
  return EigenvalueResult{QT(num, den)};
}

// All mixed-hook specs for the ordered pair (lambda added into mu),
// together with their outcomes.
inline std::vector<MixedHookSpec> enumerate_mixed_hooks(const Partition& lam,
                                                        const Partition& mu) {
  std::vector<MixedHookSpec> specs;
  if (lam.empty()) return specs;
  auto enumerate = [&](MixedHookSpec::Kind kind, int count, int slots) {
    std::vector<int> seq;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(seq.size()) == count) {
        MixedHookSpec spec{kind, lam, mu, seq};
        try {
          spec.outcome();
        } catch (const std::invalid_argument&) {
          return;
        }
        specs.push_back(spec);
        return;
      }
      for (int at = 1; at <= slots; ++at) {
        if (std::find(seq.begin(), seq.end(), at) != seq.end()) continue;
        seq.push_back(at);
        self(self);
        seq.pop_back();
      }
    };
    rec(rec);
  };
  enumerate(MixedHookSpec::Kind::RowAdd, lam.conjugate().part(1),
            mu.rows() + lam.conjugate().part(1));
  enumerate(MixedHookSpec::Kind::ColumnAdd, lam.part(1),
            mu.part(1) + lam.part(1));
  return specs;
}

// r^{lambda+mu} via the identity row-add sequence; always defined.
inline EigenvalueResult row_sum_eigenvalue(const Partition& lam, const Partition& mu) {
  if (lam.empty()) return EigenvalueResult{QT(1)};
  std::vector<int> seq;
  for (int i = 1; i <= lam.conjugate().part(1); ++i) seq.push_back(i);
  return mixed_hook_eigenvalue({MixedHookSpec::Kind::RowAdd, lam, mu, seq});
}

// Right-hand side of the product identity relating the two orders of
// induction:
//   r^nu_{lm}(u) * r^nu_{ml}(-u) = prod_{i,k} ((u+l_i-i+k)(u-m_k-i+k)) /
//                                            ((u+l_i-m_k-i+k)(u-i+k))
inline QT induction_swap_product(const Partition& lam, const Partition& mu) {
  UniPoly<Rat> num(1), den(1);
  auto u_plus = [](long c) { return UniPoly<Rat>::linear(Rat(c), Rat(1)); };
  for (int i = 1; i <= lam.conjugate().part(1); ++i)
    for (int k = 1; k <= mu.conjugate().part(1); ++k) {
      num = num * u_plus(lam.part(i) - i + k) * u_plus(-mu.part(k) - i + k);
      den = den * u_plus(lam.part(i) - mu.part(k) - i + k) * u_plus(-i + k);
    }
  return QT(num, den);
}

struct RatioIdentityReport {
  QT lhs, rhs;
  bool ok = false;
};

inline RatioIdentityReport ratio_identity_check(const Partition& lam,
                                                const Partition& mu,
                                                const Partition& nu, int bound = 8) {
  RatioIdentityReport rep;
  if (lam.empty() || mu.empty()) {
    rep.lhs = QT(1);
    rep.rhs = QT(1);
    rep.ok = true;
    return rep;
  }
  QT r1 = extract_eigenvalue(lam, mu, nu, bound).r;
  QT r2 = extract_eigenvalue(mu, lam, nu, bound).r.negate_variable();
  rep.lhs = r1 * r2;
  rep.rhs = induction_swap_product(lam, mu);
  rep.ok = (rep.lhs == rep.rhs);
  return rep;
}

// Closed-form eigenvalue wherever one is reachable: directly when nu is
// of mixed hook type for (lambda, mu), through conjugation otherwise.
inline std::optional<QT> formula_eigenvalue(const Partition& lam, const Partition& mu,
                                            const Partition& nu) {
  for (const MixedHookSpec& spec : enumerate_mixed_hooks(lam, mu))
    if (spec.outcome() == nu) return mixed_hook_eigenvalue(spec).r;
  for (const MixedHookSpec& spec :
       enumerate_mixed_hooks(lam.conjugate(), mu.conjugate()))
    if (spec.outcome() == nu.conjugate())
      return mixed_hook_eigenvalue(spec).r.negate_variable();
  return std::nullopt;
}

// Formula route extended by the product identity (dividing out the
// swapped eigenvalue); falls back to the operator when allowed.
inline EigenvalueResult resolve_eigenvalue(const Partition& lam, const Partition& mu,
                                           const Partition& nu,
                                           bool allow_operator = true, int bound = 8) {
  if (auto r = formula_eigenvalue(lam, mu, nu)) return EigenvalueResult{*r};
  if (auto swapped = formula_eigenvalue(mu, lam, nu))
    return EigenvalueResult{induction_swap_product(lam, mu) /
                            swapped->negate_variable()};
  if (!allow_operator)
    throw std::invalid_argument("no closed-form route to " + nu.str());
  return extract_eigenvalue(lam, mu, nu, bound);
}

// Ratio of the top and bottom distinguished eigenvalues, as a product of
// mixed hook lengths over the intersection of the diagrams.  The two
// readings differ in whether the denominator uses the conjugate of mu;
// the prose reading is the one the operator oracle confirms.
enum class HookLengthReading { Prose, Display };

inline EigenvalueResult h_ratio(const Partition& lam, const Partition& mu,
                                HookLengthReading reading = HookLengthReading::Prose) {
  const Partition lam_conj = lam.conjugate();
  const Partition mu_conj = mu.conjugate();
  UniPoly<Rat> num(1), den(1);
  auto u_plus = [](long c) { return UniPoly<Rat>::linear(Rat(c), Rat(1)); };
  for (int i = 1; i <= lam.rows(); ++i)
    for (int j = 1; j <= std::min(lam.part(i), mu.part(i)); ++j) {
      num = num * u_plus(-(lam_conj.part(j) + mu.part(i) - i - j + 1));
      const int first_kind = (reading == HookLengthReading::Prose)
                                 ? lam.part(i) + mu_conj.part(j) - i - j + 1
                                 : lam.part(i) + mu.part(j) - i - j + 1;
      den = den * u_plus(first_kind);
    }
  return EigenvalueResult{QT(num, den)};
}

// Zeros and poles of r^{lambda+mu}/r^nu over all mixed-hook nu.
inline std::set<long> zero_pole_set(const Partition& lam, const Partition& mu) {
  std::set<long> out;
  if (lam.empty() || mu.empty()) return out;
  const QT top = row_sum_eigenvalue(lam, mu).r;
  for (const MixedHookSpec& spec : enumerate_mixed_hooks(lam, mu)) {
    const QT ratio = top / mixed_hook_eigenvalue(spec).r;
    for (const UniPoly<Rat>* poly : {&ratio.num(), &ratio.den()}) {
      RootSplit split = rational_roots(*poly);
      if (!split.residual.is_one())
        throw std::logic_error("zero/pole set has a non-rational root");
      for (const auto& [root, mult] : split.roots) {
        if (!root.is_integer())
          throw std::logic_error("zero/pole set has a non-integer root");
        out.insert(root.num().get_si());
      }
    }
  }
  return out;
}

}  // namespace hookfusion

#endif
