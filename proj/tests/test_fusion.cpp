#include <catch2/catch_amalgamated.hpp>

#include "hookfusion/fusion.hpp"

using namespace hookfusion;

AlgebraElement<Rat> golden_gamma_element();  // defined in test_dme.cpp

namespace {

Perm cyc(const std::string& s, int n) { return Perm::parse_cycles(s, n); }

}  // namespace

TEST_CASE("fusion factor shapes", "[fusion]") {
  // constant denominator: 1 - (pq)/c
  AlgebraElement<QT> f = fusion_factor(1, 2, UniPoly<Rat>(std::vector<Rat>{Rat(3)}), 3);
  CHECK(f.coeff(Perm::identity(3)) == QT(1));
  CHECK(f.coeff(cyc("(1,2)", 3)) == -QT(UniPoly<Rat>(1), UniPoly<Rat>(std::vector<Rat>{Rat(3)})));

  // f_{pq}(u,v) f_{qp}(v,u) = 1 - 1/(u-v)^2
  UniPoly<Rat> den = UniPoly<Rat>::linear(Rat(2), Rat(1));  // u - v = t + 2
  AlgebraElement<QT> lhs = fusion_factor(1, 2, den, 2) * fusion_factor(2, 1, -den, 2);
  AlgebraElement<QT> want(2);
  want.add_term(Perm::identity(2), QT(1) - QT(UniPoly<Rat>(1), den * den));
  CHECK(lhs == want);

  // identically-zero denominator is a hard singularity
  CHECK_THROWS_AS(fusion_factor(1, 3, UniPoly<Rat>(), 4), HardSingularity);
}

TEST_CASE("hook fusion reproduces the (2,1) element", "[fusion]") {
  StandardTableau n_col = column_tableau(Partition({2, 1}));
  AlgebraElement<Rat> f = fuse(n_col, "hook");
  CHECK(f == dme_any(n_col));
  CHECK(f == hook_direct(n_col));
  // row and column subspaces give the same element
  CHECK(fuse(n_col, "row") == f);
  CHECK(fuse(n_col, "column") == f);
}

TEST_CASE("hook fusion reproduces the (2,2) singular example", "[fusion]") {
  StandardTableau g = column_tableau(Partition({2, 2}));
  AlgebraElement<Rat> f = fuse(g, "hook");
  CHECK(f == golden_gamma_element());
  CHECK(f.coeff(cyc("(1,2)(3,4)", 4)) == Rat(1));
  CHECK(f.coeff(cyc("(1,2,3,4)", 4)) == Rat(1, 2));
}

TEST_CASE("single row needs no parameters", "[fusion]") {
  StandardTableau row = row_tableau(Partition({4}));
  FusionProduct fp = FusionProduct::make(row, SubspaceSpec::rows(row));
  AlgebraElement<QT> prod = big_f(fp);
  // every coefficient is already constant in t
  for (const auto& [p, c] : prod.terms()) {
    CHECK(c.is_polynomial());
    CHECK(c.num().degree() <= 0);
  }
  CHECK(*evaluate_limit(fp).element == dme_row(Partition({4})));
}

TEST_CASE("hook shapes fuse without parameters", "[fusion]") {
  for (const Partition& shape :
       {Partition({3, 1}), Partition({2, 1, 1}), Partition({4}), Partition({1, 1, 1, 1})}) {
    for (const StandardTableau& t : all_standard_tableaux(shape))
      CHECK(hook_direct(t) == dme_any(t));
  }
}

TEST_CASE("triple agreement on small shapes", "[fusion]") {
  for (int n = 2; n <= 4; ++n)
    for (const Partition& shape : partitions_of(n))
      for (const StandardTableau& t : all_standard_tableaux(shape)) {
        AlgebraElement<Rat> oracle = dme_any(t);
        CHECK(fuse(t, "hook") == oracle);
        CHECK(fuse(t, "row") == oracle);
        CHECK(fuse(t, "column") == oracle);
      }
}

TEST_CASE("limit independent of direction values", "[fusion]") {
  StandardTableau t = hook_tableau(Partition({3, 2}));
  FusionProduct fp = FusionProduct::make(t, SubspaceSpec::hooks(t));
  AlgebraElement<Rat> base = *evaluate_limit(fp).element;
  fp.set_direction(1, Rat(7, 2));
  fp.set_direction(2, Rat(-5));
  CHECK(*evaluate_limit(fp).element == base);
  fp.set_direction(1, Rat(1, 3));
  fp.set_direction(2, Rat(2, 3));
  CHECK(*evaluate_limit(fp).element == base);
}

TEST_CASE("yang-baxter and C/R ordering", "[fusion]") {
  CheckReport rep = reorder_check(Partition({3, 2}));
  CHECK(rep.ok);
  CheckReport rep2 = reorder_check(Partition({2, 2, 1}));
  CHECK(rep2.ok);
}

TEST_CASE("sign actions", "[fusion]") {
  StandardTableau n_col = column_tableau(Partition({2, 1}));
  AlgebraElement<Rat> f = dme_any(n_col);
  CHECK(f.left_mul(Perm::adjacent(1, 3)) == -f);  // 1,2 share a column
  StandardTableau n_row = row_tableau(Partition({2, 1}));
  AlgebraElement<Rat> fr = dme_any(n_row);
  CHECK(fr.left_mul(Perm::adjacent(1, 3)) == fr);  // 1,2 share a row
  AlgebraElement<Rat> full = dme_row(Partition({4}));
  for (int k = 1; k < 4; ++k) CHECK(full.left_mul(Perm::adjacent(k, 4)) == full);

  CHECK(divisibility_report(n_col, f).ok);
  CHECK(divisibility_report(n_row, fr).ok);
}

TEST_CASE("stripping factorisation consequence", "[fusion]") {
  // F for the hook tableau right-divides by the shifted trailing-hook
  // element: F * embed(F_tail) = (m!/f_tail) * F
  for (const Partition& shape : {Partition({2, 2}), Partition({3, 2}), Partition({3, 3})}) {
    const StandardTableau t = hook_tableau(shape);
    HookCoordinates hc = principal_hooks(shape);
    const int x = hc.alpha[0] + hc.beta[0];  // last entry of the first hook
    std::vector<int> alpha_tail(hc.alpha.begin() + 1, hc.alpha.end());
    std::vector<int> beta_tail(hc.beta.begin() + 1, hc.beta.end());
    const Partition tail = from_hook_coordinates({alpha_tail, beta_tail});
    AlgebraElement<Rat> f = dme_any(t);
    AlgebraElement<Rat> tail_f = embed_shift(dme_any(hook_tableau(tail)), x, shape.n());
    mpz_class mf;
    mpz_fac_ui(mf.get_mpz_t(), tail.n());
    const Rat scale(mpq_class(mf, f_lambda_big(tail)));
    CHECK(f * tail_f == f * scale);
  }
}
