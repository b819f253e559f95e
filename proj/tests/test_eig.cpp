#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hookfusion/eigenvalues.hpp"

using namespace hookfusion;

namespace {

Perm cyc(const std::string& s, int n) { return Perm::parse_cycles(s, n); }

UniPoly<Rat> upoly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.emplace_back(x);
  return UniPoly<Rat>(std::move(c));
}

// product of (u - r) over the lists
QT linprod(std::initializer_list<long> num_roots, std::initializer_list<long> den_roots) {
  UniPoly<Rat> n(1), d(1);
  for (long r : num_roots) n = n * UniPoly<Rat>::linear(Rat(-r), Rat(1));
  for (long r : den_roots) d = d * UniPoly<Rat>::linear(Rat(-r), Rat(1));
  return QT(n, d);
}

}  // namespace

TEST_CASE("exchange operator for two single rows", "[eig]") {
  StandardTableau two = row_tableau(Partition({2}));
  AlgebraElement<QT> r = r_operator(two, two);
  // 1 - (14)/(u-1) - (13)/u + (134)/(u(u-1)) - (24)/u + (142)/(u(u-1)) + ...
  CHECK(r.coeff(Perm::identity(4)) == QT(1));
  CHECK(r.coeff(cyc("(1,4)", 4)) == -QT(upoly({1}), upoly({-1, 1})));
  CHECK(r.coeff(cyc("(1,3)", 4)) == -QT(upoly({1}), upoly({0, 1})));
  CHECK(r.coeff(cyc("(1,3,4)", 4)) == QT(upoly({1}), upoly({0, -1, 1})));
  CHECK(r.coeff(cyc("(1,4,2)", 4)) == QT(upoly({1}), upoly({0, -1, 1})));
  CHECK(r.coeff(cyc("(2,3)", 4)) == -QT(upoly({1}), upoly({1, 1})));
  // the doubled term: -2 (1342) / (u(u+1)(u-1))
  CHECK(r.coeff(cyc("(1,3,4,2)", 4)) == QT(upoly({-2}), upoly({0, -1, 0, 1})));
  // degenerate cases
  CHECK(r_operator(row_tableau(Partition({1})), row_tableau(Partition({1}))).coeff(
            cyc("(1,2)", 2)) == -QT(upoly({1}), upoly({0, 1})));
  CHECK_THROWS_AS(r_operator(row_tableau(Partition({5})), row_tableau(Partition({4}))),
                  BoundExceeded);
}

TEST_CASE("operator eigenvalue for the trivial constituent", "[eig]") {
  EigenvalueResult r = extract_eigenvalue(Partition({2}), Partition({2}), Partition({4}));
  CHECK(r.r == linprod({1, 2}, {0, -1}));
  CHECK(r.factored() == "(u-2)(u-1)/((u)(u+1))");
}

TEST_CASE("mixed hook formula smallest cases", "[eig]") {
  // single boxes: gamma = (2) gives (u-1)/u, gamma = (1,1) gives (u+1)/u
  MixedHookSpec top{MixedHookSpec::Kind::RowAdd, Partition({1}), Partition({1}), {1}};
  CHECK(top.outcome() == Partition({2}));
  CHECK(mixed_hook_eigenvalue(top).r == linprod({1}, {0}));
  CHECK(mixed_hook_eigenvalue(top).r ==
        extract_eigenvalue(Partition({1}), Partition({1}), Partition({2})).r);

  MixedHookSpec bottom{MixedHookSpec::Kind::RowAdd, Partition({1}), Partition({1}), {2}};
  CHECK(bottom.outcome() == Partition({1, 1}));
  CHECK(mixed_hook_eigenvalue(bottom).r == linprod({-1}, {0}));
  CHECK(mixed_hook_eigenvalue(bottom).r ==
        extract_eigenvalue(Partition({1}), Partition({1}), Partition({1, 1})).r);
}

TEST_CASE("mixed hook formula: the (3,1)+(2,2) example", "[eig]") {
  MixedHookSpec spec{MixedHookSpec::Kind::RowAdd, Partition({3, 1}), Partition({2, 2}), {1, 2}};
  CHECK(spec.outcome() == Partition({5, 3}));
  CHECK(mixed_hook_eigenvalue(spec).r == linprod({3, 2}, {-1, -2}));
}

TEST_CASE("mixed hook specs validate", "[eig]") {
  CHECK_THROWS_AS(
      MixedHookSpec({MixedHookSpec::Kind::RowAdd, Partition({3, 1}), Partition({2, 2}), {2, 3}})
          .outcome(),
      std::invalid_argument);
  CHECK_THROWS_AS(
      MixedHookSpec({MixedHookSpec::Kind::RowAdd, Partition({3, 1}), Partition({2, 2}), {1, 1}})
          .outcome(),
      std::invalid_argument);
  // column-add outcome for (3,1) into (2,2)
  MixedHookSpec col{MixedHookSpec::Kind::ColumnAdd, Partition({3, 1}), Partition({2, 2}), {1, 2, 3}};
  CHECK(col.outcome() == Partition({3, 2, 2, 1}));
}

TEST_CASE("formula agrees with the operator on every mixed hook, n <= 5", "[eig]") {
  const std::vector<std::pair<Partition, Partition>> pairs = {
      {Partition({2}), Partition({2})},       {Partition({2}), Partition({1, 1})},
      {Partition({2, 1}), Partition({2})},    {Partition({1, 1}), Partition({2, 1})},
      {Partition({2, 1}), Partition({1, 1})}, {Partition({3}), Partition({2})},
  };
  for (const auto& [lam, mu] : pairs) {
    for (const MixedHookSpec& spec : enumerate_mixed_hooks(lam, mu)) {
      const Partition nu = spec.outcome();
      if (lr_coefficient(nu, lam, mu) != 1) continue;
      CHECK(mixed_hook_eigenvalue(spec).r == extract_eigenvalue(lam, mu, nu).r);
    }
  }
}

TEST_CASE("same outcome from different sequences gives one eigenvalue", "[eig]") {
  std::map<Partition, std::set<std::string>> values;
  for (const MixedHookSpec& spec : enumerate_mixed_hooks(Partition({3, 1}), Partition({2, 2})))
    values[spec.outcome()].insert(mixed_hook_eigenvalue(spec).factored());
  for (const auto& [nu, vals] : values) CHECK(vals.size() == 1);
  CHECK(values.count(Partition({3, 3, 2})) == 1);
}

TEST_CASE("ratio identity", "[eig]") {
  CHECK(ratio_identity_check(Partition({2}), Partition({2}), Partition({4})).ok);
  CHECK(ratio_identity_check(Partition({2}), Partition({1}), Partition({2, 1})).ok);
  CHECK(ratio_identity_check(Partition({2, 1}), Partition({1}), Partition({2, 1, 1})).ok);
  CHECK(ratio_identity_check(Partition({}), Partition({2}), Partition({2})).ok);
}

TEST_CASE("conjugation symmetry", "[eig]") {
  const std::vector<std::tuple<Partition, Partition, Partition>> cases = {
      {Partition({2}), Partition({2}), Partition({4})},
      {Partition({2}), Partition({2}), Partition({3, 1})},
      {Partition({2, 1}), Partition({2}), Partition({4, 1})},
      {Partition({2, 1}), Partition({2}), Partition({2, 2, 1})},
  };
  for (const auto& [lam, mu, nu] : cases) {
    QT direct = extract_eigenvalue(lam, mu, nu).r;
    QT conj = extract_eigenvalue(lam.conjugate(), mu.conjugate(), nu.conjugate())
                  .r.negate_variable();
    CHECK(direct == conj);
  }
}

TEST_CASE("hook length ratio", "[eig]") {
  // (2,1) against itself: hook lengths {3,1,1}
  CHECK(h_ratio(Partition({2, 1}), Partition({2, 1})).r ==
        linprod({3, 1, 1}, {-3, -1, -1}));
  CHECK(h_ratio(Partition({1}), Partition({1})).r == linprod({1}, {-1}));
  // empty intersection degenerates to 1
  CHECK(h_ratio(Partition({}), Partition({2})).r == QT(1));

  // operator oracle discriminates the two readings on an asymmetric pair
  const Partition lam({2, 1}), mu({2});
  QT top = extract_eigenvalue(lam, mu, row_sum(lam, mu)).r;
  const Partition bottom_shape = row_sum(lam.conjugate(), mu.conjugate()).conjugate();
  QT bottom = extract_eigenvalue(lam, mu, bottom_shape).r;
  QT oracle = top / bottom;
  CHECK(h_ratio(lam, mu, HookLengthReading::Prose).r == oracle);
  CHECK(h_ratio(lam, mu, HookLengthReading::Display).r != oracle);
}

TEST_CASE("zero pole sets", "[eig]") {
  CHECK(zero_pole_set(Partition({3, 1}), Partition({2, 2})) ==
        std::set<long>{-4, -3, -1, 1, 2, 3});
  CHECK(zero_pole_set(Partition({1}), Partition({1})) == std::set<long>{-1, 1});
  CHECK(zero_pole_set(Partition({}), Partition({2})).empty());
}

TEST_CASE("multiplicity guard", "[eig]") {
  CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
  CHECK_THROWS_AS(
      extract_eigenvalue(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})),
      std::invalid_argument);
}
