#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hookfusion/characters.hpp"
#include "hookfusion/tableau.hpp"

using namespace hookfusion;

TEST_CASE("conjugate", "[comb]") {
  CHECK(Partition({3, 3, 2}).conjugate() == Partition({3, 3, 2}));
  CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({4, 3, 1}).conjugate() == Partition({3, 2, 2, 1}));
  for (const Partition& p : partitions_of(7))
    CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("hook tableau and contents", "[comb]") {
  StandardTableau t = hook_tableau(Partition({3, 3, 2}));
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 4, 5}, {2, 6, 8}, {3, 7}});
  CHECK(t.contents() == std::vector<int>{0, -1, -2, 1, 2, 0, -1, 1});
  CHECK(hook_tableau(Partition({1})).rows() == std::vector<std::vector<int>>{{1}});
  // hook tableau is standard for every shape up to n = 10
  for (int n = 1; n <= 10; ++n)
    for (const Partition& p : partitions_of(n))
      CHECK_NOTHROW(hook_tableau(p));
}

TEST_CASE("row and column tableaux", "[comb]") {
  CHECK(column_tableau(Partition({2, 1})).rows() ==
        std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(row_tableau(Partition({2, 1})).rows() ==
        std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(row_tableau(Partition({4})).rows() ==
        std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(column_tableau(Partition({1, 1, 1})).rows() ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(row_tableau(Partition({4})) == column_tableau(Partition({4})));
}

TEST_CASE("principal hooks", "[comb]") {
  HookCoordinates hc = principal_hooks(Partition({3, 3, 2}));
  CHECK(hc.alpha == std::vector<int>{2, 1});
  CHECK(hc.beta == std::vector<int>{3, 2});
  CHECK(from_hook_coordinates(hc) == Partition({3, 3, 2}));

  HookCoordinates row = principal_hooks(Partition({5}));
  CHECK(row.alpha == std::vector<int>{4});
  CHECK(row.beta == std::vector<int>{1});

  // single box: the arm may degenerate to zero
  HookCoordinates one = principal_hooks(Partition({1}));
  CHECK(one.alpha == std::vector<int>{0});
  CHECK(one.beta == std::vector<int>{1});

  // reconstruction round-trips everywhere
  for (int n = 1; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) {
      HookCoordinates h = principal_hooks(p);
      int total = 0;
      for (int i = 0; i < h.d(); ++i) total += h.alpha[i] + h.beta[i];
      CHECK(total == n);
      CHECK(from_hook_coordinates(h) == p);
    }

  // the shapes in the hook-coordinate notation used for decompositions
  CHECK(from_hook_coordinates({{2}, {3}}) == Partition({3, 1, 1}));
  CHECK(from_hook_coordinates({{1}, {2}}) == Partition({2, 1}));
  CHECK(from_hook_coordinates({{3, 0}, {4, 1}}) == Partition({4, 2, 1, 1}));
}

TEST_CASE("tableau enumeration and counts", "[comb]") {
  CHECK(all_standard_tableaux(Partition({2, 1})).size() == 2);
  CHECK(all_standard_tableaux(Partition({2, 2})).size() == 2);
  CHECK(all_standard_tableaux(Partition({6})).size() == 1);
  CHECK(f_lambda(Partition({3, 3, 2})) == 42);
  CHECK_THROWS_AS(all_standard_tableaux(Partition({6, 5})), BoundExceeded);

  // enumeration count equals the hook length formula, duplicates free
  for (int n = 1; n <= 7; ++n)
    for (const Partition& p : partitions_of(n)) {
      auto all = all_standard_tableaux(p);
      CHECK(static_cast<long>(all.size()) == f_lambda(p));
      std::set<std::string> distinct;
      for (const auto& t : all) distinct.insert(t.str());
      CHECK(distinct.size() == all.size());
    }

  // sum of squares identity
  for (int n = 1; n <= 8; ++n) {
    mpz_class sum(0), nf;
    for (const Partition& p : partitions_of(n)) {
      mpz_class f = f_lambda_big(p);
      sum += f * f;
    }
    mpz_fac_ui(nf.get_mpz_t(), n);
    CHECK(sum == nf);
  }
}

TEST_CASE("adjacent chains", "[comb]") {
  StandardTableau n_col = column_tableau(Partition({2, 1}));
  StandardTableau n_row = row_tableau(Partition({2, 1}));
  CHECK(adjacent_chain(n_col, n_col).empty());
  CHECK(adjacent_chain(n_col, n_row) == std::vector<int>{2});

  // replay every chain for (2,2) and a couple more shapes
  for (const Partition& shape : {Partition({2, 2}), Partition({3, 2}), Partition({2, 2, 1})}) {
    auto all = all_standard_tableaux(shape);
    for (const auto& from : all)
      for (const auto& to : all) {
        StandardTableau cur = from;
        for (int k : adjacent_chain(from, to)) {
          CHECK(cur.swap_keeps_standard(k));
          cur = cur.apply_swap(k);
        }
        CHECK(cur == to);
      }
  }
}

TEST_CASE("kostka numbers", "[comb]") {
  CHECK(kostka(Partition({3, 3, 2}), {3, 3, 2}) == 1);
  CHECK(kostka(Partition({5, 3}), {3, 3, 2}) == 3);
  CHECK(kostka(Partition({6}), std::vector<int>(6, 1)) == 1);
  // K_{lambda,lambda} = 1 for everything small
  for (int n = 1; n <= 6; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(kostka(p, p.parts()) == 1);
  // content need not be a partition
  CHECK(kostka(Partition({2, 1}), {1, 1, 1}) == 2);
  CHECK(kostka(Partition({2, 1}), {0, 1, 2}) == 1);
  CHECK(kostka(Partition({1, 1, 1}), {2, 1}) == 0);
  CHECK_THROWS_AS(kostka(Partition({2}), {1}), std::invalid_argument);
}

TEST_CASE("row decomposition of (3,3,2)", "[comb]") {
  // h3 h3 h2: ten constituents; the dimension identity
  // sum(mult * f) = 8!/(3!3!2!) = 560 pins the full list
  std::map<Partition, long> got = row_product_decomposition(Partition({3, 3, 2}));
  std::map<Partition, long> want = {
      {Partition({3, 3, 2}), 1}, {Partition({4, 4}), 1},    {Partition({4, 3, 1}), 2},
      {Partition({4, 2, 2}), 1}, {Partition({5, 3}), 3},    {Partition({5, 2, 1}), 2},
      {Partition({6, 2}), 3},    {Partition({7, 1}), 2},    {Partition({8}), 1},
      {Partition({6, 1, 1}), 1},
  };
  CHECK(got == want);
}

TEST_CASE("littlewood-richardson coefficients", "[comb]") {
  CHECK(lr_coefficient(Partition({5, 3}), Partition({3, 1}), Partition({3, 1})) == 1);
  // row-sum shapes always have multiplicity one
  for (const Partition& a : partitions_of(3))
    for (const Partition& b : partitions_of(4))
      CHECK(lr_coefficient(row_sum(a, b), a, b) == 1);
  CHECK_THROWS_AS(lr_coefficient(Partition({3}), Partition({1}), Partition({1})),
                  std::invalid_argument);
  // agreement with Kostka via iterated rows: multiplicity of mu in
  // h_{lambda_1} ... h_{lambda_k} equals K_{mu,lambda}
  for (int n = 4; n <= 6; ++n)
    for (const Partition& lam : partitions_of(n)) {
      std::map<Partition, long> acc{{Partition({lam.part(1)}), 1}};
      for (int i = 2; i <= lam.rows(); ++i) {
        const Partition row({lam.part(i)});
        std::map<Partition, long> next;
        for (const auto& [mu, mult] : acc)
          for (const Partition& target : partitions_of(mu.n() + row.n())) {
            long c = lr_coefficient(target, mu, row);
            if (c > 0) next[target] += mult * c;
          }
        acc = std::move(next);
      }
      for (const auto& [mu, mult] : acc) CHECK(mult == kostka(mu, lam.parts()));
    }
}

TEST_CASE("hook decomposition of (3,3,2)", "[comb]") {
  // s_(2|3) * s_(1|2), all ten multiplicities; in hook coordinates the
  // summands are (2,1|3,2), (2,1|4,1), (2|5,1), (2|4,2), (3,1|3,1),
  // (3|3,2), 2*(3|4,1), (3|5), (4|3,1), (4|4), with zero arms dropped
  // from the display.
  std::map<Partition, long> got = hook_product_decomposition(Partition({3, 3, 2}));
  std::map<Partition, long> want = {
      {Partition({3, 3, 2}), 1},        // (2,1 | 3,2)
      {Partition({3, 3, 1, 1}), 1},     // (2,1 | 4,1)
      {Partition({3, 2, 1, 1, 1}), 1},  // (2,0 | 5,1)
      {Partition({3, 2, 2, 1}), 1},     // (2,0 | 4,2)
      {Partition({4, 3, 1}), 1},        // (3,1 | 3,1)
      {Partition({4, 2, 2}), 1},        // (3,0 | 3,2)
      {Partition({4, 2, 1, 1}), 2},     // (3,0 | 4,1)
      {Partition({4, 1, 1, 1, 1}), 1},  // (3 | 5)
      {Partition({5, 2, 1}), 1},        // (4,0 | 3,1)
      {Partition({5, 1, 1, 1}), 1},     // (4 | 4)
  };
  CHECK(got == want);
  // consistency: hook coordinates of each summand rebuild the shape
  CHECK(from_hook_coordinates({{2, 0}, {5, 1}}) == Partition({3, 2, 1, 1, 1}));
  CHECK(from_hook_coordinates({{3, 0}, {4, 1}}) == Partition({4, 2, 1, 1}));
}

TEST_CASE("hook-shaped lambda decomposes trivially", "[comb]") {
  std::map<Partition, long> got = hook_product_decomposition(Partition({3, 1, 1}));
  CHECK(got == std::map<Partition, long>{{Partition({3, 1, 1}), 1}});
}

TEST_CASE("D_{lambda,lambda} = 1 for n <= 6", "[comb]") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& p : partitions_of(n))
      CHECK(hook_product_decomposition(p).at(p) == 1);
}

TEST_CASE("murnaghan-nakayama characters", "[comb]") {
  for (const Partition& type : partitions_of(5))
    CHECK(mn_character(Partition({5}), type) == 1);
  for (const Partition& type : partitions_of(5)) {
    int sign = 1;
    for (int part : type.parts())
      if (part % 2 == 0) sign = -sign;
    CHECK(mn_character(Partition({1, 1, 1, 1, 1}), type) == sign);
  }
  CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
}

TEST_CASE("character orthogonality", "[comb]") {
  // column orthogonality: sum_lambda chi(tau) chi(tau') = 0 for tau != tau',
  // and n!/|class| on the diagonal
  for (int n = 2; n <= 6; ++n) {
    auto types = partitions_of(n);
    mpz_class nf;
    mpz_fac_ui(nf.get_mpz_t(), n);
    for (const auto& t1 : types)
      for (const auto& t2 : types) {
        mpz_class sum(0);
        for (const Partition& lam : partitions_of(n))
          sum += mpz_class(mn_character(lam, t1)) * mn_character(lam, t2);
        if (t1 == t2)
          CHECK(sum == nf / class_size(t1));
        else
          CHECK(sum == 0);
      }
  }
}

TEST_CASE("partition parse and print", "[comb]") {
  CHECK(Partition::parse("3,3,2") == Partition({3, 3, 2}));
  CHECK(Partition::parse("3,3,2").str() == "3,3,2");
  CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
  CHECK(hook_tableau(Partition({3, 3, 2})).str() == "[[1,4,5],[2,6,8],[3,7]]");
}
