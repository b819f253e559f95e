#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>

#include "hookfusion/ribbon.hpp"

using namespace hookfusion;

namespace {

ConnectionDiagram diagram(const Partition& shape,
                          std::initializer_list<std::array<int, 4>> edges) {
  ConnectionDiagram d(column_tableau(shape));
  for (const auto& e : edges) d.add_edge(Box{e[0], e[1]}, Box{e[2], e[3]});
  return d;
}

// the four possible edges of the single square of (2,2)
ConnectionDiagram square22(int mask) {
  ConnectionDiagram d(column_tableau(Partition({2, 2})));
  if (mask & kLV) d.add_edge(Box{1, 1}, Box{2, 1});
  if (mask & kTH) d.add_edge(Box{1, 1}, Box{1, 2});
  if (mask & kBH) d.add_edge(Box{2, 1}, Box{2, 2});
  if (mask & kRV) d.add_edge(Box{1, 2}, Box{2, 2});
  return d;
}

}  // namespace

AlgebraElement<Rat> golden_gamma_element();  // defined in test_dme.cpp

TEST_CASE("singularity enumeration", "[ribbon]") {
  ConnectionDiagram g(column_tableau(Partition({2, 2})));
  auto sings = enumerate_singularities(g);
  REQUIRE(sings.size() == 1);
  CHECK(sings[0].p == 1);
  CHECK(sings[0].q == 4);
  CHECK(sings[0].degree == 1);

  ConnectionDiagram c33(column_tableau(Partition({3, 3})));
  auto s33 = enumerate_singularities(c33);
  REQUIRE(s33.size() == 2);
  CHECK(s33[0].p == 1);
  CHECK(s33[0].q == 4);
  CHECK(s33[1].p == 3);
  CHECK(s33[1].q == 6);

  CHECK(enumerate_singularities(ConnectionDiagram(row_tableau(Partition({5})))).empty());

  // degrees on a 4x4 shape: nine of degree 1, four of degree 2, one of 3
  ConnectionDiagram big(column_tableau(Partition({4, 4, 4, 4})));
  auto sb = enumerate_singularities(big);
  CHECK(std::count_if(sb.begin(), sb.end(), [](auto& s) { return s.degree == 1; }) == 9);
  CHECK(std::count_if(sb.begin(), sb.end(), [](auto& s) { return s.degree == 2; }) == 4);
  CHECK(std::count_if(sb.begin(), sb.end(), [](auto& s) { return s.degree == 3; }) == 1);
}

TEST_CASE("square classification", "[ribbon]") {
  auto type_of = [](const ConnectionDiagram& d) {
    return classify_square(d, enumerate_singularities(d)[0]);
  };
  CHECK(type_of(square22(kLV | kRV)) == 0);   // columns
  CHECK(type_of(square22(kTH | kBH)) == 4);   // rows
  CHECK(type_of(square22(0)) == 15);          // no edges
  CHECK(type_of(square22(kLV)) == 1);
  CHECK(type_of(square22(kLV | kTH)) == 2);
  CHECK(type_of(square22(kTH)) == 3);
  CHECK(type_of(square22(kBH)) == 5);
  CHECK(type_of(square22(kBH | kRV)) == 6);
  CHECK(type_of(square22(kRV)) == 7);
  CHECK(type_of(square22(kTH | kRV)) == 8);
  CHECK(type_of(square22(kLV | kBH)) == 9);
  CHECK(type_of(square22(kLV | kBH | kTH)) == 10);
  CHECK(type_of(square22(kLV | kRV | kTH)) == 11);
  CHECK(type_of(square22(kRV | kBH | kTH)) == 12);
  CHECK(type_of(square22(kLV | kRV | kBH)) == 13);
  CHECK(type_of(square22(kLV | kRV | kBH | kTH)) == 14);
}

TEST_CASE("degree-2 classification by superimposition", "[ribbon]") {
  ConnectionDiagram d(column_tableau(Partition({3, 3, 3})));
  d.add_edge(Box{1, 1}, Box{2, 1});  // LV of the degree-2 square
  d.add_edge(Box{2, 3}, Box{3, 3});  // RV of the degree-2 square
  d.add_edge(Box{3, 1}, Box{3, 2});
  d.add_edge(Box{2, 2}, Box{3, 2});
  d.add_edge(Box{1, 2}, Box{2, 2});
  auto sings = enumerate_singularities(d);
  auto deg2 = std::find_if(sings.begin(), sings.end(), [](auto& s) { return s.degree == 2; });
  REQUIRE(deg2 != sings.end());
  CHECK(classify_square(d, *deg2) == 0);
}

TEST_CASE("validity: the three appendix diagrams on (3,3)", "[ribbon]") {
  // all horizontal edges: every square of type 4 -> valid
  ConnectionDiagram rows = diagram(Partition({3, 3}), {{{1, 1, 1, 2}}, {{1, 2, 1, 3}},
                                                       {{2, 1, 2, 2}}, {{2, 2, 2, 3}}});
  CHECK(validity_check(rows).valid);

  // the two left horizontal edges only: right square has no edges
  ConnectionDiagram left2 = diagram(Partition({3, 3}), {{{1, 1, 1, 2}}, {{2, 1, 2, 2}}});
  Verdict v2 = validity_check(left2);
  CHECK(!v2.valid);
  CHECK(v2.reason.find("15") != std::string::npos);

  // top-left horizontal plus bottom-right horizontal: the 3--5 union
  ConnectionDiagram union35 = diagram(Partition({3, 3}), {{{1, 1, 1, 2}}, {{2, 2, 2, 3}}});
  Verdict v3 = validity_check(union35);
  CHECK(!v3.valid);
  CHECK(v3.reason.find("union 3-5") != std::string::npos);
}

TEST_CASE("validity on all sixteen diagrams of (2,2)", "[ribbon]") {
  for (int mask = 0; mask < 16; ++mask) {
    const int type = type_from_mask(mask);
    CHECK(validity_check(square22(mask)).valid == (type <= 7));
  }
}

TEST_CASE("excluded union orientations", "[ribbon]") {
  // 1 over 7 vertically is excluded; 7 over 1 is not
  Partition shape({2, 2, 2});
  ConnectionDiagram one_over_seven(column_tableau(shape));
  one_over_seven.add_edge(Box{1, 1}, Box{2, 1});  // top square LV -> type 1
  one_over_seven.add_edge(Box{2, 2}, Box{3, 2});  // bottom square RV -> type 7
  CHECK(!validity_check(one_over_seven).valid);

  ConnectionDiagram seven_over_one(column_tableau(shape));
  seven_over_one.add_edge(Box{1, 2}, Box{2, 2});  // top square RV -> type 7
  seven_over_one.add_edge(Box{2, 1}, Box{3, 1});  // bottom square LV -> type 1
  CHECK(validity_check(seven_over_one).valid);

  // 5--3 horizontally (the reflection of 3--5) is fine
  ConnectionDiagram five_three = diagram(Partition({3, 3}), {{{2, 1, 2, 2}}, {{1, 2, 1, 3}}});
  CHECK(validity_check(five_three).valid);
}

TEST_CASE("padded union chains", "[ribbon]") {
  // 3 - 6 - 2 - 5 around a corner is excluded; the 6 turns the chain up,
  // the 2 turns it right again
  Partition tall({4, 4, 4});
  ConnectionDiagram corner(column_tableau(tall));
  corner.add_edge(Box{2, 1}, Box{2, 2});  // TH of square (2,1) -> 3
  corner.add_edge(Box{3, 2}, Box{3, 3});  // BH of square (2,2)
  corner.add_edge(Box{2, 3}, Box{3, 3});  // RV of square (2,2) -> 6
  corner.add_edge(Box{1, 2}, Box{2, 2});  // LV of square (1,2)
  corner.add_edge(Box{1, 2}, Box{1, 3});  // TH of square (1,2) -> 2
  corner.add_edge(Box{2, 3}, Box{2, 4});  // BH of square (1,3) -> 5
  {
    auto grid = detail::grid_of(corner);
    CHECK(grid.by_degree.at(1).at(Box{2, 1}) == 3);
    CHECK(grid.by_degree.at(1).at(Box{2, 2}) == 6);
    CHECK(grid.by_degree.at(1).at(Box{1, 2}) == 2);
    CHECK(grid.by_degree.at(1).at(Box{1, 3}) == 5);
  }
  Verdict v = validity_check(corner);
  CHECK(!v.valid);
  CHECK(v.reason.find("3-6-2-5") != std::string::npos);
}

TEST_CASE("diagonal exclusions", "[ribbon]") {
  // type 3 may not sit diagonally below type 5; type 1 not below type 7
  Partition shape({3, 3, 3});
  ConnectionDiagram five_three(column_tableau(shape));
  five_three.add_edge(Box{2, 1}, Box{2, 2});  // BH of square (1,1) -> 5
  five_three.add_edge(Box{2, 2}, Box{2, 3});  // TH of square (2,2) -> 3
  {
    auto grid = detail::grid_of(five_three);
    CHECK(grid.by_degree.at(1).at(Box{1, 1}) == 5);
    CHECK(grid.by_degree.at(1).at(Box{2, 2}) == 3);
  }
  // this pattern also forces the degree-2 superimposed square to be
  // edgeless, so the verdict may cite either clause; invalid regardless
  Verdict v = validity_check(five_three);
  CHECK(!v.valid);

  ConnectionDiagram seven_one(column_tableau(shape));
  seven_one.add_edge(Box{1, 2}, Box{2, 2});  // RV of square (1,1) -> 7
  seven_one.add_edge(Box{2, 2}, Box{3, 2});  // LV of square (2,2) -> 1
  Verdict v2 = validity_check(seven_one);
  CHECK(!v2.valid);
}

TEST_CASE("probe limits on the appendix diagrams", "[ribbon]") {
  const Perm target = Perm::parse_cycles("(1,4,3,6)", 6);
  ConnectionDiagram rows = diagram(Partition({3, 3}), {{{1, 1, 1, 2}}, {{1, 2, 1, 3}},
                                                       {{2, 1, 2, 2}}, {{2, 2, 2, 3}}});
  ProbeResult pr = probe_limit(rows, target);
  REQUIRE(pr.regular());
  CHECK(*pr.value == Rat(-1, 4));

  ConnectionDiagram left2 = diagram(Partition({3, 3}), {{{1, 1, 1, 2}}, {{2, 1, 2, 2}}});
  CHECK(!probe_limit(left2, target).regular());

  ConnectionDiagram union35 = diagram(Partition({3, 3}), {{{1, 1, 1, 2}}, {{2, 2, 2, 3}}});
  CHECK(!probe_limit(union35, target).regular());
}

TEST_CASE("full limits of the four named diagrams on (2,2)", "[ribbon]") {
  for (int mask : {kLV | kRV, int(kRV), kLV | kTH, kTH | kBH}) {
    FullLimitResult res = full_limit(square22(mask));
    REQUIRE(res.outcome.regular());
    CHECK(res.matches_oracle);
    CHECK(*res.outcome.element == golden_gamma_element());
  }
}

TEST_CASE("sweep of all sixteen diagrams of (2,2)", "[ribbon]") {
  for (int mask = 0; mask < 16; ++mask) {
    ConnectionDiagram d = square22(mask);
    const bool valid = validity_check(d).valid;
    FullLimitResult res = full_limit(d);
    CHECK(valid == res.outcome.regular());
    if (res.outcome.regular()) CHECK(res.matches_oracle);
  }
}

TEST_CASE("free edges are inconsequential", "[ribbon]") {
  ConnectionDiagram plain(column_tableau(Partition({3, 1})));
  ConnectionDiagram with_free = plain;
  with_free.add_edge(Box{1, 2}, Box{1, 3});
  CHECK(with_free.is_free_edge(ConnectionDiagram::make_edge(Box{1, 2}, Box{1, 3})));
  CHECK(!with_free.is_free_edge(ConnectionDiagram::make_edge(Box{1, 1}, Box{1, 2})));
  CHECK(with_free.normalized() == plain);
  CHECK(validity_check(plain).valid == validity_check(with_free).valid);
  FullLimitResult a = full_limit(plain), b = full_limit(with_free);
  REQUIRE(a.outcome.regular());
  REQUIRE(b.outcome.regular());
  CHECK(*a.outcome.element == *b.outcome.element);
}

TEST_CASE("chain reduction basics", "[ribbon]") {
  // the column diagram reduces in zero steps
  ConnectionDiagram column = square22(kLV | kRV);
  auto chain = chain_reduce(column);
  CHECK(chain.size() == 1);

  // the row diagram of (2,2) walks around the circle to the column diagram
  auto chain2 = chain_reduce(square22(kTH | kBH));
  CHECK(chain2.size() >= 5);  // type 4 is four circle steps from type 0
  CHECK(chain2.front() == square22(kTH | kBH));
  CHECK(chain2.back() == column);
  for (size_t i = 0; i < chain2.size(); ++i) {
    CHECK(validity_check(chain2[i]).valid);
    if (i) {
      std::vector<ConnectionDiagram::Edge> diff;
      std::set_symmetric_difference(
          chain2[i].edges().begin(), chain2[i].edges().end(),
          chain2[i - 1].edges().begin(), chain2[i - 1].edges().end(),
          std::back_inserter(diff));
      CHECK(diff.size() == 1);
    }
  }
  CHECK_THROWS_AS(chain_reduce(square22(kTH | kRV)), std::invalid_argument);
}

TEST_CASE("chain reduction of every valid (2,2) and (3,3) diagram", "[ribbon]") {
  for (int mask = 0; mask < 16; ++mask) {
    if (!validity_check(square22(mask)).valid) continue;
    auto chain = chain_reduce(square22(mask));
    CHECK(chain.back() == square22(kLV | kRV));
    for (const auto& d : chain) CHECK(validity_check(d).valid);
  }
  const auto edges33 = ConnectionDiagram::all_edges(Partition({3, 3}));
  REQUIRE(edges33.size() == 7);
  int valid_count = 0;
  for (int mask = 0; mask < (1 << 7); ++mask) {
    ConnectionDiagram d(column_tableau(Partition({3, 3})));
    for (size_t i = 0; i < edges33.size(); ++i)
      if (mask & (1 << i)) d.add_edge(edges33[i].first, edges33[i].second);
    if (!validity_check(d).valid) continue;
    ++valid_count;
    auto chain = chain_reduce(d);
    for (const auto& step : chain) CHECK(validity_check(step).valid);
  }
  CHECK(valid_count > 0);
}

TEST_CASE("the 4x4 worked diagram", "[ribbon]") {
  ConnectionDiagram d(column_tableau(Partition({4, 4, 4, 4})));
  // verticals
  d.add_edge(Box{3, 1}, Box{4, 1});
  d.add_edge(Box{1, 2}, Box{2, 2});
  d.add_edge(Box{2, 2}, Box{3, 2});
  d.add_edge(Box{2, 3}, Box{3, 3});
  d.add_edge(Box{3, 3}, Box{4, 3});
  d.add_edge(Box{3, 4}, Box{4, 4});
  // horizontals
  d.add_edge(Box{3, 1}, Box{3, 2});
  d.add_edge(Box{4, 2}, Box{4, 3});
  d.add_edge(Box{2, 3}, Box{2, 4});

  // published square types: degree 1 grid and degree 2 grid
  auto grid = detail::grid_of(d);
  const int want1[3][3] = {{7, 1, 5}, {6, 0, 2}, {2, 6, 0}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(grid.by_degree.at(1).at(Box{i, j}) == want1[i - 1][j - 1]);
  const int want2[2][2] = {{7, 1}, {6, 0}};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      CHECK(grid.by_degree.at(2).at(Box{i, j}) == want2[i - 1][j - 1]);

  CHECK(validity_check(d).valid);
  auto chain = chain_reduce(d);
  CHECK(chain.size() == 10);  // nine toggles to the column diagram
  for (const auto& step : chain) CHECK(validity_check(step).valid);
  CHECK(chain.back().edges().size() == 12);
}
