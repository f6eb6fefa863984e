#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dginv/generators.hpp"
#include "dginv/matching.hpp"
#include "fixtures.hpp"

using dginv::Matrix;

TEST_CASE("2-cycle enumeration") {
  auto cycles = dginv::enumerate_two_cycles(fixtures::classd10());
  REQUIRE(cycles.size() == 10);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : cycles) pairs.emplace_back(c.u, c.v);
  CHECK(pairs == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2},
                                                  {1, 6}, {2, 3}, {2, 7}, {2, 8}, {3, 9}});

  auto single = dginv::enumerate_two_cycles(Matrix::from_rows({{0, 2}, {3, 0}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].product == 6);

  auto star = dginv::enumerate_two_cycles(fixtures::star5());
  REQUIRE(star.size() == 4);
  for (const auto& c : star) CHECK(c.u == 0);

  CHECK_THROWS_AS(dginv::enumerate_two_cycles(Matrix::from_rows({{0, 1}, {0, 0}})),
                  dginv::ClassViolation);
}

TEST_CASE("maximum matchings of the 10-vertex instance") {
  for (auto fam : {dginv::maximum_matchings_brute(fixtures::classd10()),
                   dginv::maximum_matchings_class_d(fixtures::classd10())}) {
    REQUIRE(fam.matchings.size() == 4);
    CHECK(fam.max_size == 4);
    std::vector<dginv::Rational> products;
    for (const auto& m : fam.matchings) products.push_back(m.product);
    CHECK(products == std::vector<dginv::Rational>{288, -96, -432, 144});
    CHECK(fam.delta == -96);
    CHECK_FALSE(fam.degenerate);
  }
}

TEST_CASE("single 2-cycle family") {
  auto fam = dginv::maximum_matchings(Matrix::from_rows({{0, 2}, {3, 0}}));
  REQUIRE(fam.matchings.size() == 1);
  CHECK(fam.max_size == 1);
  CHECK(fam.delta == 6);
}

TEST_CASE("brute force outside the class") {
  auto fam = dginv::maximum_matchings_brute(fixtures::symmetric5());
  CHECK(fam.max_size == 2);
  REQUIRE(fam.matchings.size() == 2);
  CHECK(fam.matchings[0].contains(0, 3));
  CHECK(fam.matchings[0].contains(1, 2));
  CHECK(fam.matchings[0].product == 16);
  CHECK(fam.matchings[1].contains(0, 4));
  CHECK(fam.matchings[1].contains(1, 2));
  CHECK(fam.matchings[1].product == 4);
  CHECK(fam.delta == 20);
}

TEST_CASE("degenerate family for an edgeless digraph") {
  auto fam = dginv::maximum_matchings_brute(Matrix(3, 3));
  CHECK(fam.degenerate);
  CHECK(fam.max_size == 0);
  REQUIRE(fam.matchings.size() == 1);
  CHECK(fam.matchings[0].cycles.empty());
  CHECK(fam.delta == 1);
}

TEST_CASE("brute force refuses above its cap") {
  CHECK_THROWS_AS(dginv::maximum_matchings_brute(Matrix(25, 25), 20), dginv::LimitError);
}

TEST_CASE("matchings covering a vertex") {
  auto fam = dginv::maximum_matchings_class_d(fixtures::classd10());
  // canonical order keeps the four matchings in product order 288, -96, -432, 144
  auto at4 = dginv::matchings_covering(fam, 4);
  REQUIRE(at4.size() == 2);
  CHECK(at4[0].product == 288);
  CHECK(at4[1].product == -96);

  auto at5 = dginv::matchings_covering(fam, 5);
  REQUIRE(at5.size() == 2);
  CHECK(at5[0].product == -432);
  CHECK(at5[1].product == 144);

  CHECK(dginv::matchings_covering(fam, 1).size() == 4);  // non-pendant: always covered
  CHECK_THROWS_AS(dginv::matchings_covering(fam, 10), std::out_of_range);
}

TEST_CASE("class engine refuses hypotheses violations") {
  CHECK_THROWS_AS(dginv::maximum_matchings_class_d(fixtures::symmetric5()),
                  dginv::ClassViolation);
  CHECK_THROWS_AS(dginv::maximum_matchings_class_d(Matrix::from_rows({{0, 1}, {0, 0}})),
                  dginv::ClassViolation);
}

TEST_CASE("both engines agree on generated instances") {
  for (int t = 0; t < 60; ++t) {
    dginv::Rng rng(500 + t);
    Matrix a = dginv::gen_random_class_d(14, rng, {});
    auto fast = dginv::maximum_matchings_class_d(a);
    auto brute = dginv::maximum_matchings_brute(a);
    CHECK(fast == brute);
  }
}

TEST_CASE("maximum matchings use only pendant cycles, one per non-pendant") {
  for (int t = 0; t < 40; ++t) {
    dginv::Rng rng(600 + t);
    Matrix a = dginv::gen_random_class_d(13, rng, {});
    auto d = dginv::build_digraph(a);
    auto s = dginv::analyze_structure(d);
    auto fam = dginv::maximum_matchings_brute(a);

    if (a.rows() > 2) CHECK(fam.max_size == static_cast<int>(s.nonpendants.size()));
    for (const auto& m : fam.matchings) {
      for (const auto& c : m.cycles) CHECK((d.pendant(c.u) || d.pendant(c.v)));
      for (int q : s.nonpendants) CHECK(m.covers(q));
    }
  }
}

TEST_CASE("pendants sharing a neighbor partition the family") {
  auto fam = dginv::maximum_matchings_class_d(fixtures::classd10());
  // pendants 4 and 5 (labels 5 and 6) share neighbor 0
  auto at4 = dginv::matchings_covering(fam, 4);
  auto at5 = dginv::matchings_covering(fam, 5);
  CHECK(at4.size() + at5.size() == fam.matchings.size());
  for (const auto& m : at4)
    for (const auto& other : at5) CHECK_FALSE(m == other);

  for (int t = 0; t < 20; ++t) {
    dginv::Rng rng(700 + t);
    Matrix a = dginv::gen_random_class_d(12, rng, {});
    if (a.rows() == 2) continue;
    auto d = dginv::build_digraph(a);
    auto s = dginv::analyze_structure(d);
    auto f = dginv::maximum_matchings_class_d(a);
    for (size_t k = 0; k < s.nonpendants.size(); ++k) {
      size_t total = 0;
      for (int p : s.pendant_neighbors[k]) total += dginv::matchings_covering(f, p).size();
      CHECK(total == f.matchings.size());  // union is everything, pairwise disjoint
    }
  }
}

TEST_CASE("delta factors through the pendant cycle sums") {
  for (int t = 0; t < 30; ++t) {
    dginv::Rng rng(800 + t);
    Matrix a = dginv::gen_random_class_d(13, rng, {});
    if (a.rows() == 2) continue;
    auto s = dginv::analyze_structure(dginv::build_digraph(a));
    auto fam = dginv::maximum_matchings_class_d(a);
    auto sums = dginv::pendant_cycle_sums(a, s);
    dginv::Rational prod = 1;
    for (const auto& alpha : sums.alpha) prod *= alpha;
    CHECK(fam.delta == prod);
    CHECK(fam.matchings.size() == [&] {
      size_t count = 1;
      for (const auto& pn : s.pendant_neighbors) count *= pn.size();
      return count;
    }());
  }
}
