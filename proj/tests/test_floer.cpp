#include <doctest.h>

#include "negtorus/floer.hpp"
#include "oracles.hpp"

using namespace negtorus;

namespace {

std::multiset<std::int64_t> orders(const GradedModule& m) {
  std::multiset<std::int64_t> s;
  for (const auto& t : m.towers)
    if (t.order) s.insert(*t.order);
  return s;
}

}  // namespace

TEST_CASE("alexander polynomial against the semigroup formula") {
  for (auto [p, q] : oracle::coprime_pairs(40, 1600)) {
    auto a = alexander(p, q);
    REQUIRE(alexander_terms(a) == oracle::alexander_semigroup(p, q));
  }
}

TEST_CASE("alexander of the trefoil") {
  auto a = alexander(2, 3);
  CHECK(a.exponents == std::vector<std::int64_t>{1, 0, -1});
  CHECK(a.coefficients == std::vector<int>{1, -1, 1});
}

TEST_CASE("staircase shape") {
  auto c = staircase(alexander(3, 4));
  CHECK(c.generators.size() == 5);
  CHECK(differential_squares_to_zero(c));
  CHECK(c.generators.front().A == 3);
  CHECK(c.generators.front().M == 0);
}

TEST_CASE("tower multisets") {
  for (std::int64_t n = 2; n <= 10; ++n) {
    auto m = hfk_minus(2, 2 * n - 1);
    const std::vector<std::int64_t> ones(n - 1, 1);
    REQUIRE(orders(m) == std::multiset<std::int64_t>(ones.begin(), ones.end()));
    REQUIRE(infinite_tower(m).has_value());
  }
  for (std::int64_t n = 2; n <= 8; ++n) {
    std::multiset<std::int64_t> w;
    for (std::int64_t i = 1; i < n; ++i) w.insert(i);
    REQUIRE(orders(hfk_minus(n, n + 1)) == w);
  }
  CHECK(orders(hfk_minus(5, 8)) == std::multiset<std::int64_t>{1, 1, 1, 1, 1, 1, 2, 2, 4});
}

TEST_CASE("T(3,4) towers") {
  auto m = hfk_minus(3, 4);
  REQUIRE(m.towers.size() == 3);
  auto inf = infinite_tower(m);
  REQUIRE(inf);
  CHECK(inf->A == -3);
  CHECK(inf->M == -6);
  auto b = tower_bottoms(m);
  CHECK(std::find(b.begin(), b.end(), Bidegree{3, 0}) != b.end());
  CHECK(std::find(b.begin(), b.end(), Bidegree{-1, -4}) != b.end());
  CHECK(u_annihilated(m, Bidegree{3, 0}));
  CHECK(u_annihilated(m, Bidegree{-1, -4}));
  CHECK_FALSE(u_annihilated(m, Bidegree{0, -2}));  // top of the order-2 tower
}

TEST_CASE("homology equals the closed form") {
  for (auto [p, q] : oracle::coprime_pairs(25, 625)) REQUIRE(hfk_minus(p, q) == hfk_closed_form(p, q));
}

TEST_CASE("free tower top sits at (-g, -2g)") {
  for (auto [p, q] : oracle::coprime_pairs(20, 400)) {
    const std::int64_t g = (p - 1) * (q - 1) / 2;
    auto inf = infinite_tower(hfk_minus(p, q));
    REQUIRE(inf);
    REQUIRE(inf->A == -g);
    REQUIRE(inf->M == -2 * g);
  }
}

TEST_CASE("euler characteristic") {
  for (auto [p, q] : oracle::coprime_pairs(20, 400))
    REQUIRE(euler_characteristic(hfk_minus(p, q)) == oracle::alexander_semigroup(p, q));
}

TEST_CASE("graded homology of a single arrow") {
  GradedMatrix d;
  d.rows = {{0, 0}};
  d.cols = {{0, 1}};
  d.entries = {{1}};
  CHECK(graded_homology(d).towers.empty());
}

TEST_CASE("module json roundtrip") {
  auto m = hfk_minus(5, 8);
  nlohmann::json j = m;
  CHECK(j.get<GradedModule>() == m);
}

TEST_CASE("matching against transverse classes") {
  for (auto [p, q] : oracle::coprime_pairs(12, 60)) {
    auto r = match_invariants(p, q);
    REQUIRE(r.ok());
    REQUIRE(r.realized.size() + r.unrealized.size() == tower_bottoms(hfk_minus(p, q)).size());
  }
}
