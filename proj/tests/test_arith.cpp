#include <doctest.h>

#include "negtorus/arith.hpp"
#include "oracles.hpp"

using namespace negtorus;

TEST_CASE("neg_cf small values") {
  CHECK(neg_cf(8, 5).coeffs == std::vector<std::int64_t>{2, 3, 2});
  CHECK(neg_cf(7, 1).coeffs == std::vector<std::int64_t>{7});
  CHECK(neg_cf(5, 4).coeffs == std::vector<std::int64_t>{2, 2, 2, 2});
  CHECK(neg_cf(41, 23).coeffs == std::vector<std::int64_t>{2, 5, 3, 2});
  CHECK_THROWS_AS(neg_cf(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(neg_cf(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(neg_cf(3, 0), std::invalid_argument);
}

TEST_CASE("neg_cf agrees with back-to-front evaluation") {
  for (std::int64_t u = 2; u <= 150; ++u)
    for (std::int64_t v = 1; v < u; ++v) {
      if (std::gcd(u, v) != 1) continue;
      auto c = neg_cf(u, v).coeffs;
      for (auto x : c) REQUIRE(x >= 2);
      REQUIRE(bool(oracle::cf_value(c) == oracle::Frac(u, v)));
    }
}

TEST_CASE("cf_fraction handles zero and one entries") {
  CHECK(cf_fraction({2, 1}) == std::make_pair(Int(1), Int(1)));
  CHECK(cf_fraction({1, 1}) == std::make_pair(Int(0), Int(1)));
  CHECK(cf_fraction({0}) == std::make_pair(Int(0), Int(1)));
  CHECK(cf_inverse({}) == 0);
  CHECK(cf_inverse({1, 1}) == 0);
  CHECK(cf_inverse({2}) == ratio(1, 2));
}

TEST_CASE("ratio normalizes signs") {
  CHECK(ratio(-3, 5) == Rational(-3) / 5);
  CHECK(ratio(6, -4) == Rational(-3) / 2);
  CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("torus knot parameters match brute force") {
  for (auto [p, q] : oracle::coprime_pairs(60, 3600)) {
    auto tk = torus_knot_params(p, q);
    auto [pp, qq] = oracle::bezout(p, q);
    REQUIRE(tk.pPrime == pp);
    REQUIRE(tk.qPrime == qq);
    std::int64_t n = 1;
    while (n * p < q) ++n;
    REQUIRE(tk.n == n);
    REQUIRE(tk.k == n * p - q);
    REQUIRE((tk.C * tk.k - 1) % p == 0);
    REQUIRE(tk.C == tk.pPrime);
  }
  CHECK_THROWS_AS(torus_knot_params(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(torus_knot_params(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(torus_knot_params(1, 3), std::invalid_argument);
}

TEST_CASE("T(5,-8) parameters") {
  auto tk = torus_knot_params(5, 8);
  CHECK(tk.pPrime == 3);
  CHECK(tk.qPrime == 5);
  CHECK(tk.n == 2);
  CHECK(tk.k == 2);
  auto s = lemma_cfe_split(tk);
  CHECK(s.cf1.coeffs == std::vector<std::int64_t>{3, 2});
  CHECK(s.cf2.coeffs == std::vector<std::int64_t>{2, 3, 2});
}

TEST_CASE("complementary split, independent check") {
  for (auto [p, q] : oracle::coprime_pairs(80, 6400)) {
    auto tk = torus_knot_params(p, q);
    auto s = lemma_cfe_split(tk);
    std::vector<std::int64_t> trunc(s.cf2.coeffs.begin(), s.cf2.coeffs.end() - 1);
    auto a = oracle::Frac(1) / oracle::cf_value(s.cf1.coeffs);
    auto b = trunc.empty() ? oracle::Frac(0) : oracle::Frac(1) / oracle::cf_value(trunc);
    REQUIRE(bool(a + b == oracle::Frac(1)));
    REQUIRE(s.cf2.coeffs.back() == tk.n);
  }
}

TEST_CASE("honda_count is the product over the chain") {
  for (std::int64_t u = 2; u <= 120; ++u)
    for (std::int64_t v = 1; v < u; ++v) {
      if (std::gcd(u, v) != 1) continue;
      REQUIRE(honda_count(Int(u), Int(v)) == oracle::honda_brute(neg_cf(u, v).coeffs));
    }
  CHECK(honda_count(Int(41), Int(23)) == 8);
}

TEST_CASE("mod_inverse") {
  for (std::int64_t m = 2; m < 60; ++m)
    for (std::int64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      REQUIRE((mod_inverse(Int(a), Int(m)) * a) % m == 1);
    }
  CHECK_THROWS(mod_inverse(Int(4), Int(6)));
}
