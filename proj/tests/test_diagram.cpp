#include <doctest.h>

#include <set>

#include "negtorus/diagram.hpp"
#include "oracles.hpp"

using namespace negtorus;

TEST_CASE("chain specs for T(5,-8)") {
  auto f = figure2_shape(torus_knot_params(5, 8));
  CHECK(f.spec1.tbs == std::vector<std::int64_t>{-3, -1});
  CHECK(f.spec2.tbs == std::vector<std::int64_t>{-2, -2, -1});
}

TEST_CASE("second chain ends at tb = -n+1") {
  for (auto [p, q] : oracle::coprime_pairs(40, 1600)) {
    auto tk = torus_knot_params(p, q);
    auto f = figure2_shape(tk);
    REQUIRE(f.spec2.tbs.back() == -tk.n + 1);
    REQUIRE(f.spec1.tbs.front() == -f.cf1.coeffs.front());
  }
}

TEST_CASE("contact surgery expansion") {
  // r = -8/5: leader tb = -[2,3,2]_0, the rest -c+1
  CHECK(expand_contact_surgery(Rational(-8) / 5).tbs == std::vector<std::int64_t>{-2, -2, -1});
  CHECK_THROWS(expand_contact_surgery(Rational(-1)));
}

TEST_CASE("rotation ranges") {
  CHECK(rotation_range(-1) == std::vector<std::int64_t>{0});
  CHECK(rotation_range(-4) == std::vector<std::int64_t>{-3, -1, 1, 3});
  CHECK(legal_rotation(-3, 2));
  CHECK_FALSE(legal_rotation(-3, 1));
  CHECK_FALSE(legal_rotation(-3, 4));
  CHECK_FALSE(legal_rotation(0, 1));
  CHECK(is_fully_positive(-3, 2));
  CHECK(is_fully_negative(-3, -2));
}

TEST_CASE("enumeration size, order and validity") {
  for (auto [p, q] : oracle::coprime_pairs(20, 120))
    for (std::int64_t ell = 0; ell <= 3; ++ell) {
      auto tk = torus_knot_params(p, q);
      auto v = enumerate_presentations(tk, ell);
      // independent count: product of rotation range sizes times ell+1
      auto f = figure2_shape(tk);
      std::int64_t want = ell + 1;
      for (auto t : f.spec1.tbs) want *= static_cast<std::int64_t>(rotation_range(t).size());
      for (auto t : f.spec2.tbs) want *= static_cast<std::int64_t>(rotation_range(t).size());
      REQUIRE(static_cast<std::int64_t>(v.size()) == want);
      REQUIRE(presentation_count(tk, ell) == want);
      std::set<Presentation> uniq(v.begin(), v.end());
      REQUIRE(uniq.size() == v.size());
      for (const auto& pr : v) {
        REQUIRE(is_valid(pr));
        REQUIRE(pr.ell() == ell);
      }
    }
  CHECK(presentation_count(torus_knot_params(5, 8), 0) == 12);
}

TEST_CASE("ambient tightness counts 2(n-1) at ell = 0") {
  for (auto [p, q] : oracle::coprime_pairs(30, 300)) {
    auto tk = torus_knot_params(p, q);
    std::size_t tight = 0, strict = 0;
    for (const auto& pr : enumerate_presentations(tk, 0)) {
      tight += is_ambient_tight(pr);
      strict += is_balanced_strict(pr);
      if (is_balanced_strict(pr)) REQUIRE(is_ambient_tight(pr));
    }
    REQUIRE(tight == static_cast<std::size_t>(2 * (tk.n - 1)));
    REQUIRE(strict == 2);
  }
}

TEST_CASE("conjugation and stabilization") {
  auto v = enumerate_presentations(torus_knot_params(3, 7), 2);
  for (const auto& pr : v) {
    REQUIRE(conjugate(conjugate(pr)) == pr);
    REQUIRE(is_valid(conjugate(pr)));
    REQUIRE(is_ambient_tight(conjugate(pr)) == is_ambient_tight(pr));
    auto s = stabilize(pr, Sign::Negative);
    REQUIRE(s.stab_neg == pr.stab_neg + 1);
    REQUIRE(s.ell() == pr.ell() + 1);
  }
}

TEST_CASE("json roundtrip") {
  for (const auto& pr : enumerate_presentations(torus_knot_params(4, 7), 1)) {
    nlohmann::json j = pr;
    Presentation back = j.get<Presentation>();
    REQUIRE(back == pr);
    REQUIRE(canonical_key(back) == canonical_key(pr));
  }
  CHECK_THROWS(nlohmann::json::parse(R"({"p":2,"q":3,"chains":[],"stab_pos":0,"stab_neg":0})").get<Presentation>());
}

TEST_CASE("invalid presentations") {
  auto pr = enumerate_presentations(torus_knot_params(2, 3), 0).front();
  auto bad = pr;
  bad.chain1.rots[0] = 5;
  CHECK_FALSE(is_valid(bad));
  bad = pr;
  bad.q = 4;
  CHECK_FALSE(is_valid(bad));
  bad = pr;
  bad.stab_pos = -1;
  CHECK_FALSE(is_valid(bad));
}
