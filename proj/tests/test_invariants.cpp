#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "negtorus/classify.hpp"
#include "negtorus/invariants.hpp"
#include "oracles.hpp"

using namespace negtorus;

namespace {

// floating-point reconstruction of the diagram: c1 c2 lead1 lead2 tails..., optionally L
struct DoubleModel {
  Eigen::MatrixXd Q;
  Eigen::VectorXd l;
};

DoubleModel double_model(const Presentation& pr, bool with_knot, double knot_framing) {
  const auto& a = pr.chain1.tbs;
  const auto& b = pr.chain2.tbs;
  const int n = 4 + static_cast<int>(a.size() - 1 + b.size() - 1) + (with_knot ? 1 : 0);
  DoubleModel m;
  m.Q = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) m.Q(i, j) = -1;
  m.Q(2, 2) = static_cast<double>(a[0] - 1);
  m.Q(3, 3) = static_cast<double>(b[0] - 1);
  int idx = 4;
  int prev = 2;
  for (std::size_t j = 1; j < a.size(); ++j, ++idx) {
    m.Q(idx, idx) = static_cast<double>(a[j] - 1);
    m.Q(idx, prev) = m.Q(prev, idx) = 1;
    prev = idx;
  }
  prev = 3;
  for (std::size_t j = 1; j < b.size(); ++j, ++idx) {
    m.Q(idx, idx) = static_cast<double>(b[j] - 1);
    m.Q(idx, prev) = m.Q(prev, idx) = 1;
    prev = idx;
  }
  m.l = Eigen::VectorXd::Zero(with_knot ? n - 1 : n);
  for (int i = 0; i < 4; ++i) m.l(i) = -1;
  if (with_knot) {
    m.Q(n - 1, n - 1) = knot_framing;
    for (int i = 0; i < 4; ++i) m.Q(i, n - 1) = m.Q(n - 1, i) = -1;
  }
  return m;
}

Eigen::VectorXd rot_vector(const Presentation& pr) {
  const int n = 4 + static_cast<int>(pr.chain1.size() - 1 + pr.chain2.size() - 1);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
  r(2) = static_cast<double>(pr.chain1.rots[0]);
  r(3) = static_cast<double>(pr.chain2.rots[0]);
  int idx = 4;
  for (std::size_t j = 1; j < pr.chain1.size(); ++j) r(idx++) = static_cast<double>(pr.chain1.rots[j]);
  for (std::size_t j = 1; j < pr.chain2.size(); ++j) r(idx++) = static_cast<double>(pr.chain2.rots[j]);
  return r;
}

struct Triple {
  std::int64_t tb, rot, d3;
};

Triple double_invariants(const Presentation& pr) {
  auto base = double_model(pr, false, 0);
  auto withL = double_model(pr, true, 0);
  const double tb = -1.0 - static_cast<double>(pr.ell()) + withL.Q.determinant() / base.Q.determinant();
  Eigen::VectorXd r = rot_vector(pr);
  Eigen::VectorXd qinv_l = base.Q.partialPivLu().solve(base.l);
  const double rot = static_cast<double>(pr.stab_pos - pr.stab_neg) - r.dot(qinv_l);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(base.Q);
  int sigma = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) sigma += es.eigenvalues()(i) > 0 ? 1 : -1;
  const double c2 = r.dot(base.Q.partialPivLu().solve(r));
  const double n = static_cast<double>(base.Q.rows());
  const double d3 = (c2 - 3 * sigma - 2 * (1 + n)) / 4 + 2.5;
  return {std::llround(tb), std::llround(rot), std::llround(d3)};
}

}  // namespace

TEST_CASE("tb, rot, d3 against a floating-point reconstruction") {
  for (auto [p, q] : oracle::coprime_pairs(20, 80)) {
    for (std::int64_t ell = 0; ell <= 2; ++ell)
      for (const auto& pr : enumerate_presentations(torus_knot_params(p, q), ell)) {
        auto got = compute_invariants(pr);
        auto want = double_invariants(pr);
        REQUIRE(got.tb == want.tb);
        REQUIRE(got.rot == want.rot);
        REQUIRE(got.d3 == want.d3);
        REQUIRE(got.tb == -p * q - ell);
      }
  }
}

TEST_CASE("linking matrix of the ambient diagram is unimodular") {
  for (auto [p, q] : oracle::coprime_pairs(40, 600)) {
    auto lm = linking_matrix(figure2_shape(torus_knot_params(p, q)), false);
    REQUIRE(abs(bareiss_determinant(lm.Q)) == 1);
    for (int i = 0; i < lm.Q.rows(); ++i)
      for (int j = 0; j < i; ++j) REQUIRE(lm.Q(i, j) == lm.Q(j, i));
  }
}

TEST_CASE("surgered homology") {
  for (auto [p, q] : oracle::coprime_pairs(30, 200))
    for (std::int64_t ell = 0; ell <= 3; ++ell) {
      auto rep = validate_smooth_topology(torus_knot_params(p, q), ell);
      REQUIRE(rep.ok());
      REQUIRE(rep.surgered_order == Int(p * q + 1 + ell));
    }
}

TEST_CASE("linking form test") {
  CHECK(linking_form_matches(Int(4), Int(7), Int(2)));
  CHECK(linking_form_matches(Int(1), Int(5), Int(4)));
  CHECK_FALSE(linking_form_matches(Int(2), Int(5), Int(1)));
}

TEST_CASE("T(5,-8) non-vanishing invariants") {
  std::set<std::pair<std::int64_t, std::int64_t>> got;
  for (const auto& pr : enumerate_presentations(torus_knot_params(5, 8), 0))
    if (nonvanishing_condition(pr)) {
      auto c = compute_invariants(pr);
      CHECK(c.tb == -40);
      got.emplace(c.A, c.M);
    }
  CHECK(got == std::set<std::pair<std::int64_t, std::int64_t>>{{-12, -26}, {-2, -12}, {4, -6}, {14, 0}});
}

TEST_CASE("bigrading") {
  auto b = bigrading(-40, -15, 2);
  CHECK(b.A == -12);
  CHECK(b.M == -26);
  CHECK_THROWS(bigrading(-40, -14, 2));
}

TEST_CASE("tight presentations have d3 = 0 and the two balanced ones are conjugate") {
  for (auto [p, q] : oracle::coprime_pairs(30, 120))
    for (const auto& pr : enumerate_presentations(torus_knot_params(p, q), 0))
      if (is_ambient_tight(pr)) REQUIRE(compute_d3(pr) == 0);
}

TEST_CASE("tight rotation numbers at max tb") {
  // max-tb rotation sets of the negative torus knots in the standard sphere
  auto rots = [](std::int64_t p, std::int64_t q) {
    std::set<std::int64_t> s;
    for (const auto& pr : enumerate_presentations(torus_knot_params(p, q), 0))
      if (is_ambient_tight(pr)) s.insert(compute_rot(pr));
    return s;
  };
  CHECK(rots(2, 3) == std::set<std::int64_t>{-1, 1});
  CHECK(rots(2, 5) == std::set<std::int64_t>{-3, -1, 1, 3});
  CHECK(rots(3, 7) == std::set<std::int64_t>{-4, -2, 2, 4});
}
