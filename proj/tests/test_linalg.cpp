#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "negtorus/linalg.hpp"
#include "oracles.hpp"

using namespace negtorus;

namespace {

IntMat random_symmetric(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

std::vector<std::vector<std::int64_t>> rows(const IntMat& m) {
  std::vector<std::vector<std::int64_t>> r(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i][j] = static_cast<std::int64_t>(m(i, j));
  return r;
}

}  // namespace

TEST_CASE("bareiss determinant against Laplace expansion") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 6;
    IntMat m = random_symmetric(rng, n, -4, 4);
    REQUIRE(bareiss_determinant(m) == oracle::laplace_det(rows(m)));
  }
}

TEST_CASE("exact inverse") {
  std::mt19937_64 rng(12);
  int done = 0;
  while (done < 100) {
    IntMat m = random_symmetric(rng, 4, -3, 3);
    if (bareiss_determinant(m) == 0) continue;
    RatMat a = cast_exact<Rational>(m);
    RatMat inv = exact_inverse(a);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Rational s = 0;
        for (int k = 0; k < 4; ++k) s += a(i, k) * inv(k, j);
        REQUIRE(s == (i == j ? 1 : 0));
      }
    ++done;
  }
}

TEST_CASE("signature against floating eigenvalues") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 7;
    IntMat m = random_symmetric(rng, n, -5, 5);
    Eigen::MatrixXd md(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) md(i, j) = static_cast<double>(m(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(md);
    int pos = 0, neg = 0;
    for (int i = 0; i < n; ++i) {
      if (es.eigenvalues()(i) > 1e-9) ++pos;
      if (es.eigenvalues()(i) < -1e-9) ++neg;
    }
    auto [p, q] = inertia(cast_exact<Rational>(m));
    REQUIRE(p == pos);
    REQUIRE(q == neg);
  }
}

TEST_CASE("smith invariants against determinantal divisors") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    IntMat m = random_symmetric(rng, 3, -6, 6);
    auto inv = smith_invariants(m);
    // d1 = gcd of entries, d1 d2 d3 = |det|
    Int g = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g = gcd(g, Int(m(i, j)));
    Int det = abs(oracle::laplace_det(rows(m)));
    Int prod = 1;
    for (auto& x : inv) prod *= x;
    if (det != 0) {
      REQUIRE(prod == det);
    }
    REQUIRE(inv.size() == 3);
    if (g != 0) REQUIRE(inv.front() == g);
    for (std::size_t i = 1; i < inv.size(); ++i)
      if (inv[i] != 0) REQUIRE(inv[i] % inv[i - 1] == 0);
  }
}

TEST_CASE("smith of a diagonal cyclic presentation") {
  IntMat m(2, 2);
  m << 2, 0, 0, 3;
  auto inv = smith_invariants(m);
  CHECK(inv == std::vector<Int>{1, 6});
}
