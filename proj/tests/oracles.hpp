#pragma once
// test-side oracles, written independently of the library code paths

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace oracle {

// entrywise equality; Eigen's operator== does not compile for Boost 1.74 numbers
template <class M>
bool same(const M& a, const M& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

using BigInt = boost::multiprecision::cpp_int;
using Frac = boost::rational<std::int64_t>;

// back-to-front evaluation of c0 - 1/(c1 - 1/(...))
inline Frac cf_value(const std::vector<std::int64_t>& c) {
  Frac x(c.back());
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) x = Frac(*it) - Frac(1) / x;
  return x;
}

// smallest 0 < p' < p with p q' - q p' = 1 for an integer q'
inline std::pair<std::int64_t, std::int64_t> bezout(std::int64_t p, std::int64_t q) {
  for (std::int64_t pp = 1; pp < p; ++pp)
    if ((1 + q * pp) % p == 0) return {pp, (1 + q * pp) / p};
  return {0, 0};
}

// Laplace expansion, fine for n <= 7
inline BigInt laplace_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    BigInt t = BigInt(m[0][c]) * laplace_det(minor);
    d += (c % 2 == 0) ? t : BigInt(-t);
  }
  return d;
}

// Alexander polynomial of T(p,q) from the semigroup <p,q>:
// Delta(t) = 1 + (t - 1) * sum_{gaps g} t^g  (unsymmetrized, degree 2g)
inline std::vector<std::pair<std::int64_t, std::int64_t>> alexander_semigroup(std::int64_t p, std::int64_t q) {
  const std::int64_t conductor = (p - 1) * (q - 1);
  std::vector<bool> in(conductor + 1, false);
  for (std::int64_t a = 0; a * p <= conductor; ++a)
    for (std::int64_t b = 0; a * p + b * q <= conductor; ++b) in[a * p + b * q] = true;
  std::vector<std::int64_t> coeff(conductor + 1, 0);
  coeff[0] = 1;
  for (std::int64_t g = 0; g < conductor; ++g)
    if (!in[g]) {
      coeff[g + 1] += 1;
      coeff[g] -= 1;
    }
  // symmetrize around conductor/2, highest exponent first
  std::vector<std::pair<std::int64_t, std::int64_t>> r;
  for (std::int64_t e = conductor; e >= 0; --e)
    if (coeff[e]) r.emplace_back(e - conductor / 2, coeff[e]);
  return r;
}

// brute-force count of rotation assignments on a chain of unknots with framings -a_i (a_i >= 2)
inline std::int64_t honda_brute(const std::vector<std::int64_t>& a) {
  std::int64_t n = 1;
  for (auto x : a) {
    std::int64_t c = 0;
    const std::int64_t tb = -x + 1;
    for (std::int64_t r = tb + 1; r <= -tb - 1; r += 2) ++c;
    n *= c;
  }
  return n;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t qmax, std::int64_t pqmax) {
  std::vector<std::pair<std::int64_t, std::int64_t>> r;
  for (std::int64_t p = 2; p <= qmax; ++p)
    for (std::int64_t q = p + 1; q <= qmax; ++q)
      if (std::gcd(p, q) == 1 && p * q <= pqmax) r.emplace_back(p, q);
  return r;
}

}  // namespace oracle
