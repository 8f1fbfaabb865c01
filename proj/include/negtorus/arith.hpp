#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace negtorus {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n/d; the two-argument cpp_rational constructor mishandles signs in Boost 1.74
inline Rational ratio(const Int& n, const Int& d) {
  if (d == 0) throw std::domain_error("ratio: zero denominator");
  Rational r(n);
  r /= Rational(d);
  return r;
}

// raised when an identity that must hold by construction fails
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// coefficients of [c0,...,cm] = c0 - 1/(c1 - 1/(... - 1/cm)), all >= 2
struct NegCF {
  std::vector<std::int64_t> coeffs;
  bool operator==(const NegCF&) const = default;
};

struct TorusKnotParams {
  std::int64_t p = 0, q = 0;
  std::int64_t pPrime = 0, qPrime = 0;
  std::int64_t n = 0, k = 0;
  std::int64_t C = 0, D = 0;
};

struct CfeSplit {
  NegCF cf1, cf2;
  Rational inv1, inv2_trunc;  // witness: inv1 + inv2_trunc == 1
};

NegCF neg_cf(const Int& num, const Int& den);
NegCF neg_cf(std::int64_t num, std::int64_t den);

// numerator/denominator of an arbitrary integer sequence, zero and one entries allowed;
// the pair is (N, D) with value N/D, D may be 0
std::pair<Int, Int> cf_fraction(const std::vector<std::int64_t>& cs);
Rational eval_cf(const NegCF& cf);
// 1/[cs], with 1/[] = 0 and 1/(N/0) = 0
Rational cf_inverse(const std::vector<std::int64_t>& cs);

TorusKnotParams torus_knot_params(std::int64_t p, std::int64_t q);
CfeSplit lemma_cfe_split(const TorusKnotParams& tk);

Int honda_count(const Int& u, const Int& v);
Int honda_count(const NegCF& cf);

Int mod_inverse(const Int& a, const Int& m);
std::string to_string(const NegCF& cf);

}  // namespace negtorus
