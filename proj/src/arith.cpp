#include "negtorus/arith.hpp"

#include <numeric>
#include <sstream>

namespace negtorus {

NegCF neg_cf(const Int& num, const Int& den) {
  if (den < 1 || num <= den)
    throw std::invalid_argument("neg_cf: need num > den >= 1");
  if (gcd(num, den) != 1)
    throw std::invalid_argument("neg_cf: arguments not coprime");
  NegCF out;
  Int n = num, d = den;
  while (d != 0) {
    Int a = (n + d - 1) / d;
    out.coeffs.push_back(static_cast<std::int64_t>(a));
    Int next = a * d - n;
    n = d;
    d = next;
  }
  return out;
}

NegCF neg_cf(std::int64_t num, std::int64_t den) { return neg_cf(Int(num), Int(den)); }

std::pair<Int, Int> cf_fraction(const std::vector<std::int64_t>& cs) {
  Int N = 1, D = 0;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    Int t = Int(*it) * N - D;
    D = N;
    N = t;
  }
  return {N, D};
}

Rational eval_cf(const NegCF& cf) {
  auto [N, D] = cf_fraction(cf.coeffs);
  return ratio(N, D);
}

Rational cf_inverse(const std::vector<std::int64_t>& cs) {
  if (cs.empty()) return Rational(0);
  auto [N, D] = cf_fraction(cs);
  if (N == 0) return Rational(0);
  return ratio(D, N);
}

Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    Int qq = old_r / r;
    Int t = old_r - qq * r;
    old_r = r;
    r = t;
    t = old_s - qq * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  Int res = old_s % m;
  if (res < 0) res += m;
  return res;
}

TorusKnotParams torus_knot_params(std::int64_t p, std::int64_t q) {
  if (p < 2 || q <= p) throw std::invalid_argument("torus_knot_params: need 2 <= p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus_knot_params: p, q not coprime");
  TorusKnotParams t;
  t.p = p;
  t.q = q;
  // p q' - q p' = 1  <=>  p' = -q^{-1} mod p
  auto qinv = static_cast<std::int64_t>(mod_inverse(Int(q % p), Int(p)));
  t.pPrime = (p - qinv) % p;
  if (t.pPrime == 0) t.pPrime = p;  // only when p == 1, excluded above
  t.qPrime = (1 + q * t.pPrime) / p;
  t.n = (q + p - 1) / p;
  t.k = t.n * p - q;
  if (t.k == 0) throw VerificationError("torus_knot_params: p divides q");
  // C k = D p + 1 with 0 < C < p
  t.C = static_cast<std::int64_t>(mod_inverse(Int(t.k), Int(p)));
  t.D = (t.C * t.k - 1) / p;

  if (p * t.qPrime - q * t.pPrime != 1 || t.pPrime <= 0 || t.pPrime >= p || t.qPrime <= 0)
    throw VerificationError("torus_knot_params: p q' - q p' != 1");
  if (t.n < 2 || t.k <= 0 || t.k >= p || std::gcd(p, t.k) != 1)
    throw VerificationError("torus_knot_params: bad (n,k)");
  if (t.C * t.k != t.D * p + 1 || t.C <= 0 || t.D < 0)
    throw VerificationError("torus_knot_params: C k != D p + 1");
  if (t.pPrime != t.C || t.qPrime != t.C * t.n - t.D)
    throw VerificationError("torus_knot_params: p' != C or q' != Cn - D");
  return t;
}

CfeSplit lemma_cfe_split(const TorusKnotParams& tk) {
  CfeSplit s;
  s.cf1 = neg_cf(tk.p, tk.p - tk.C);
  s.cf2 = neg_cf(tk.n * tk.p - tk.k, tk.C * tk.n - tk.D);
  if (s.cf2.coeffs.back() != tk.n)
    throw VerificationError("lemma_cfe_split: second expansion does not end in n");
  std::vector<std::int64_t> trunc(s.cf2.coeffs.begin(), s.cf2.coeffs.end() - 1);
  s.inv1 = cf_inverse(s.cf1.coeffs);
  s.inv2_trunc = cf_inverse(trunc);
  if (s.inv1 + s.inv2_trunc != 1)
    throw VerificationError("lemma_cfe_split: inverses do not sum to 1");
  return s;
}

Int honda_count(const NegCF& cf) {
  Int r = 1;
  for (auto a : cf.coeffs) r *= (a - 1);
  return r;
}

Int honda_count(const Int& u, const Int& v) {
  if (v <= 0 || v >= u) throw std::invalid_argument("honda_count: need 0 < v < u");
  return honda_count(neg_cf(u, v));
}

std::string to_string(const NegCF& cf) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < cf.coeffs.size(); ++i) os << (i ? "," : "") << cf.coeffs[i];
  os << ']';
  return os.str();
}

}  // namespace negtorus
