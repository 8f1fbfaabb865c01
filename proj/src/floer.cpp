#include "negtorus/floer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "negtorus/classify.hpp"

namespace negtorus {

namespace {

using Poly = std::vector<std::int64_t>;  // index = exponent

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly binomial(std::int64_t deg) {  // t^deg - 1
  Poly r(static_cast<std::size_t>(deg) + 1, 0);
  r[0] = -1;
  r[deg] = 1;
  return r;
}

// exact division by a monic divisor; throws on a nonzero remainder
Poly divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw VerificationError("alexander: degree underflow");
  Poly quo(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    quo[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (auto x : num)
    if (x != 0) throw VerificationError("alexander: inexact division");
  return quo;
}

}  // namespace

AlexanderPolynomial alexander(std::int64_t p, std::int64_t q) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) throw std::invalid_argument("alexander: need coprime 2 <= p < q");
  Poly num = mul(binomial(p * q), binomial(1));
  Poly quo = divide(divide(num, binomial(p)), binomial(q));
  const std::int64_t g = (p - 1) * (q - 1) / 2;
  if (static_cast<std::int64_t>(quo.size()) - 1 != 2 * g) throw VerificationError("alexander: wrong degree");
  AlexanderPolynomial a;
  for (std::size_t i = quo.size(); i-- > 0;)
    if (quo[i] != 0) {
      a.exponents.push_back(static_cast<std::int64_t>(i) - g);
      a.coefficients.push_back(static_cast<int>(quo[i]));
    }
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    if (a.coefficients[i] != (i % 2 == 0 ? 1 : -1)) throw VerificationError("alexander: coefficients not alternating");
  return a;
}

StaircaseComplex staircase(const AlexanderPolynomial& a) {
  StaircaseComplex c;
  const auto& n = a.exponents;
  if (n.size() % 2 == 0) throw std::invalid_argument("staircase: need an odd number of terms");
  std::int64_t M = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i > 0) {
      const std::int64_t gap = n[i - 1] - n[i];
      M += (i % 2 == 1) ? -2 * gap + 1 : -1;
    }
    c.generators.push_back({n[i], M});
  }
  for (std::size_t i = 1; i < n.size(); i += 2) {
    c.arrows.push_back({i, i - 1, n[i - 1] - n[i], 0});
    c.arrows.push_back({i, i + 1, 0, n[i] - n[i + 1]});
  }
  return c;
}

bool differential_squares_to_zero(const StaircaseComplex& c) {
  std::map<std::tuple<std::size_t, std::size_t, std::int64_t, std::int64_t>, int> acc;
  for (const auto& a : c.arrows)
    for (const auto& b : c.arrows)
      if (a.to == b.from) acc[{a.from, b.to, a.u_power + b.u_power, a.v_power + b.v_power}] ^= 1;
  for (const auto& [k, v] : acc)
    if (v) return false;
  return true;
}

GradedMatrix hfk_differential(const StaircaseComplex& c) {
  const std::size_t n = c.generators.size();
  std::vector<bool> source(n, false), target(n, false);
  for (const auto& a : c.arrows)
    if (a.v_power == 0) {
      source[a.from] = true;
      target[a.to] = true;
    }
  std::vector<std::size_t> rowIdx(n, n), colIdx(n, n);
  GradedMatrix m;
  for (std::size_t i = 0; i < n; ++i) {
    if (source[i] && target[i]) throw std::invalid_argument("hfk_differential: not a two-term complex");
    if (source[i]) {
      colIdx[i] = m.cols.size();
      m.cols.push_back(c.generators[i]);
    } else {
      rowIdx[i] = m.rows.size();
      m.rows.push_back(c.generators[i]);
    }
  }
  m.entries.assign(m.rows.size(), std::vector<std::uint8_t>(m.cols.size(), 0));
  for (const auto& a : c.arrows) {
    if (a.v_power != 0) continue;
    const auto& s = c.generators[a.from];
    const auto& t = c.generators[a.to];
    if (t.A - a.u_power != s.A || t.M - 2 * a.u_power != s.M - 1)
      throw VerificationError("hfk_differential: arrow not homogeneous");
    m.entries[rowIdx[a.to]][colIdx[a.from]] ^= 1;
  }
  return m;
}

GradedModule graded_homology(GradedMatrix d) {
  const std::size_t R = d.rows.size(), C = d.cols.size();
  auto degree = [&](std::size_t i, std::size_t j) { return d.rows[i].A - d.cols[j].A; };
  std::vector<bool> rowDone(R, false), colDone(C, false);
  GradedModule out;
  for (;;) {
    std::size_t pi = R, pj = C;
    for (std::size_t i = 0; i < R; ++i)
      if (!rowDone[i])
        for (std::size_t j = 0; j < C; ++j)
          if (!colDone[j] && d.entries[i][j] && (pi == R || degree(i, j) < degree(pi, pj))) {
            pi = i;
            pj = j;
          }
    if (pi == R) break;
    // clear column pj with row operations, row pi with column operations; degrees stay homogeneous
    for (std::size_t k = 0; k < R; ++k)
      if (k != pi && d.entries[k][pj])
        for (std::size_t l = 0; l < C; ++l) d.entries[k][l] ^= d.entries[pi][l];
    for (std::size_t l = 0; l < C; ++l)
      if (l != pj && d.entries[pi][l])
        for (std::size_t k = 0; k < R; ++k) d.entries[k][l] ^= d.entries[k][pj];
    rowDone[pi] = colDone[pj] = true;
    const std::int64_t e = degree(pi, pj);
    if (e < 0) throw VerificationError("graded_homology: negative U power");
    if (e > 0) out.towers.push_back({e, d.rows[pi].A - (e - 1), d.rows[pi].M - 2 * (e - 1)});
  }
  for (std::size_t i = 0; i < R; ++i)
    if (!rowDone[i]) out.towers.push_back({std::nullopt, d.rows[i].A, d.rows[i].M});
  for (std::size_t j = 0; j < C; ++j)
    if (!colDone[j]) out.towers.push_back({std::nullopt, d.cols[j].A, d.cols[j].M});
  std::sort(out.towers.begin(), out.towers.end());
  return out;
}

GradedModule hfk_minus(std::int64_t p, std::int64_t q) {
  auto c = staircase(alexander(p, q));
  if (!differential_squares_to_zero(c)) throw VerificationError("hfk_minus: d^2 != 0");
  return graded_homology(hfk_differential(c));
}

GradedModule hfk_closed_form(std::int64_t p, std::int64_t q) {
  const auto n = alexander(p, q).exponents;
  GradedModule m;
  std::int64_t M = 0;  // Maslov grading of x_{2i}
  for (std::size_t i = 0; i + 1 < n.size(); i += 2) {
    const std::int64_t g = n[i] - n[i + 1];
    m.towers.push_back({g, n[i] - g + 1, M - 2 * g + 2});
    M -= 2 * g;
  }
  m.towers.push_back({std::nullopt, n.back(), M});
  std::sort(m.towers.begin(), m.towers.end());
  return m;
}

std::vector<Bidegree> tower_bottoms(const GradedModule& m) {
  std::vector<Bidegree> b;
  for (const auto& t : m.towers)
    if (t.order) b.push_back({t.A, t.M});
  return b;
}

std::optional<Tower> infinite_tower(const GradedModule& m) {
  std::optional<Tower> r;
  for (const auto& t : m.towers)
    if (!t.order) {
      if (r) return std::nullopt;
      r = t;
    }
  return r;
}

bool u_annihilated(const GradedModule& m, Bidegree b) {
  for (const auto& t : m.towers)
    if (t.order && t.A == b.A && t.M == b.M) return true;
  return false;
}

std::vector<std::pair<std::int64_t, std::int64_t>> euler_characteristic(const GradedModule& m) {
  std::map<std::int64_t, std::int64_t> acc;
  auto sgn = [](std::int64_t M) { return (M % 2 == 0) ? 1 : -1; };
  for (const auto& t : m.towers) {
    if (!t.order) {
      acc[t.A] += sgn(t.M);
      continue;
    }
    const std::int64_t b = *t.order;
    const std::int64_t topA = t.A + b - 1, topM = t.M + 2 * (b - 1);
    acc[topA] += sgn(topM);
    acc[topA - b] += sgn(topM - 2 * b + 1);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> r;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second) r.emplace_back(it->first, it->second);
  return r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> alexander_terms(const AlexanderPolynomial& a) {
  std::vector<std::pair<std::int64_t, std::int64_t>> r;
  for (std::size_t i = 0; i < a.exponents.size(); ++i) r.emplace_back(a.exponents[i], a.coefficients[i]);
  return r;
}

MatchReport match_invariants(std::int64_t p, std::int64_t q) {
  MatchReport r;
  r.p = p;
  r.q = q;
  auto mod = hfk_minus(p, q);
  auto bottoms = tower_bottoms(mod);
  auto classes = transverse_classes(torus_knot_params(p, q));
  r.transverse_classes = classes.size();
  std::vector<Bidegree> seen;
  for (const auto& c : classes) {
    Bidegree b{c.invariants.A, c.invariants.M};
    if (std::find(bottoms.begin(), bottoms.end(), b) == bottoms.end())
      r.misses.push_back(b);
    else
      seen.push_back(b);
  }
  std::sort(seen.begin(), seen.end());
  r.realized = seen;
  // bottoms not hit; repeated bottom bidegrees are consumed one per realized class
  std::vector<Bidegree> rest = bottoms;
  std::sort(rest.begin(), rest.end());
  for (const auto& b : seen) {
    auto it = std::find(rest.begin(), rest.end(), b);
    if (it != rest.end()) rest.erase(it);
  }
  r.unrealized = rest;
  return r;
}

void to_json(nlohmann::json& j, const Tower& t) {
  j = nlohmann::json{{"A", t.A}, {"M", t.M}};
  if (t.order) j["order"] = *t.order; else j["order"] = nullptr;
}

void to_json(nlohmann::json& j, const GradedModule& m) { j = nlohmann::json{{"towers", m.towers}}; }

void from_json(const nlohmann::json& j, GradedModule& m) {
  m.towers.clear();
  for (const auto& t : j.at("towers")) {
    Tower x;
    if (!t.at("order").is_null()) x.order = t.at("order").get<std::int64_t>();
    x.A = t.at("A").get<std::int64_t>();
    x.M = t.at("M").get<std::int64_t>();
    m.towers.push_back(x);
  }
  std::sort(m.towers.begin(), m.towers.end());
}

void to_json(nlohmann::json& j, const Bidegree& b) { j = nlohmann::json::array({b.A, b.M}); }

void to_json(nlohmann::json& j, const MatchReport& r) {
  j = nlohmann::json{{"p", r.p},
                     {"q", r.q},
                     {"realized", r.realized},
                     {"unrealized", r.unrealized},
                     {"misses", r.misses},
                     {"transverse_classes", r.transverse_classes},
                     {"ok", r.ok()}};
}

}  // namespace negtorus
