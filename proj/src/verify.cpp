#include "negtorus/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "negtorus/classify.hpp"
#include "negtorus/floer.hpp"
#include "negtorus/invariants.hpp"
#include "negtorus/lens.hpp"

namespace negtorus {

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t qmax, std::int64_t pqmax) {
  std::vector<std::pair<std::int64_t, std::int64_t>> r;
  for (std::int64_t p = 2; p <= qmax; ++p)
    for (std::int64_t q = p + 1; q <= qmax; ++q)
      if (std::gcd(p, q) == 1 && p * q <= pqmax) r.emplace_back(p, q);
  return r;
}

std::string knot(std::int64_t p, std::int64_t q) {
  return "T(" + std::to_string(p) + ",-" + std::to_string(q) + ")";
}

// time a body that fills pass/detail
template <class F>
CheckResult timed(int id, std::string name, F&& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void within(CheckResult& r, double limit) {
  if (r.seconds > limit) {
    r.pass = false;
    r.detail += " runtime " + std::to_string(r.seconds) + "s over " + std::to_string(limit) + "s";
  }
}

std::multiset<std::int64_t> finite_orders(const GradedModule& m, std::size_t& free_towers) {
  std::multiset<std::int64_t> s;
  free_towers = 0;
  for (const auto& t : m.towers) {
    if (t.order) s.insert(*t.order);
    else ++free_towers;
  }
  return s;
}

}  // namespace

CheckResult check_cf_complementarity() {
  auto r = timed(1, "continued-fraction complementarity, 2<=p<q<=200", [](CheckResult& r) {
    std::size_t n = 0;
    for (auto [p, q] : coprime_pairs(200, 200 * 200)) {
      auto tk = torus_knot_params(p, q);
      auto s = lemma_cfe_split(tk);
      std::vector<std::int64_t> trunc(s.cf2.coeffs.begin(), s.cf2.coeffs.end() - 1);
      if (s.cf2.coeffs.back() != tk.n || cf_inverse(s.cf1.coeffs) + cf_inverse(trunc) != 1 ||
          eval_cf(s.cf1) != ratio(p, p - tk.C)) {
        r.detail = "fails at " + knot(p, q);
        return;
      }
      ++n;
    }
    r.pass = true;
    r.detail = std::to_string(n) + " pairs";
  });
  within(r, 1.0);
  return r;
}

CheckResult check_tb_contract() {
  auto r = timed(2, "tb = -pq - ell, pq<=120, ell<=5", [](CheckResult& r) {
    std::size_t n = 0;
    for (auto [p, q] : coprime_pairs(60, 120)) {
      auto tk = torus_knot_params(p, q);
      for (std::int64_t ell = 0; ell <= 5; ++ell)
        for (const auto& pr : enumerate_presentations(tk, ell)) {
          if (compute_tb(pr) != -p * q - ell) {
            r.detail = "fails at " + knot(p, q) + " ell=" + std::to_string(ell);
            return;
          }
          ++n;
        }
    }
    r.pass = true;
    r.detail = std::to_string(n) + " presentations";
  });
  within(r, 10.0);
  return r;
}

CheckResult check_smooth_topology() {
  return timed(3, "ambient S^3, |H1| = pq+1, lens type L(pq+1,p^2), pq<=120", [](CheckResult& r) {
    std::size_t n = 0;
    for (auto [p, q] : coprime_pairs(60, 120)) {
      auto rep = validate_smooth_topology(torus_knot_params(p, q), 0);
      if (!rep.ok()) {
        r.detail = "fails at " + knot(p, q);
        return;
      }
      ++n;
    }
    r.pass = true;
    r.detail = std::to_string(n) + " pairs";
  });
}

CheckResult check_transverse_counts() {
  return timed(4, "transverse counts: T(2,-(2n-1)) n-1, T(n,-n-1) n-1, T(5,-8) 4", [](CheckResult& r) {
    std::ostringstream bad;
    auto expect = [&](std::int64_t p, std::int64_t q, std::size_t want) {
      auto got = transverse_classes(torus_knot_params(p, q)).size();
      if (got != want) bad << ' ' << knot(p, q) << " got " << got << " want " << want;
    };
    for (std::int64_t n = 2; n <= 10; ++n) expect(2, 2 * n - 1, n - 1);
    for (std::int64_t n = 2; n <= 8; ++n) expect(n, n + 1, n - 1);
    expect(5, 8, 4);
    r.pass = bad.str().empty();
    r.detail = r.pass ? "17 knots" : bad.str();
  });
}

CheckResult check_t58_locations() {
  return timed(5, "T(5,-8) locations {(-12,-26),(-2,-12),(4,-6),(14,0)}", [](CheckResult& r) {
    std::set<std::pair<std::int64_t, std::int64_t>> want{{-12, -26}, {-2, -12}, {4, -6}, {14, 0}}, got;
    auto cs = transverse_classes(torus_knot_params(5, 8));
    std::ostringstream os;
    for (const auto& c : cs) {
      got.emplace(c.invariants.A, c.invariants.M);
      os << " (" << c.invariants.A << "," << c.invariants.M << ")";
    }
    r.pass = cs.size() == 4 && got == want;
    r.detail = "got" + os.str();
  });
}

CheckResult check_hfk_structures() {
  auto r = timed(6, "HFK^- tower multisets and staircase = closed form, q<=30", [](CheckResult& r) {
    std::ostringstream bad;
    auto expect = [&](std::int64_t p, std::int64_t q, std::multiset<std::int64_t> want) {
      std::size_t free = 0;
      auto got = finite_orders(hfk_minus(p, q), free);
      if (free != 1 || got != want) bad << ' ' << knot(p, q);
    };
    for (std::int64_t n = 2; n <= 10; ++n) {
      std::multiset<std::int64_t> w;
      for (std::int64_t i = 1; i <= n - 1; ++i) w.insert(1);
      expect(2, 2 * n - 1, w);
    }
    for (std::int64_t n = 2; n <= 8; ++n) {
      std::multiset<std::int64_t> w;
      for (std::int64_t i = 1; i <= n - 1; ++i) w.insert(i);
      expect(n, n + 1, w);
    }
    expect(5, 8, {4, 2, 2, 1, 1, 1, 1, 1, 1});
    std::size_t n = 0;
    for (auto [p, q] : coprime_pairs(30, 900)) {
      if (hfk_minus(p, q).towers != hfk_closed_form(p, q).towers) bad << " closed form " << knot(p, q);
      ++n;
    }
    r.pass = bad.str().empty();
    r.detail = r.pass ? std::to_string(n) + " closed-form pairs" : bad.str();
  });
  within(r, 30.0);
  return r;
}

CheckResult check_d3_range() {
  return timed(7, "d3 even in (0,(p-1)(q-1)] under non-vanishing, max attained, tight d3 = 0, pq<=120",
               [](CheckResult& r) {
                 std::size_t nv = 0, tight = 0;
                 for (auto [p, q] : coprime_pairs(60, 120)) {
                   const std::int64_t top = (p - 1) * (q - 1);
                   bool attained = false;
                   for (const auto& pr : enumerate_presentations(torus_knot_params(p, q), 0)) {
                     const auto d3 = compute_d3(pr);
                     if (is_ambient_tight(pr) || is_balanced_strict(pr)) {
                       ++tight;
                       if (d3 != 0) {
                         r.detail = "tight presentation with d3 != 0 at " + knot(p, q);
                         return;
                       }
                       continue;
                     }
                     if (chain_fully_positive(pr.chain1, pr.chain1.size()) &&
                         chain_fully_positive(pr.chain2, pr.chain2.size()))
                       attained = d3 == top;
                     if (!nonvanishing_condition(pr)) continue;
                     ++nv;
                     if (d3 % 2 != 0 || d3 <= 0 || d3 > top) {
                       r.detail = "d3 = " + std::to_string(d3) + " out of range at " + knot(p, q);
                       return;
                     }
                   }
                   if (!attained) {
                     r.detail = "all-fully-positive presentation misses (p-1)(q-1) at " + knot(p, q);
                     return;
                   }
                 }
                 r.pass = true;
                 r.detail = std::to_string(nv) + " non-vanishing, " + std::to_string(tight) + " tight";
               });
}

CheckResult check_lens_surjectivity() {
  return timed(8, "lens surjectivity onto Honda's count, q<=12", [](CheckResult& r) {
    std::size_t n = 0;
    for (auto [p, q] : coprime_pairs(12, 144)) {
      auto rep = surjectivity_check(torus_knot_params(p, q));
      if (!rep.ok()) {
        r.detail = "fails at " + knot(p, q) + ": image " + std::to_string(rep.image_size) + " vs " + rep.honda.str();
        return;
      }
      ++n;
    }
    r.pass = true;
    r.detail = std::to_string(n) + " pairs";
  });
}

CheckResult check_count_increment() {
  return timed(9, "fillable class count +1 per stabilization, ell=0..6", [](CheckResult& r) {
    std::ostringstream all, bad;
    for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
      auto tk = torus_knot_params(p, q);
      all << ' ' << knot(p, q) << ':';
      std::size_t prev = 0;
      for (std::int64_t ell = 0; ell <= 6; ++ell) {
        const auto c = classify_stabilized(tk, ell).fillable_count();
        all << (ell ? "," : "") << c;
        if (ell && c != prev + 1) bad << ' ' << knot(p, q) << " ell " << ell - 1 << "->" << ell;
        prev = c;
      }
    }
    r.pass = bad.str().empty();
    r.detail = r.pass ? all.str().substr(1) : "breaks at" + bad.str() + ";" + all.str();
  });
}

CheckResult check_u_order() {
  return timed(10, "invariant locations are U-annihilated bottoms, positive stabilization loose, pq<=60",
               [](CheckResult& r) {
                 std::size_t nv = 0;
                 for (auto [p, q] : coprime_pairs(30, 60)) {
                   auto mr = match_invariants(p, q);
                   auto mod = hfk_minus(p, q);
                   bool annihilated = true;
                   for (const auto& b : mr.realized) annihilated &= u_annihilated(mod, b);
                   if (!mr.ok() || !annihilated) {
                     r.detail = "location outside finite-tower bottoms at " + knot(p, q);
                     return;
                   }
                   for (const auto& pr : enumerate_presentations(torus_knot_params(p, q), 0)) {
                     if (!nonvanishing_condition(pr)) continue;
                     ++nv;
                     if (!positive_stab_looseness(pr)) {
                       r.detail = "positive stabilization not loose at " + knot(p, q) + " " + canonical_key(pr);
                       return;
                     }
                   }
                 }
                 r.pass = true;
                 r.detail = std::to_string(nv) + " non-vanishing presentations";
               });
}

namespace {

Presentation random_presentation(std::mt19937_64& rng) {
  static const auto pairs = coprime_pairs(60, 120);
  auto [p, q] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
  auto shape = figure2_shape(torus_knot_params(p, q));
  Presentation pr;
  pr.p = p;
  pr.q = q;
  auto fill = [&](const ChainSpec& s, Chain& c) {
    c.tbs = s.tbs;
    for (auto tb : s.tbs) {
      auto rr = rotation_range(tb);
      c.rots.push_back(rr[std::uniform_int_distribution<std::size_t>(0, rr.size() - 1)(rng)]);
    }
  };
  fill(shape.spec1, pr.chain1);
  fill(shape.spec2, pr.chain2);
  const std::int64_t ell = std::uniform_int_distribution<std::int64_t>(0, 4)(rng);
  pr.stab_pos = std::uniform_int_distribution<std::int64_t>(0, ell)(rng);
  pr.stab_neg = ell - pr.stab_pos;
  return pr;
}

Int random_int(std::mt19937_64& rng, int words) {
  Int x = 0;
  for (int i = 0; i < words; ++i) x = (x << 64) + rng();
  return x;
}

}  // namespace

CheckResult check_properties(std::size_t instances, std::uint64_t seed) {
  return timed(11, "property suites (CF roundtrip, conjugation, d^2 = 0, Euler characteristic)",
               [&](CheckResult& r) {
                 std::mt19937_64 rng(seed);
                 std::ostringstream bad;
                 for (std::size_t i = 0; i < instances; ++i) {
                   Int u = random_int(rng, 2) + 2;
                   Int v = 1 + random_int(rng, 2) % (u - 1);
                   if (gcd(u, v) != 1) continue;
                   auto cf = neg_cf(u, v);
                   if (eval_cf(cf) != ratio(u, v) || cf_fraction(cf.coeffs) != std::make_pair(u, v)) {
                     bad << " cf " << u << "/" << v;
                     break;
                   }
                 }
                 for (std::size_t i = 0; i < instances; ++i) {
                   auto pr = random_presentation(rng);
                   auto a = compute_invariants(pr), b = compute_invariants(conjugate(pr));
                   if (a.tb != b.tb || a.rot != -b.rot || a.d3 != b.d3) {
                     bad << " conjugation " << canonical_key(pr);
                     break;
                   }
                 }
                 static const auto pairs = coprime_pairs(40, 1600);
                 for (std::size_t i = 0; i < instances; ++i) {
                   auto [p, q] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
                   auto alex = alexander(p, q);
                   if (!differential_squares_to_zero(staircase(alex))) {
                     bad << " d^2 " << knot(p, q);
                     break;
                   }
                   if (euler_characteristic(hfk_minus(p, q)) != alexander_terms(alex)) {
                     bad << " euler " << knot(p, q);
                     break;
                   }
                 }
                 r.pass = bad.str().empty();
                 r.detail = r.pass ? std::to_string(instances) + " instances per suite" : bad.str();
               });
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& opt, const std::function<void(const CheckResult&)>& sink) {
  const std::vector<std::function<CheckResult()>> checks{
      check_cf_complementarity, check_tb_contract,       check_smooth_topology, check_transverse_counts,
      check_t58_locations,      check_hfk_structures,    check_d3_range,        check_lens_surjectivity,
      check_count_increment,    check_u_order,
      [&] { return check_properties(opt.property_instances, opt.seed); }};
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!opt.only.empty() && !opt.only.count(static_cast<int>(i + 1))) continue;
    out.push_back(checks[i]());
    if (sink) sink(out.back());
  }
  return out;
}

std::string format_line(const CheckResult& r, bool timing) {
  std::string line = std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name;
  if (timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.3fs)", r.seconds);
    line += buf;
  }
  return line + ": " + r.detail;
}

void to_json(nlohmann::json& j, const CheckResult& r) {
  j = nlohmann::json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
}

}  // namespace negtorus
