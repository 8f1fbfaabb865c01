#include "negtorus/invariants.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace negtorus {

LinkingMatrix linking_matrix(const Figure2Shape& shape, bool with_knot, std::int64_t knot_framing) {
  const auto& t1 = shape.spec1.tbs;
  const auto& t2 = shape.spec2.tbs;
  const std::size_t base = 4 + (t1.size() - 1) + (t2.size() - 1);
  const std::size_t n = base + (with_knot ? 1 : 0);
  LinkingMatrix lm;
  lm.Q = IntMat::Zero(n, n);
  lm.surgery_curves = base;
  lm.has_knot = with_knot;
  lm.framings.assign(n, 0);

  auto link = [&](std::size_t a, std::size_t b, int v) { lm.Q(a, b) = lm.Q(b, a) = v; };
  // core: contact (+1) curves on tb=-1 unknots have smooth framing 0, leaders tb-1
  lm.framings[0] = 0;
  lm.framings[1] = 0;
  lm.framings[2] = t1[0] - 1;
  lm.framings[3] = t2[0] - 1;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) link(a, b, -1);
  std::size_t idx = 4;
  for (const auto* tb : {&t1, &t2}) {
    std::size_t prev = (tb == &t1) ? 2 : 3;
    for (std::size_t j = 1; j < tb->size(); ++j, ++idx) {
      lm.framings[idx] = (*tb)[j] - 1;
      link(prev, idx, 1);
      prev = idx;
    }
  }
  if (with_knot) {
    lm.framings[base] = knot_framing;
    for (std::size_t a = 0; a < 4; ++a) link(a, base, -1);
  }
  for (std::size_t i = 0; i < n; ++i) lm.Q(i, i) = lm.framings[i];
  return lm;
}

namespace {

std::shared_ptr<const SurgeryModel> build_model(const TorusKnotParams& tk) {
  auto m = std::make_shared<SurgeryModel>();
  m->shape = figure2_shape(tk);
  m->lm = linking_matrix(m->shape, false);
  m->detQ = bareiss_determinant(m->lm.Q);
  if (m->detQ == 0) throw VerificationError("surgery model: singular linking matrix");
  RatMat Qr = cast_exact<Rational>(m->lm.Q);
  m->Qinv = exact_inverse(Qr);
  m->sigma = signature(Qr);
  auto withL = linking_matrix(m->shape, true, 0);
  m->tb_correction = ratio(bareiss_determinant(withL.Q), m->detQ);

  const std::size_t n = m->lm.surgery_curves;
  RatVec lk = RatVec::Zero(n);
  for (std::size_t a = 0; a < 4; ++a) lk(a) = Rational(-1);
  RatVec w = m->Qinv.lazyProduct(lk);
  auto to_int = [](const Rational& x) {
    if (denominator(x) != 1) throw VerificationError("surgery model: non-integral rotation weight");
    return Int(-numerator(x));
  };
  const std::size_t s1 = m->shape.spec1.tbs.size(), s2 = m->shape.spec2.tbs.size();
  m->weights1.push_back(to_int(w(2)));
  for (std::size_t j = 1; j < s1; ++j) m->weights1.push_back(to_int(w(4 + j - 1)));
  m->weights2.push_back(to_int(w(3)));
  for (std::size_t j = 1; j < s2; ++j) m->weights2.push_back(to_int(w(4 + (s1 - 1) + j - 1)));
  return m;
}

RatVec rotation_vector(const SurgeryModel& m, const Presentation& pr) {
  RatVec r = RatVec::Zero(m.lm.surgery_curves);
  r(2) = Rational(pr.chain1.rots[0]);
  r(3) = Rational(pr.chain2.rots[0]);
  std::size_t idx = 4;
  for (std::size_t j = 1; j < pr.chain1.size(); ++j) r(idx++) = Rational(pr.chain1.rots[j]);
  for (std::size_t j = 1; j < pr.chain2.size(); ++j) r(idx++) = Rational(pr.chain2.rots[j]);
  return r;
}

std::int64_t to_i64(const Rational& x, const char* what) {
  if (denominator(x) != 1) throw VerificationError(std::string(what) + ": non-integral value");
  return static_cast<std::int64_t>(numerator(x));
}

}  // namespace

std::shared_ptr<const SurgeryModel> surgery_model(const TorusKnotParams& tk) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const SurgeryModel>> cache;
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find({tk.p, tk.q});
    if (it != cache.end()) return it->second;
  }
  auto m = build_model(tk);
  std::lock_guard<std::mutex> g(mu);
  return cache.emplace(std::make_pair(tk.p, tk.q), m).first->second;
}

std::shared_ptr<const SurgeryModel> surgery_model(std::int64_t p, std::int64_t q) {
  return surgery_model(torus_knot_params(p, q));
}

std::int64_t compute_tb(const Presentation& pr) {
  auto m = surgery_model(pr.p, pr.q);
  return to_i64(Rational(-1 - pr.ell()) + m->tb_correction, "compute_tb");
}

std::int64_t compute_rot(const Presentation& pr) {
  auto m = surgery_model(pr.p, pr.q);
  Int r = pr.stab_pos - pr.stab_neg;
  for (std::size_t j = 0; j < pr.chain1.size(); ++j) r += m->weights1[j] * pr.chain1.rots[j];
  for (std::size_t j = 0; j < pr.chain2.size(); ++j) r += m->weights2[j] * pr.chain2.rots[j];
  return static_cast<std::int64_t>(r);
}

Rational characteristic_square(const Presentation& pr) {
  auto m = surgery_model(pr.p, pr.q);
  RatVec r = rotation_vector(*m, pr);
  return bilinear(r, m->Qinv, r);
}

std::int64_t compute_d3(const Presentation& pr) {
  auto m = surgery_model(pr.p, pr.q);
  const Rational c2 = characteristic_square(pr);
  const auto n = static_cast<std::int64_t>(m->lm.surgery_curves);
  // (c^2 - 3 sigma - 2 chi)/4 + #(+1 curves), shifted by 1/2 so the standard sphere has 0
  Rational d = (c2 - Rational(3 * m->sigma) - Rational(2 * (1 + n))) / 4 + Rational(2) + ratio(1, 2);
  return to_i64(d, "compute_d3");
}

Bigrading bigrading(std::int64_t tb, std::int64_t rot, std::int64_t d3) {
  const std::int64_t twoA = tb - rot + 1;
  if (twoA % 2 != 0) throw std::invalid_argument("bigrading: tb + rot must be odd");
  Bigrading b;
  b.A = twoA / 2;
  b.M = 2 * b.A - d3;
  return b;
}

ClassicalInvariants compute_invariants(const Presentation& pr) {
  ClassicalInvariants c;
  c.tb = compute_tb(pr);
  c.rot = compute_rot(pr);
  c.d3 = compute_d3(pr);
  auto b = bigrading(c.tb, c.rot, c.d3);
  c.A = b.A;
  c.M = b.M;
  return c;
}

bool linking_form_matches(const Int& a, const Int& u, const Int& v) {
  auto mod = [&](const Int& x) {
    Int r = x % u;
    return r < 0 ? Int(r + u) : r;
  };
  const Int target = mod(v), neg_target = mod(-v);
  for (Int k = 1; k < u || (u == 1 && k == 1); ++k) {
    if (gcd(k, u) != 1) continue;
    Int val = mod(a * k * k);
    if (val == target || val == neg_target) return true;
  }
  return false;
}

SmoothReport validate_smooth_topology(const TorusKnotParams& tk, std::int64_t ell) {
  SmoothReport rep;
  rep.p = tk.p;
  rep.q = tk.q;
  rep.ell = ell;
  auto m = surgery_model(tk);
  rep.det_ambient = m->detQ;
  rep.ambient_s3 = abs(m->detQ) == 1;

  // Legendrian surgery on L^ell: the diagram knot has tb -1-ell, smooth framing -2-ell
  auto sur = linking_matrix(m->shape, true, -2 - ell);
  Int det = abs(bareiss_determinant(sur.Q));
  rep.surgered_order = det;
  const Int expect = Int(tk.p) * tk.q + 1 + ell;
  rep.order_ok = det == expect;

  for (auto& d : smith_invariants(sur.Q))
    if (d != 1) rep.homology.push_back(d);
  rep.cyclic = rep.homology.size() == 1 && rep.homology[0] == det;

  if (rep.cyclic && ell == 0) {
    RatMat inv = exact_inverse(cast_exact<Rational>(sur.Q));
    // a meridian whose class has full order generates H1
    for (Eigen::Index i = 0; i < inv.rows(); ++i) {
      Int order = 1;
      for (Eigen::Index j = 0; j < inv.rows(); ++j) order = boost::multiprecision::lcm(order, denominator(inv(j, i)));
      if (order != det) continue;
      Rational lam = inv(i, i) * Rational(det);
      rep.linking_numerator = numerator(lam);
      Int p2 = Int(tk.p) * tk.p;
      rep.lens_type_ok = linking_form_matches(rep.linking_numerator, det, p2 % det);
      break;
    }
  }
  return rep;
}

void to_json(nlohmann::json& j, const ClassicalInvariants& c) {
  j = nlohmann::json{{"A", c.A}, {"M", c.M}, {"d3", c.d3}, {"rot", c.rot}, {"tb", c.tb}};
}

void to_json(nlohmann::json& j, const SmoothReport& r) {
  std::vector<std::string> h;
  for (auto& x : r.homology) h.push_back(x.str());
  j = nlohmann::json{{"p", r.p},
                     {"q", r.q},
                     {"ell", r.ell},
                     {"det_ambient", r.det_ambient.str()},
                     {"ambient_s3", r.ambient_s3},
                     {"surgered_order", r.surgered_order.str()},
                     {"homology", h},
                     {"cyclic", r.cyclic},
                     {"lens_type_ok", r.lens_type_ok},
                     {"ok", r.ok()}};
}

}  // namespace negtorus
