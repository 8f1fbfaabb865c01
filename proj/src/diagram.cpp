#include "negtorus/diagram.hpp"

#include <stdexcept>

namespace negtorus {

ChainSpec chain_spec_from_cf(const NegCF& cf) {
  ChainSpec s;
  for (std::size_t j = 0; j < cf.coeffs.size(); ++j)
    s.tbs.push_back(j == 0 ? -cf.coeffs[0] : -cf.coeffs[j] + 1);
  return s;
}

ChainSpec expand_contact_surgery(const Rational& coeff) {
  if (coeff >= -1) throw std::invalid_argument("expand_contact_surgery: coefficient must be < -1");
  Rational a = -coeff;
  return chain_spec_from_cf(neg_cf(numerator(a), denominator(a)));
}

Figure2Shape figure2_shape(const TorusKnotParams& tk) {
  Figure2Shape f;
  f.params = tk;
  auto split = lemma_cfe_split(tk);
  f.cf1 = neg_cf(tk.p, tk.p - tk.pPrime);
  f.cf2 = neg_cf(tk.q, tk.qPrime);
  if (f.cf1 != split.cf1 || f.cf2 != split.cf2)
    throw VerificationError("figure2_shape: chain expansions disagree with the complementary split");
  f.spec1 = chain_spec_from_cf(f.cf1);
  f.spec2 = chain_spec_from_cf(f.cf2);
  if (f.spec2.tbs.size() < 2 || f.spec2.tbs.back() != -tk.n + 1)
    throw VerificationError("figure2_shape: second chain does not end in tb = -n+1");
  return f;
}

std::vector<std::int64_t> rotation_range(std::int64_t tb) {
  std::vector<std::int64_t> r;
  for (std::int64_t x = tb + 1; x <= -tb - 1; x += 2) r.push_back(x);
  return r;
}

bool legal_rotation(std::int64_t tb, std::int64_t rot) {
  return tb <= -1 && rot >= tb + 1 && rot <= -tb - 1 && ((rot - tb - 1) % 2 == 0);
}

bool is_fully_positive(std::int64_t tb, std::int64_t rot) { return rot == -(tb + 1); }
bool is_fully_negative(std::int64_t tb, std::int64_t rot) { return rot == tb + 1; }

bool chain_fully_positive(const Chain& c, std::size_t upto) {
  for (std::size_t j = 0; j < upto && j < c.size(); ++j)
    if (!is_fully_positive(c.tbs[j], c.rots[j])) return false;
  return true;
}

bool chain_fully_negative(const Chain& c, std::size_t upto) {
  for (std::size_t j = 0; j < upto && j < c.size(); ++j)
    if (!is_fully_negative(c.tbs[j], c.rots[j])) return false;
  return true;
}

Int presentation_count(const TorusKnotParams& tk, std::int64_t ell) {
  auto f = figure2_shape(tk);
  Int n = ell + 1;
  for (auto t : f.spec1.tbs) n *= -t;
  for (auto t : f.spec2.tbs) n *= -t;
  return n;
}

namespace {

void odometer(const std::vector<std::int64_t>& tbs, std::vector<std::vector<std::int64_t>>& out) {
  std::vector<std::int64_t> cur;
  for (auto t : tbs) cur.push_back(t + 1);
  for (;;) {
    out.push_back(cur);
    std::size_t i = tbs.size();
    while (i > 0) {
      --i;
      if (cur[i] + 2 <= -tbs[i] - 1) {
        cur[i] += 2;
        break;
      }
      cur[i] = tbs[i] + 1;
      if (i == 0) return;
    }
    if (tbs.empty()) return;
  }
}

}  // namespace

std::vector<Presentation> enumerate_presentations(const TorusKnotParams& tk, std::int64_t ell) {
  if (ell < 0) throw std::invalid_argument("enumerate_presentations: ell < 0");
  auto f = figure2_shape(tk);
  std::vector<std::vector<std::int64_t>> r1, r2;
  odometer(f.spec1.tbs, r1);
  odometer(f.spec2.tbs, r2);
  std::vector<Presentation> out;
  out.reserve(r1.size() * r2.size() * static_cast<std::size_t>(ell + 1));
  for (const auto& a : r1)
    for (const auto& b : r2)
      for (std::int64_t sp = 0; sp <= ell; ++sp) {
        Presentation pr;
        pr.p = tk.p;
        pr.q = tk.q;
        pr.chain1 = {f.spec1.tbs, a};
        pr.chain2 = {f.spec2.tbs, b};
        pr.stab_pos = sp;
        pr.stab_neg = ell - sp;
        out.push_back(std::move(pr));
      }
  return out;
}

bool is_valid(const Presentation& pr) {
  TorusKnotParams tk;
  try {
    tk = torus_knot_params(pr.p, pr.q);
  } catch (const std::exception&) {
    return false;
  }
  auto f = figure2_shape(tk);
  if (pr.chain1.tbs != f.spec1.tbs || pr.chain2.tbs != f.spec2.tbs) return false;
  if (pr.chain1.rots.size() != pr.chain1.tbs.size() || pr.chain2.rots.size() != pr.chain2.tbs.size())
    return false;
  for (const Chain* c : {&pr.chain1, &pr.chain2})
    for (std::size_t j = 0; j < c->size(); ++j)
      if (!legal_rotation(c->tbs[j], c->rots[j])) return false;
  return pr.stab_pos >= 0 && pr.stab_neg >= 0;
}

// balanced sublink: chain1 together with chain2 minus its final unknot
bool is_ambient_tight(const Presentation& pr) {
  const std::size_t n1 = pr.chain1.size(), n2 = pr.chain2.size() - 1;
  return (chain_fully_positive(pr.chain1, n1) && chain_fully_negative(pr.chain2, n2)) ||
         (chain_fully_negative(pr.chain1, n1) && chain_fully_positive(pr.chain2, n2));
}

// both chains entirely extreme, final unknot included
bool is_balanced_strict(const Presentation& pr) {
  const std::size_t n1 = pr.chain1.size(), n2 = pr.chain2.size();
  return (chain_fully_positive(pr.chain1, n1) && chain_fully_negative(pr.chain2, n2)) ||
         (chain_fully_negative(pr.chain1, n1) && chain_fully_positive(pr.chain2, n2));
}

Presentation stabilize(const Presentation& pr, Sign s) {
  Presentation r = pr;
  if (s == Sign::Positive) ++r.stab_pos; else ++r.stab_neg;
  return r;
}

Presentation conjugate(const Presentation& pr) {
  Presentation r = pr;
  for (auto& x : r.chain1.rots) x = -x;
  for (auto& x : r.chain2.rots) x = -x;
  std::swap(r.stab_pos, r.stab_neg);
  return r;
}

void to_json(nlohmann::json& j, const Chain& c) { j = nlohmann::json{{"rot", c.rots}, {"tb", c.tbs}}; }

void from_json(const nlohmann::json& j, Chain& c) {
  j.at("tb").get_to(c.tbs);
  j.at("rot").get_to(c.rots);
}

void to_json(nlohmann::json& j, const Presentation& pr) {
  j = nlohmann::json{{"chains", {pr.chain1, pr.chain2}},
                     {"p", pr.p},
                     {"q", pr.q},
                     {"stab_neg", pr.stab_neg},
                     {"stab_pos", pr.stab_pos}};
}

void from_json(const nlohmann::json& j, Presentation& pr) {
  j.at("p").get_to(pr.p);
  j.at("q").get_to(pr.q);
  const auto& ch = j.at("chains");
  if (!ch.is_array() || ch.size() != 2) throw std::invalid_argument("presentation json: need two chains");
  ch[0].get_to(pr.chain1);
  ch[1].get_to(pr.chain2);
  j.at("stab_pos").get_to(pr.stab_pos);
  j.at("stab_neg").get_to(pr.stab_neg);
}

std::string canonical_key(const Presentation& pr) {
  nlohmann::json j = pr;
  return j.dump();
}

}  // namespace negtorus
