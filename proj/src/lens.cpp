#include "negtorus/lens.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "negtorus/invariants.hpp"

namespace negtorus {

std::size_t KirbyDiagram::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("KirbyDiagram: no curve " + name);
  return static_cast<std::size_t>(it - names.begin());
}

KirbyDiagram blow_up(const KirbyDiagram& d, const std::string& name, int sign, const std::vector<std::int64_t>& links,
                     std::int64_t label) {
  // inverse of blow_down: the old curves pick up sign * s s^T, labels sign * s * label
  const std::size_t n = d.size();
  KirbyDiagram r;
  r.names = d.names;
  r.names.push_back(name);
  r.labels = d.labels;
  r.labels.push_back(label);
  r.Q = IntMat::Zero(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r.Q(i, j) = d.Q(i, j) + Int(sign) * links[i] * links[j];
    r.Q(i, n) = r.Q(n, i) = links[i];
    r.labels[i] += sign * links[i] * label;
  }
  r.Q(n, n) = sign;
  return r;
}

KirbyDiagram blow_down(const KirbyDiagram& d, std::size_t e) {
  const Int eps = d.Q(e, e);
  if (eps != 1 && eps != -1) throw std::invalid_argument("blow_down: curve is not +-1 framed");
  KirbyDiagram r;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != e) keep.push_back(i);
  r.Q = IntMat::Zero(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    r.names.push_back(d.names[keep[a]]);
    const Int sa = d.Q(keep[a], e);
    r.labels.push_back(d.labels[keep[a]] - static_cast<std::int64_t>(eps * sa * d.labels[e]));
    for (std::size_t b = 0; b < keep.size(); ++b) r.Q(a, b) = d.Q(keep[a], keep[b]) - eps * sa * d.Q(keep[b], e);
  }
  return r;
}

KirbyDiagram handle_slide(const KirbyDiagram& d, std::size_t a, std::size_t b, int s) {
  KirbyDiagram r = d;
  const Int S = s;
  // basis change e_a -> e_a + s e_b
  for (std::size_t j = 0; j < d.size(); ++j)
    if (j != a) r.Q(a, j) = r.Q(j, a) = d.Q(a, j) + S * d.Q(b, j);
  r.Q(a, a) = d.Q(a, a) + S * S * d.Q(b, b) + 2 * S * d.Q(a, b);
  r.labels[a] = d.labels[a] + s * d.labels[b];
  return r;
}

KirbyDiagram cancel_pair(const KirbyDiagram& d, std::size_t k, std::size_t mu) {
  if (d.Q(mu, mu) != 0) throw std::invalid_argument("cancel_pair: meridian not 0-framed");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != k && i != mu && d.Q(mu, i) != 0) throw std::invalid_argument("cancel_pair: meridian links other curves");
  const Int lk = d.Q(mu, k);
  if (lk != 1 && lk != -1) throw std::invalid_argument("cancel_pair: not a meridian");
  KirbyDiagram r = d;
  // slide everything off k using the meridian
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i == k || i == mu) continue;
    const Int c = r.Q(i, k) * lk;
    if (c != 0) r = handle_slide(r, i, mu, -static_cast<int>(c));
  }
  KirbyDiagram out;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (i != k && i != mu) keep.push_back(i);
  out.Q = IntMat::Zero(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    out.names.push_back(r.names[keep[a]]);
    out.labels.push_back(r.labels[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) out.Q(a, b) = r.Q(keep[a], keep[b]);
  }
  return out;
}

Rational characteristic_quantity(const KirbyDiagram& d) {
  RatMat q = cast_exact<Rational>(d.Q);
  RatVec k(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) k(i) = Rational(d.labels[i]);
  return bilinear(k, exact_inverse(q), k) - Rational(3 * signature(q)) - Rational(2 * static_cast<std::int64_t>(d.size()));
}

namespace {

KirbyDiagram make_diagram(std::vector<std::string> names, std::vector<std::int64_t> framings,
                          std::vector<std::int64_t> labels,
                          const std::vector<std::tuple<std::size_t, std::size_t, int>>& links) {
  KirbyDiagram d;
  d.names = std::move(names);
  d.labels = std::move(labels);
  const std::size_t n = d.names.size();
  d.Q = IntMat::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) d.Q(i, i) = framings[i];
  for (auto [a, b, v] : links) d.Q(a, b) = d.Q(b, a) = v;
  return d;
}

}  // namespace

KirbyDiagram figure2_surgered(const Presentation& pr) {
  auto tk = torus_knot_params(pr.p, pr.q);
  auto lm = linking_matrix(figure2_shape(tk), true, -2 - pr.ell());
  KirbyDiagram d;
  d.Q = lm.Q;
  d.names = {"c1", "c2", "lead1", "lead2"};
  d.labels = {0, 0, pr.chain1.rots[0], pr.chain2.rots[0]};
  for (std::size_t j = 1; j < pr.chain1.size(); ++j) {
    d.names.push_back("t1_" + std::to_string(j));
    d.labels.push_back(pr.chain1.rots[j]);
  }
  for (std::size_t j = 1; j < pr.chain2.size(); ++j) {
    d.names.push_back("t2_" + std::to_string(j));
    d.labels.push_back(pr.chain2.rots[j]);
  }
  d.names.push_back("L");
  d.labels.push_back(pr.stab_pos - pr.stab_neg);
  return d;
}

Figure3Stages figure3_stages(const Presentation& pr) {
  if (pr.ell() != 0) throw std::invalid_argument("figure3_stages: needs an unstabilized presentation");
  const Chain& c1 = pr.chain1;
  const Chain& c2 = pr.chain2;
  std::vector<std::string> names;
  std::vector<std::int64_t> fr, lab;
  std::vector<std::tuple<std::size_t, std::size_t, int>> links;
  // tail of chain1 in reverse order, then lead1, lead2, the 0-framed curve, tail of chain2
  for (std::size_t j = c1.size() - 1; j >= 1; --j) {
    names.push_back("t1_" + std::to_string(j));
    fr.push_back(c1.tbs[j] - 1);
    lab.push_back(c1.rots[j]);
    if (names.size() > 1) links.emplace_back(names.size() - 2, names.size() - 1, 1);
  }
  const std::size_t l1 = names.size();
  names.push_back("lead1");
  fr.push_back(c1.tbs[0] - 1);
  lab.push_back(c1.rots[0]);
  if (l1 > 0) links.emplace_back(l1 - 1, l1, 1);
  const std::size_t l2 = names.size();
  names.push_back("lead2");
  fr.push_back(c2.tbs[0] - 1);
  lab.push_back(c2.rots[0]);
  const std::size_t z = names.size();
  names.push_back("z");
  fr.push_back(0);
  lab.push_back(0);
  links.emplace_back(l1, l2, -1);
  links.emplace_back(l1, z, -1);
  links.emplace_back(l2, z, -1);
  std::size_t prev = l2;
  for (std::size_t j = 1; j < c2.size(); ++j) {
    names.push_back("t2_" + std::to_string(j));
    fr.push_back(c2.tbs[j] - 1);
    lab.push_back(c2.rots[j]);
    links.emplace_back(prev, names.size() - 1, 1);
    prev = names.size() - 1;
  }
  Figure3Stages st;
  st.first = make_diagram(names, fr, lab, links);

  // blow up at the (-1)-linking point of the leaders; the 0-framed curve slid over the new
  // curve becomes its (+1)-framed meridian and is blown down
  std::vector<std::int64_t> s(st.first.size(), 0);
  s[l1] = s[l2] = 1;
  KirbyDiagram d = blow_up(st.first, "e", 1, s, 1);
  const std::size_t e = d.index("e");
  d = handle_slide(d, d.index("z"), e, 1);
  d = blow_down(d, d.index("z"));
  st.second = d;

  // slide lead1 over the reversed lead2, then cancel lead2 against the 0-framed curve
  d = handle_slide(d, d.index("lead1"), d.index("lead2"), -1);
  d = cancel_pair(d, d.index("lead2"), d.index("e"));
  st.third = d;
  return st;
}

LensChain figure3_reduce(const Presentation& pr) {
  auto st = figure3_stages(pr);
  const auto& d = st.third;
  // walk the path graph from an end
  const std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d.Q(i, j) != 0) {
        if (abs(d.Q(i, j)) != 1) throw VerificationError("figure3_reduce: linking other than +-1");
        adj[i].push_back(j);
      }
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) throw VerificationError("figure3_reduce: not a linear chain");
    if (adj[i].size() <= 1 && start == n) start = i;
  }
  if (start == n) throw VerificationError("figure3_reduce: cycle");
  LensChain c;
  std::size_t prev = n, cur = start;
  for (std::size_t step = 0; step < n; ++step) {
    c.framings.push_back(static_cast<std::int64_t>(d.Q(cur, cur)));
    c.rots.push_back(d.labels[cur]);
    std::size_t next = n;
    for (auto x : adj[cur])
      if (x != prev) next = x;
    if (next == n) break;
    prev = cur;
    cur = next;
  }
  if (c.framings.size() != n) throw VerificationError("figure3_reduce: disconnected diagram");
  LensChain rev{{c.framings.rbegin(), c.framings.rend()}, {c.rots.rbegin(), c.rots.rend()}};
  if (rev.framings < c.framings) return rev;
  return c;
}

std::pair<Int, Int> lens_parameters(const LensChain& c) {
  std::vector<std::int64_t> a;
  for (auto f : c.framings) a.push_back(-f);
  return cf_fraction(a);
}

bool legal_lens_chain(const LensChain& c) {
  for (std::size_t i = 0; i < c.framings.size(); ++i) {
    if (c.framings[i] > -2) return false;
    if (!legal_rotation(c.framings[i] + 1, c.rots[i])) return false;
  }
  return true;
}

LensReport surjectivity_check(const TorusKnotParams& tk) {
  LensReport r;
  r.p = tk.p;
  r.q = tk.q;
  auto pres = enumerate_presentations(tk, 0);
  const Int u_expected = Int(tk.p) * tk.q + 1;
  std::map<LensChain, std::vector<std::size_t>> image;
  bool stages = true, legal = true;
  std::set<Rational> shift_a, shift_b, shift_c;
  std::vector<std::int64_t> framings;
  for (std::size_t i = 0; i < pres.size(); ++i) {
    auto st = figure3_stages(pres[i]);
    for (const auto* d : {&st.first, &st.second, &st.third})
      stages &= abs(bareiss_determinant(d->Q)) == u_expected;
    auto chain = figure3_reduce(pres[i]);
    legal &= legal_lens_chain(chain);
    if (framings.empty()) framings = chain.framings;
    else stages &= framings == chain.framings;
    image[chain].push_back(i);
    const Rational q0 = characteristic_quantity(figure2_surgered(pres[i]));
    const Rational qa = characteristic_quantity(st.first);
    const Rational qb = characteristic_quantity(st.second);
    const Rational qc = characteristic_quantity(st.third);
    shift_a.insert(q0 - qa);
    shift_b.insert(qa - qb);
    shift_c.insert(qb - qc);
  }
  r.stages_ok = stages && legal;
  r.spinc_consistent = shift_a.size() == 1 && shift_b.size() == 1 && shift_c.size() == 1;
  r.image_size = image.size();
  for (auto& [ch, ids] : image) r.fibers.push_back(ids);
  auto [u, v] = lens_parameters(image.begin()->first);
  r.u = u;
  r.v = v;
  r.honda = honda_count(neg_cf(u, v));
  const Int p2 = (Int(tk.p) * tk.p) % u_expected;
  r.lens_type_ok = u == u_expected && (v == p2 || v == mod_inverse(p2, u_expected));
  return r;
}

void to_json(nlohmann::json& j, const LensChain& c) { j = nlohmann::json{{"framings", c.framings}, {"rots", c.rots}}; }

void to_json(nlohmann::json& j, const LensReport& r) {
  j = nlohmann::json{{"p", r.p},
                     {"q", r.q},
                     {"u", r.u.str()},
                     {"v", r.v.str()},
                     {"honda_count", r.honda.str()},
                     {"image_size", r.image_size},
                     {"fibers", r.fibers},
                     {"lens_type_ok", r.lens_type_ok},
                     {"stages_ok", r.stages_ok},
                     {"spinc_consistent", r.spinc_consistent},
                     {"ok", r.ok()}};
}

}  // namespace negtorus
