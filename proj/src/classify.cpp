#include "negtorus/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "negtorus/parallel.hpp"

namespace negtorus {

namespace {

std::int64_t fp_rot(std::int64_t tb) { return -(tb + 1); }
std::int64_t fn_rot(std::int64_t tb) { return tb + 1; }

std::vector<std::int64_t> coefficients(const Chain& c) {
  std::vector<std::int64_t> a;
  for (std::size_t j = 0; j < c.size(); ++j) a.push_back(j == 0 ? -c.tbs[0] : -c.tbs[j] + 1);
  return a;
}

std::vector<std::int64_t> prefix(const std::vector<std::int64_t>& v, std::size_t len) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(len, v.size()))};
}

const Chain& line_x(const Presentation& pr, bool swapped) { return swapped ? pr.chain2 : pr.chain1; }
const Chain& line_y(const Presentation& pr, bool swapped) { return swapped ? pr.chain1 : pr.chain2; }

bool legal_chain(const Chain& c) {
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!legal_rotation(c.tbs[j], c.rots[j])) return false;
  return true;
}

Presentation with_lines(const Presentation& pr, bool swapped, const std::vector<std::int64_t>& x,
                        const std::vector<std::int64_t>& y) {
  Presentation r = pr;
  (swapped ? r.chain2 : r.chain1).rots = x;
  (swapped ? r.chain1 : r.chain2).rots = y;
  return r;
}

}  // namespace

std::int64_t positive_stabs(std::int64_t tb, std::int64_t rot) { return (-tb - 1 + rot) / 2; }
std::int64_t negative_stabs(std::int64_t tb, std::int64_t rot) { return (-tb - 1 - rot) / 2; }

std::vector<PatternForm> decode_patterns(const Presentation& pr) {
  std::vector<PatternForm> out;
  for (bool sw : {false, true}) {
    const Chain& X = line_x(pr, sw);
    const Chain& Y = line_y(pr, sw);
    if (!is_fully_positive(X.tbs[0], X.rots[0]) || !is_fully_negative(Y.tbs[0], Y.rots[0])) continue;
    std::size_t jmax = 0, kmax = 0;
    while (jmax + 1 < X.size() && is_fully_positive(X.tbs[jmax + 1], X.rots[jmax + 1])) ++jmax;
    while (kmax + 1 < Y.size() && is_fully_negative(Y.tbs[kmax + 1], Y.rots[kmax + 1])) ++kmax;
    for (std::size_t j = 0; j <= jmax; ++j)
      for (std::size_t k = 0; k <= kmax; ++k) {
        PatternForm f;
        f.swapped = sw;
        f.j = j;
        f.k = k;
        f.x_rots = X.rots;
        f.y_rots = Y.rots;
        if (j + 1 < X.size()) f.p_next = positive_stabs(X.tbs[j + 1], X.rots[j + 1]);
        if (j + 2 < X.size()) f.p_next2 = positive_stabs(X.tbs[j + 2], X.rots[j + 2]);
        if (k + 1 < Y.size()) f.n_next = negative_stabs(Y.tbs[k + 1], Y.rots[k + 1]);
        if (k + 2 < Y.size()) f.n_next2 = negative_stabs(Y.tbs[k + 2], Y.rots[k + 2]);
        bool vacuous = false;
        for (std::size_t i = 1; i <= j; ++i) vacuous |= X.tbs[i] == -1;
        for (std::size_t i = 1; i <= k; ++i) vacuous |= Y.tbs[i] == -1;
        f.degenerate = j == 0 || k == 0 || !f.p_next || *f.p_next == 0 || !f.n_next || *f.n_next == 0 || vacuous;
        out.push_back(std::move(f));
      }
  }
  return out;
}

Presentation encode_pattern(const PatternForm& pf, const Presentation& shape_of) {
  return with_lines(shape_of, pf.swapped, pf.x_rots, pf.y_rots);
}

std::vector<Move> candidate_moves(const Presentation& pr) {
  std::vector<Move> out;
  const std::int64_t P = pr.stab_pos, N = pr.stab_neg;
  for (const auto& f : decode_patterns(pr)) {
    const Chain& X = line_x(pr, f.swapped);
    const Chain& Y = line_y(pr, f.swapped);
    const auto ax = coefficients(X), ay = coefficients(Y);
    const std::size_t j = f.j, k = f.k;

    auto emit = [&](MoveFamily fam, MoveKind kind, std::int64_t amount, std::vector<std::int64_t> x,
                    std::vector<std::int64_t> y, std::int64_t dP) {
      Presentation r = with_lines(pr, f.swapped, x, y);
      r.stab_pos = P + dP;
      r.stab_neg = N - dP;
      if (r.stab_pos < 0 || r.stab_neg < 0) return;
      if (!legal_chain(r.chain1) || !legal_chain(r.chain2)) return;
      out.push_back({fam, kind, f, amount, std::move(r)});
    };
    auto flip = [](const Chain& c, std::vector<std::int64_t> rots, std::size_t upto, bool to_negative) {
      for (std::size_t i = 0; i <= upto && i < c.size(); ++i)
        rots[i] = to_negative ? fn_rot(c.tbs[i]) : fp_rot(c.tbs[i]);
      return rots;
    };

    // shifted reading: the appended entry is one more than the stabilization count
    {
      auto cf = prefix(ax, j + 1);
      cf.push_back(f.p_next ? *f.p_next + 1 : 1);
      if (cf_inverse(cf) + cf_inverse(prefix(ay, k)) == 1) {
        auto D = static_cast<std::int64_t>(abs(cf_fraction(cf).first));
        if (D <= P) {
          auto x = flip(X, X.rots, j + 1, true);
          if (j + 2 < X.size()) x[j + 2] -= 2;
          auto y = flip(Y, Y.rots, k, false);
          if (k + 1 < Y.size()) y[k + 1] -= 2;
          emit(MoveFamily::Shifted, MoveKind::D, D, x, y, -D);
        }
      }
    }
    {
      auto cf = prefix(ay, k + 1);
      cf.push_back(f.n_next ? *f.n_next + 1 : 1);
      if (cf_inverse(cf) + cf_inverse(prefix(ax, j)) == 1) {
        auto E = static_cast<std::int64_t>(abs(cf_fraction(cf).first));
        if (E <= N) {
          auto x = flip(X, X.rots, j, true);
          if (j + 1 < X.size()) x[j + 1] += 2;
          auto y = flip(Y, Y.rots, k + 1, false);
          if (k + 2 < Y.size()) y[k + 2] += 2;
          emit(MoveFamily::Shifted, MoveKind::E, E, x, y, E);
        }
      }
    }
    // literal reading: the appended entry is the stabilization count, the next unknot is kept
    if (f.p_next) {
      auto cf = prefix(ax, j + 1);
      cf.push_back(*f.p_next);
      auto Dn = cf_fraction(cf).first;
      if (Dn != 0 && cf_inverse(cf) + cf_inverse(prefix(ay, k)) == 1) {
        auto D = static_cast<std::int64_t>(abs(Dn));
        if (D <= P) emit(MoveFamily::Literal, MoveKind::D, D, flip(X, X.rots, j, true), flip(Y, Y.rots, k, false), -D);
      }
    }
    if (f.n_next) {
      auto cf = prefix(ay, k + 1);
      cf.push_back(*f.n_next);
      auto En = cf_fraction(cf).first;
      if (En != 0 && cf_inverse(cf) + cf_inverse(prefix(ax, j)) == 1) {
        auto E = static_cast<std::int64_t>(abs(En));
        if (E <= N) emit(MoveFamily::Literal, MoveKind::E, E, flip(X, X.rots, j, true), flip(Y, Y.rots, k, false), E);
      }
    }
  }
  return out;
}

bool nonvanishing_condition(const Presentation& pr) {
  return !is_fully_negative(pr.chain1.tbs[0], pr.chain1.rots[0]) &&
         !is_fully_negative(pr.chain2.tbs[0], pr.chain2.rots[0]);
}

Clause looseness_clause(const Presentation& pr) {
  const bool fp1 = is_fully_positive(pr.chain1.tbs[0], pr.chain1.rots[0]);
  const bool fn1 = is_fully_negative(pr.chain1.tbs[0], pr.chain1.rots[0]);
  const bool fp2 = is_fully_positive(pr.chain2.tbs[0], pr.chain2.rots[0]);
  const bool fn2 = is_fully_negative(pr.chain2.tbs[0], pr.chain2.rots[0]);
  const bool knot_fp = pr.stab_neg == 0, knot_fn = pr.stab_pos == 0;
  if (!fp1 && !fn1 && !fp2 && !fn2 && !knot_fp && !knot_fn) return Clause::NoExtremeLoose;
  if ((knot_fp && !fp1 && !fp2) || (knot_fn && !fn1 && !fn2)) return Clause::ExtremeKnotSingleton;
  if ((fp1 && fn2) || (fn1 && fp2)) return Clause::OppositeLeaders;
  return Clause::Unmatched;
}

namespace {

// largest (position, b) below the bound whose value has |numerator| < limit
std::optional<std::vector<std::int64_t>> largest_b(const std::vector<std::int64_t>& a, std::size_t prefix_end,
                                                   std::optional<std::int64_t> next_param, std::int64_t limit) {
  std::optional<std::vector<std::int64_t>> best;
  for (std::size_t pos = 1; pos <= prefix_end + 1 && pos < a.size(); ++pos) {
    std::int64_t hi;
    if (pos <= prefix_end) hi = a[pos] - 2;
    else if (next_param) hi = *next_param - 1;
    else continue;
    for (std::int64_t b = 1; b <= hi; ++b) {
      auto cf = prefix(a, pos);
      cf.push_back(b);
      Int num = abs(cf_fraction(cf).first);
      if (num != 0 && num < limit) best = cf;  // iteration order is increasing in the order
    }
  }
  return best;
}

}  // namespace

SearchVerdict b_search(const Presentation& pr) {
  bool loose_all = false, loose_clean = false;
  for (const auto& f : decode_patterns(pr)) {
    const auto ax = coefficients(line_x(pr, f.swapped));
    const auto ay = coefficients(line_y(pr, f.swapped));
    bool loose = false;
    if (auto cf = largest_b(ax, f.j, f.p_next, pr.stab_neg))
      loose |= cf_inverse(*cf) + cf_inverse(prefix(ay, f.k)) < 1;
    if (auto cf = largest_b(ay, f.k, f.n_next, pr.stab_pos))
      loose |= cf_inverse(*cf) + cf_inverse(prefix(ax, f.j)) < 1;
    loose_all |= loose;
    if (!f.degenerate) loose_clean |= loose;
  }
  return {loose_all, loose_all != loose_clean};
}

std::size_t ClassifyResult::fillable_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const EquivClass& c) { return c.flags.tight_ambient; }));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

ClassifyResult classify_stabilized(const TorusKnotParams& tk, std::int64_t ell, const ClassifyOptions& opt) {
  ClassifyResult res;
  res.p = tk.p;
  res.q = tk.q;
  res.ell = ell;
  auto pres = enumerate_presentations(tk, ell);
  std::sort(pres.begin(), pres.end());
  const std::size_t n = pres.size();
  std::map<Presentation, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(pres[i], i);

  std::vector<ClassicalInvariants> inv(n);
  std::vector<char> tight(n);
  std::vector<std::vector<Move>> moves(n);
  parallel_for(n, [&](std::size_t i) {
    inv[i] = compute_invariants(pres[i]);
    tight[i] = is_ambient_tight(pres[i]);
    moves[i] = candidate_moves(pres[i]);
    if (opt.reverse_readings) std::reverse(moves[i].begin(), moves[i].end());
  });

  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& m : moves[i]) {
      auto it = index.find(m.result);
      if (it == index.end()) continue;
      const std::size_t t = it->second;
      if (opt.guard) {
        std::string why;
        if (inv[i].tb != inv[t].tb || inv[i].rot != inv[t].rot) why = "rotation";
        else if (inv[i].d3 != inv[t].d3) why = "d3";
        else if (tight[i] != tight[t]) why = "ambient";
        if (!why.empty()) {
          res.rejected.push_back({pres[i], pres[t], to_string(m.family) + " move changes " + why});
          continue;
        }
      }
      if (uf.unite(i, t)) ++res.moves_applied;
    }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

  std::vector<std::vector<std::size_t>> glist;
  for (auto& [root, mem] : groups) glist.push_back(std::move(mem));
  res.classes.resize(glist.size());
  parallel_for(glist.size(), [&](std::size_t g) {
    const auto& mem = glist[g];
    EquivClass c;
    for (auto i : mem) c.members.push_back(pres[i]);
    c.representative = c.members.front();
    c.invariants = inv[mem.front()];
    c.flags.tight_ambient = tight[mem.front()];
    c.clause = looseness_clause(c.representative);
    if (c.flags.tight_ambient) {
      c.flags.loose = false;
    } else {
      switch (c.clause) {
        case Clause::NoExtremeLoose:
        case Clause::Unmatched:
          c.flags.loose = true;
          break;
        case Clause::ExtremeKnotSingleton:
          c.flags.loose = false;
          break;
        case Clause::OppositeLeaders:
          for (auto i : mem) {
            auto v = b_search(pres[i]);
            c.flags.loose |= v.loose;
            c.flags.degenerate_decoding |= v.degenerate_dependent;
          }
          break;
      }
    }
    c.flags.strongly_nonloose = !c.flags.tight_ambient && !c.flags.loose;
    for (auto i : mem)
      if (pres[i].stab_pos == 0 && nonvanishing_condition(pres[i]) && !tight[i]) c.flags.transverse = true;
    res.classes[g] = std::move(c);
  });
  return res;
}

std::vector<EquivClass> transverse_classes(const TorusKnotParams& tk) {
  std::vector<Presentation> nv;
  for (auto& pr : enumerate_presentations(tk, 0))
    if (nonvanishing_condition(pr)) nv.push_back(pr);
  auto deep = classify_stabilized(tk, tk.q);
  std::map<Presentation, std::size_t> where;
  for (std::size_t c = 0; c < deep.classes.size(); ++c)
    for (const auto& m : deep.classes[c].members) where.emplace(m, c);

  std::map<std::size_t, std::vector<Presentation>> groups;
  for (const auto& pr : nv) {
    Presentation s = pr;
    s.stab_neg = tk.q;
    groups[where.at(s)].push_back(pr);
  }
  std::vector<EquivClass> out;
  for (auto& [cid, mem] : groups) {
    EquivClass c;
    std::sort(mem.begin(), mem.end());
    c.members = mem;
    c.representative = mem.front();
    c.invariants = compute_invariants(c.representative);
    for (const auto& m : mem) {
      auto ci = compute_invariants(m);
      if (ci.A != c.invariants.A || ci.M != c.invariants.M)
        throw VerificationError("transverse_classes: members with different bigradings");
    }
    const auto& dc = deep.classes[cid];
    c.flags = dc.flags;
    c.flags.transverse = true;
    c.clause = dc.clause;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const EquivClass& a, const EquivClass& b) {
    return std::tie(a.invariants.A, a.invariants.M) < std::tie(b.invariants.A, b.invariants.M);
  });
  return out;
}

namespace {

const EquivClass& class_of(const ClassifyResult& r, const Presentation& pr) {
  for (const auto& c : r.classes)
    if (std::binary_search(c.members.begin(), c.members.end(), pr)) return c;
  throw VerificationError("class_of: presentation not enumerated");
}

}  // namespace

bool positive_stab_looseness(const Presentation& pr) {
  auto tk = torus_knot_params(pr.p, pr.q);
  auto r = classify_stabilized(tk, pr.ell() + 1);
  return class_of(r, stabilize(pr, Sign::Positive)).flags.loose;
}

bool negative_stab_nonloose(const Presentation& pr) {
  auto tk = torus_knot_params(pr.p, pr.q);
  auto r = classify_stabilized(tk, pr.ell() + 1);
  const auto& c = class_of(r, stabilize(pr, Sign::Negative));
  return c.flags.strongly_nonloose;
}

std::string to_string(MoveFamily f) { return f == MoveFamily::Shifted ? "shifted" : "literal"; }

std::string to_string(Clause c) {
  switch (c) {
    case Clause::NoExtremeLoose: return "no-extreme";
    case Clause::ExtremeKnotSingleton: return "extreme-knot";
    case Clause::OppositeLeaders: return "opposite-leaders";
    case Clause::Unmatched: return "unmatched";
  }
  return "?";
}

void to_json(nlohmann::json& j, const ClassFlags& f) {
  j = nlohmann::json{{"degenerate_decoding", f.degenerate_decoding},
                     {"loose", f.loose},
                     {"strongly_nonloose", f.strongly_nonloose},
                     {"tight_ambient", f.tight_ambient},
                     {"transverse", f.transverse}};
}

void to_json(nlohmann::json& j, const EquivClass& c) {
  j = nlohmann::json{{"representative", c.representative},
                     {"size", c.members.size()},
                     {"flags", c.flags},
                     {"clause", to_string(c.clause)},
                     {"invariants", c.invariants}};
}

void to_json(nlohmann::json& j, const ClassifyResult& r) {
  nlohmann::json rej = nlohmann::json::array();
  for (const auto& x : r.rejected) rej.push_back({{"from", x.from}, {"to", x.to}, {"reason", x.reason}});
  j = nlohmann::json{{"p", r.p},
                     {"q", r.q},
                     {"ell", r.ell},
                     {"classes", r.classes},
                     {"moves_applied", r.moves_applied},
                     {"rejected_moves", rej},
                     {"fillable_classes", r.fillable_count()}};
}

}  // namespace negtorus
