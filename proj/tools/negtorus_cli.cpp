// negtorus: command-line front end
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "negtorus/classify.hpp"
#include "negtorus/floer.hpp"
#include "negtorus/invariants.hpp"
#include "negtorus/lens.hpp"
#include "negtorus/parallel.hpp"
#include "negtorus/verify.hpp"

using namespace negtorus;
using nlohmann::json;

namespace {

struct Globals {
  bool json_out = false;
  bool quiet = false;
  std::string out_file;
  unsigned threads = 0;
};

// thrown for bad user input; maps to exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TorusKnotParams checked_params(std::int64_t p, std::int64_t q) {
  try {
    return torus_knot_params(p, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("p q: ") + e.what());
  }
}

std::string pair_str(std::int64_t A, std::int64_t M) {
  return "(" + std::to_string(A) + ", " + std::to_string(M) + ")";
}

std::string tower_str(const Tower& t) {
  // free tower shown at its top, torsion towers at their bottom
  if (!t.order) return "F[U] top " + pair_str(t.A, t.M);
  return "U^" + std::to_string(*t.order) + " bottom " + pair_str(t.A, t.M);
}

std::string pres_str(const Presentation& pr) {
  std::ostringstream os;
  auto chain = [&](const Chain& c) {
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c.tbs[i] << ':' << c.rots[i];
    os << ']';
  };
  chain(pr.chain1);
  os << ' ';
  chain(pr.chain2);
  os << " +" << pr.stab_pos << " -" << pr.stab_neg;
  return os.str();
}

std::string flags_str(const ClassFlags& f) {
  std::string s;
  if (f.tight_ambient) s += " tight";
  if (f.loose) s += " loose";
  if (f.strongly_nonloose) s += " strongly-non-loose";
  if (f.transverse) s += " transverse";
  if (f.degenerate_decoding) s += " degenerate";
  return s;
}

json params_json(const TorusKnotParams& tk) {
  auto split = lemma_cfe_split(tk);
  return json{{"p", tk.p},         {"q", tk.q},   {"p_prime", tk.pPrime}, {"q_prime", tk.qPrime},
              {"n", tk.n},         {"k", tk.k},   {"C", tk.C},            {"D", tk.D},
              {"cf1", split.cf1.coeffs}, {"cf2", split.cf2.coeffs}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian and transverse negative torus knots"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "print JSON instead of a table");
  app.add_flag("--quiet", g.quiet, "suppress headers and timings");
  app.add_option("--out", g.out_file, "also write JSON to FILE");
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);

  std::string cf_u, cf_v;
  std::int64_t p = 0, q = 0, ell = 0;
  std::string only;
  std::size_t instances = 1000;
  std::uint64_t seed = VerifyOptions{}.seed;

  auto* cf = app.add_subcommand("cf", "negative continued fraction of u/v");
  cf->add_option("u", cf_u)->required();
  cf->add_option("v", cf_v)->required();
  auto add_pq = [&](CLI::App* s) {
    s->add_option("p", p)->required();
    s->add_option("q", q)->required();
  };
  auto* params = app.add_subcommand("params", "torus knot parameters and the two chain expansions");
  add_pq(params);
  auto* enumerate = app.add_subcommand("enumerate", "list presentations with classical invariants");
  add_pq(enumerate);
  enumerate->add_option("--ell", ell, "stabilization level")->check(CLI::NonNegativeNumber);
  auto* classify = app.add_subcommand("classify", "equivalence classes at a stabilization level");
  add_pq(classify);
  classify->add_option("--ell", ell, "stabilization level")->check(CLI::NonNegativeNumber);
  auto* transverse = app.add_subcommand("transverse", "non-loose transverse classes");
  add_pq(transverse);
  auto* hfk = app.add_subcommand("hfk", "HFK^- of the positive torus knot T(p,q)");
  add_pq(hfk);
  auto* match = app.add_subcommand("match", "compare invariant locations with tower bottoms");
  add_pq(match);
  auto* lens = app.add_subcommand("lens", "surgery onto the lens space and Honda's count");
  add_pq(lens);
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--only", only, "comma separated criterion ids");
  verify->add_option("--instances", instances, "randomized instances per property suite");
  verify->add_option("--seed", seed, "property suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  set_thread_count(g.threads);
  json j;
  std::ostringstream table;
  int rc = 0;
  try {
    if (*cf) {
      Int u, v;
      try {
        u = Int(cf_u);
        v = Int(cf_v);
      } catch (const std::exception&) {
        throw UsageError("u v: not integers");
      }
      NegCF c;
      try {
        c = neg_cf(u, v);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("u v: ") + e.what());
      }
      j = json{{"u", u.str()}, {"v", v.str()}, {"coeffs", c.coeffs}};
      table << to_string(c) << '\n';
    } else if (*params) {
      auto tk = checked_params(p, q);
      j = params_json(tk);
      if (!g.quiet) table << "T(" << p << ",-" << q << ")\n";
      for (auto& [k, v] : j.items()) table << k << ' ' << v.dump() << '\n';
    } else if (*enumerate) {
      auto tk = checked_params(p, q);
      j = json::array();
      if (!g.quiet) table << "chains +stab -stab | tb rot d3 | (A, M)\n";
      for (const auto& pr : enumerate_presentations(tk, ell)) {
        auto inv = compute_invariants(pr);
        j.push_back(json{{"presentation", pr}, {"invariants", inv}, {"tight_ambient", is_ambient_tight(pr)}});
        table << pres_str(pr) << " | " << inv.tb << ' ' << inv.rot << ' ' << inv.d3 << " | " << pair_str(inv.A, inv.M)
              << (is_ambient_tight(pr) ? " tight" : "") << '\n';
      }
    } else if (*classify) {
      auto tk = checked_params(p, q);
      auto r = classify_stabilized(tk, ell);
      j = r;
      if (!g.quiet)
        table << r.classes.size() << " classes, " << r.fillable_count() << " fillable, " << r.moves_applied
              << " moves applied\n";
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const auto& c = r.classes[i];
        table << '#' << i << ' ' << pres_str(c.representative) << " | tb " << c.invariants.tb << " rot "
              << c.invariants.rot << " d3 " << c.invariants.d3 << " | size " << c.members.size() << ' '
              << to_string(c.clause) << flags_str(c.flags) << '\n';
      }
    } else if (*transverse) {
      auto tk = checked_params(p, q);
      auto cs = transverse_classes(tk);
      j = json{{"p", p}, {"q", q}, {"classes", cs}};
      if (!g.quiet) table << cs.size() << " transverse classes\n";
      for (const auto& c : cs) table << pair_str(c.invariants.A, c.invariants.M) << ' ' << pres_str(c.representative) << '\n';
    } else if (*hfk) {
      checked_params(p, q);
      auto m = hfk_minus(p, q);
      j = m;
      for (const auto& t : m.towers) table << tower_str(t) << '\n';
    } else if (*match) {
      checked_params(p, q);
      auto r = match_invariants(p, q);
      j = r;
      table << (r.ok() ? "match" : "mismatch") << ": " << r.realized.size() << " realized, " << r.unrealized.size()
            << " unrealized bottoms\n";
      for (const auto& b : r.realized) table << "realized " << pair_str(b.A, b.M) << '\n';
      for (const auto& b : r.unrealized) table << "unrealized " << pair_str(b.A, b.M) << '\n';
      for (const auto& b : r.misses) table << "miss " << pair_str(b.A, b.M) << '\n';
      if (!r.ok()) rc = 1;
    } else if (*lens) {
      auto r = surjectivity_check(checked_params(p, q));
      j = r;
      table << "L(" << r.u << "," << r.v << ") honda " << r.honda << " image " << r.image_size << ' '
            << (r.ok() ? "surjective" : "NOT surjective") << '\n';
      if (!r.ok()) rc = 1;
    } else if (*verify) {
      VerifyOptions opt;
      opt.property_instances = instances;
      opt.seed = seed;
      std::stringstream ss(only);
      for (std::string tok; std::getline(ss, tok, ',');) {
        try {
          opt.only.insert(std::stoi(tok));
        } catch (const std::exception&) {
          throw UsageError("--only: bad criterion id '" + tok + "'");
        }
      }
      j = json::array();
      auto res = run_acceptance(opt, [&](const CheckResult& r) {
        if (!g.json_out) std::cout << format_line(r, !g.quiet) << std::endl;
      });
      for (const auto& r : res) {
        j.push_back(r);
        if (!r.pass) rc = 1;
      }
      table.str("");
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (g.json_out) std::cout << j.dump(2) << '\n';
  else std::cout << table.str();
  if (!g.out_file.empty()) {
    std::ofstream f(g.out_file);
    if (!f) {
      std::cerr << "usage error: --out: cannot open " << g.out_file << '\n';
      return 2;
    }
    f << j.dump(2) << '\n';
  }
  return rc;
}
