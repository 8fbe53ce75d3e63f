// Batch front end: exact computations in Coxeter groups, Hecke algebras,
// the Schur algebroid and the equivariant calculus, with JSON/table output
// and a persistent KL cache. Exit codes: 0 ok, 1 verification mismatch,
// 2 usage error, 3 cache mismatch.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "schur/json_io.hpp"
#include "schur/verify.hpp"

using namespace schur;

namespace {

struct Options {
  std::string type_shorthand;
  std::string spec_json;
  std::string format = "table";
  std::string cache_path;
  bool stats = false;
  int jobs = 1;
  int deg_cap = 8;
  int search_cap = 12;
  int chain_len = 3;
  int gen_cap = 16;
  std::string I, J, K, L;
  std::string w, p, q;
  bool all = false;
  bool decompose = false;
  std::string chain;
  std::string suite = "all";
};

CoxeterSpec resolve_spec(const Options& o) {
  if (!o.spec_json.empty()) return CoxeterSpec::from_json_text(o.spec_json);
  if (!o.type_shorthand.empty()) return CoxeterSpec::parse_shorthand(o.type_shorthand);
  throw std::invalid_argument("a group must be given via --type or --spec");
}

// "0,{s1},0,{s2},0" with braces shielding inner commas; tokens may be
// empty, "e", or a UTF-8 empty-set sign for the empty subset
std::vector<GenSet> parse_chain(const CoxeterSystem& sys, const std::string& text) {
  std::vector<std::string> toks;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{') { ++depth; continue; }
    if (c == '}') { --depth; continue; }
    if (c == ',' && depth == 0) { toks.push_back(cur); cur.clear(); continue; }
    cur += c;
  }
  toks.push_back(cur);
  std::vector<GenSet> out;
  for (auto t : toks) {
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    t = (b == std::string::npos) ? "" : t.substr(b, e - b + 1);
    if (t == "∅" || t == "0" || t == "e" || t.empty())
      out.push_back(GenSet());
    else
      out.push_back(sys.parse_gens(t));
  }
  return out;
}

std::string hecke_text(const CoxeterSystem& sys, const HeckeElt& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    const Laurent& c = it->second;
    if (c.is_one()) {
      out += "H_" + sys.word_str(it->first);
    } else if (c.terms().size() == 1) {
      out += c.str() + "*H_" + sys.word_str(it->first);
    } else {
      out += "(" + c.str() + ")*H_" + sys.word_str(it->first);
    }
  }
  return out;
}

std::string schur_text(const CoxeterSystem& sys, const SchurElt& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    const Laurent& c = it->second;
    if (c.is_one()) {
      out += "M_" + sys.word_str(it->first);
    } else if (c.terms().size() == 1) {
      out += c.str() + "*M_" + sys.word_str(it->first);
    } else {
      out += "(" + c.str() + ")*M_" + sys.word_str(it->first);
    }
  }
  return out;
}

int cmd_kl(Workspace& ws, const Options& o) {
  auto& sys = *ws.sys;
  std::vector<Element> targets;
  if (o.all) {
    targets = sys.all_elements();
  } else if (!o.w.empty()) {
    targets.push_back(sys.parse(o.w));
  } else {
    throw CLI::ValidationError("kl needs --w <word> or --all");
  }
  if (o.format == "json") {
    ojson rows = ojson::array();
    for (const auto& w : targets) {
      ojson row;
      row["w"] = sys.word_str(w);
      row["h"] = hecke_to_json(sys, ws.hecke->kl(w));
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(1) << "\n";
  } else {
    for (const auto& w : targets)
      std::cout << "h(" << sys.word_str(w) << ") = " << hecke_text(sys, ws.hecke->kl(w))
                << "\n";
  }
  return 0;
}

int cmd_cosets(Workspace& ws, const Options& o) {
  auto& sys = *ws.sys;
  GenSet I = sys.parse_gens(o.I), J = sys.parse_gens(o.J);
  auto cosets = ws.cosets->double_cosets(I, J);
  if (o.format == "json") {
    ojson rows = ojson::array();
    for (const auto& p : cosets) {
      ojson row = coset_to_json(sys, *p);
      row["kilmoyer"] = sys.gen_labels(p->kilmoyer);
      row["poincare"] = p->poincare.str();
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(1) << "\n";
  } else {
    for (const auto& p : cosets)
      std::cout << "p_min=" << sys.word_str(p->pmin) << "  p_max=" << sys.word_str(p->pmax)
                << "  size=" << p->size() << "  K={" << sys.gens_str(p->kilmoyer)
                << "}  pi=" << p->poincare.str() << "\n";
  }
  return 0;
}

int cmd_schur_mult(Workspace& ws, const Options& o) {
  auto& sys = *ws.sys;
  GenSet I = sys.parse_gens(o.I), J = sys.parse_gens(o.J), K = sys.parse_gens(o.K);
  SchurElt f = ws.alg->standard(I, J, sys.parse(o.p));
  SchurElt g = ws.alg->standard(J, K, sys.parse(o.q));
  SchurElt prod = ws.alg->star(f, g);
  if (o.format == "json")
    std::cout << schur_to_json(sys, prod).dump(1) << "\n";
  else
    std::cout << schur_text(sys, prod) << "\n";
  return 0;
}

int cmd_char(Workspace& ws, const Options& o) {
  auto& sys = *ws.sys;
  if (o.chain.empty()) throw CLI::ValidationError("char needs --chain");
  auto chain = parse_chain(sys, o.chain);
  SchurElt ch = ws.alg->bott_samelson_char(chain);
  if (o.decompose) {
    auto dec = ws.alg->decompose_kl(ch);
    ojson rows = ojson::array();
    for (const auto& [pmin, c] : dec) {
      ojson row;
      row["p"] = sys.word_str(pmin);
      row["coeff"] = laurent_to_json(c);
      row["positive"] = c.nonneg();
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(1) << "\n";
    return 0;
  }
  if (o.format == "json")
    std::cout << schur_to_json(sys, ch).dump(1) << "\n";
  else
    std::cout << schur_text(sys, ch) << "\n";
  return 0;
}

int cmd_phi(Workspace& ws, const Options& o) {
  auto& sys = *ws.sys;
  if (!ws.has_rep())
    throw CLI::ValidationError("this system has no rational reflection representation");
  GenSet I = sys.parse_gens(o.I), J = sys.parse_gens(o.J);
  auto p = ws.cosets->coset_of(sys.parse(o.p), I, J);
  auto phis = ws.dem->phi_basis(*p);
  if (o.format == "json") {
    ojson rows = ojson::array();
    for (const auto& [x, phi] : phis) {
      ojson row;
      row["x"] = sys.word_str(x);
      row["degree"] = 2 * (p->pmax.length() - x.length());
      row["phi"] = rx_to_json(sys, phi);
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(1) << "\n";
  } else {
    for (const auto& [x, phi] : phis) {
      std::cout << "phi(" << sys.word_str(x) << ")  deg "
                << 2 * (p->pmax.length() - x.length()) << ":";
      for (size_t i = 0; i < phi.X().size(); ++i)
        if (!phi.components()[i].is_zero())
          std::cout << "  [" << sys.word_str(phi.X()[i]) << "] "
                    << phi.components()[i].str();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_invariants(Workspace& ws, const Options& o) {
  auto& sys = *ws.sys;
  if (!ws.has_rep())
    throw CLI::ValidationError("this system has no rational reflection representation");
  if (o.p.empty()) {
    GenSet K = sys.parse_gens(o.K);
    auto dims = ws.dem->hilbert_parabolic(K, o.deg_cap);
    ojson row;
    row["K"] = sys.gen_labels(K);
    ojson degs = ojson::array(), ds = ojson::array();
    for (int d = 0; d <= o.deg_cap; d += 2) degs.push_back(d);
    for (int x : dims) ds.push_back(x);
    row["degrees"] = degs;
    row["dims"] = ds;
    std::cout << row.dump(1) << "\n";
    return 0;
  }
  GenSet I = sys.parse_gens(o.I), J = sys.parse_gens(o.J);
  GenSet K = sys.parse_gens(o.K), L = sys.parse_gens(o.L);
  auto p = ws.cosets->coset_of(sys.parse(o.p), I, J);
  auto rep = ws.dem->verify_induction(*p, K, L, o.deg_cap);
  ojson row;
  row["claim"] = "invariant dimensions match the extension-of-scalars side";
  row["status"] = rep.ok ? "ok" : "mismatch";
  ojson detail;
  detail["p_min"] = sys.word_str(p->pmin);
  detail["degrees"] = rep.degrees;
  detail["invariant_dims"] = rep.lhs;
  detail["tensor_dims"] = rep.rhs;
  row["detail"] = std::move(detail);
  std::cout << row.dump(1) << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_verify(Workspace& ws, const Options& o) {
  if (!verify::is_suite(o.suite)) {
    std::cerr << "unknown suite: " << o.suite << "\n";
    return 2;
  }
  verify::Caps caps;
  caps.deg_cap = o.deg_cap;
  caps.search_cap = o.search_cap;
  caps.chain_len = o.chain_len;
  caps.jobs = o.jobs;
  auto results = verify::run(ws, o.suite, caps);
  bool ok = true;
  ojson rows = ojson::array();
  for (const auto& suite : results) {
    for (const auto& c : suite.checks) {
      ojson row;
      row["suite"] = suite.name;
      row["claim"] = c.claim;
      row["status"] = c.ok ? "ok" : "mismatch";
      if (c.advisory) row["advisory"] = true;
      if (!c.detail.empty()) row["detail"] = c.detail;
      rows.push_back(std::move(row));
    }
    ok = ok && suite.ok();
  }
  std::cout << rows.dump(1) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact Coxeter / Hecke / Schur-algebroid toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--type", o.type_shorthand, "group shorthand, e.g. A2, B3, I2:5, A2xA1");
  app.add_option("--spec", o.spec_json, "group spec as JSON");
  app.add_option("--format", o.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cache", o.cache_path, "KL cache file (JSON)");
  app.add_flag("--stats", o.stats, "print computation counters to stderr");
  app.add_option("--jobs", o.jobs, "parallelism degree for verification suites");
  app.add_option("--deg-cap", o.deg_cap, "degree cap for graded computations (even)");
  app.add_option("--search-cap", o.search_cap, "depth cap for sequence search");
  app.add_option("--chain-len", o.chain_len, "maximal chain length for positivity checks");
  app.add_option("--gen-cap", o.gen_cap, "maximal number of generators");

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig basis elements");
  kl->add_option("--w", o.w, "group element as a dot-separated word");
  kl->add_flag("--all", o.all, "whole table");

  auto* cosets = app.add_subcommand("cosets", "double cosets for (I, J)");
  cosets->add_option("--I", o.I, "left subset, comma-separated labels");
  cosets->add_option("--J", o.J, "right subset");

  auto* mult = app.add_subcommand("schur-mult", "product of standard basis elements");
  mult->add_option("--I", o.I, "left subset");
  mult->add_option("--J", o.J, "middle subset");
  mult->add_option("--K", o.K, "right subset");
  mult->add_option("--p", o.p, "element of the (I,J) coset")->required();
  mult->add_option("--q", o.q, "element of the (J,K) coset")->required();

  auto* chr = app.add_subcommand("char", "iterated translation character");
  chr->add_option("--chain", o.chain, "nested subsets, e.g. \"0,{s1},0,{s2},0\"");
  chr->add_flag("--decompose", o.decompose, "decompose in the KL basis");

  auto* phi = app.add_subcommand("phi", "basis tuples of a double coset");
  phi->add_option("--I", o.I, "left subset");
  phi->add_option("--J", o.J, "right subset");
  phi->add_option("--p", o.p, "element of the coset")->required();

  auto* inv = app.add_subcommand("invariants", "graded invariant dimensions");
  inv->add_option("--I", o.I, "left subset");
  inv->add_option("--J", o.J, "right subset");
  inv->add_option("--K", o.K, "left invariance subgroup");
  inv->add_option("--L", o.L, "right invariance subgroup");
  inv->add_option("--p", o.p, "element of the coset (omit for parabolic dims)");

  auto* ver = app.add_subcommand("verify", "run identity suites");
  ver->add_option("--suite", o.suite, "suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env = std::getenv("SCHUR_MAX_DEGREE")) {
    int cap = std::atoi(env);
    if (cap > 0 && o.deg_cap > cap) o.deg_cap = cap;
  }

  try {
    Workspace ws(resolve_spec(o), o.gen_cap);
    if (!o.cache_path.empty()) {
      CacheStatus st = load_kl_cache(o.cache_path, *ws.sys, *ws.hecke);
      if (st.version_mismatch) {
        std::cerr << "cache format mismatch: " << o.cache_path << "\n";
        return 3;
      }
      if (st.spec_mismatch) {
        std::cerr << "cache belongs to a different group spec: " << o.cache_path << "\n";
        return 3;
      }
    }
    std::uint64_t preload_baseline = ws.hecke->kl_computed();
    int rc = 0;
    if (kl->parsed()) rc = cmd_kl(ws, o);
    else if (cosets->parsed()) rc = cmd_cosets(ws, o);
    else if (mult->parsed()) rc = cmd_schur_mult(ws, o);
    else if (chr->parsed()) rc = cmd_char(ws, o);
    else if (phi->parsed()) rc = cmd_phi(ws, o);
    else if (inv->parsed()) rc = cmd_invariants(ws, o);
    else if (ver->parsed()) rc = cmd_verify(ws, o);
    if (!o.cache_path.empty()) save_kl_cache(o.cache_path, *ws.sys, *ws.hecke);
    if (o.stats)
      std::cerr << "{\"kl_computed\": " << (ws.hecke->kl_computed() - preload_baseline)
                << "}\n";
    return rc;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
