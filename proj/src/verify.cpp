#include "schur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace schur {

Workspace::Workspace(const CoxeterSpec& spec, int gen_cap) {
  sys = std::make_unique<CoxeterSystem>(spec, gen_cap);
  hecke = std::make_unique<HeckeAlgebra>(*sys);
  cosets = std::make_unique<Cosets>(*sys);
  alg = std::make_unique<Algebroid>(*sys, *hecke, *cosets);
  bool has_dihedral = false;
  std::function<void(const CoxeterSpec&)> walk = [&](const CoxeterSpec& s) {
    if (s.kind == CoxeterSpec::Kind::I2) has_dihedral = true;
    for (const auto& f : s.factors) walk(f);
  };
  walk(spec);
  if (!has_dihedral) {
    rep = std::make_unique<ReflectionRep>(*sys);
    dem = std::make_unique<Demazure>(*rep, *cosets);
  }
}

namespace verify {

bool positivity_is_theorem(const CoxeterSpec& spec) {
  switch (spec.kind) {
    case CoxeterSpec::Kind::A:
    case CoxeterSpec::Kind::B:
      return true;
    case CoxeterSpec::Kind::I2:
      return spec.m == 2 || spec.m == 3 || spec.m == 4 || spec.m == 6;
    case CoxeterSpec::Kind::Product:
      for (const auto& f : spec.factors)
        if (!positivity_is_theorem(f)) return false;
      return true;
  }
  return false;
}

namespace {

std::vector<GenSet> all_subsets(const CoxeterSystem& sys) {
  std::vector<GenSet> out;
  for (std::uint32_t b = 0; b < (1u << sys.num_gens()); ++b) out.push_back(GenSet(b));
  return out;
}

void parallel_for(int jobs, long n, const std::function<void(long)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<long> next(0);
  std::vector<std::thread> pool;
  int k = std::min<long>(jobs, n);
  for (int t = 0; t < k; ++t)
    pool.emplace_back([&] {
      long i;
      while ((i = next.fetch_add(1)) < n) body(i);
    });
  for (auto& th : pool) th.join();
}

struct Rand {
  std::mt19937_64 rng;
  explicit Rand(std::uint64_t seed) : rng(seed) {}
  int pick(int n) { return (int)(rng() % (std::uint64_t)n); }
  Laurent laurent() {
    Laurent f;
    int terms = 1 + pick(3);
    for (int i = 0; i < terms; ++i) {
      int c = pick(7) - 3;
      if (c == 0) c = 1;
      f += Laurent(c, pick(7) - 3);
    }
    return f;
  }
  HeckeElt hecke_elt(const HeckeAlgebra& H, const std::vector<Element>& W) {
    HeckeElt h = H.zero();
    int terms = 1 + pick(3);
    for (int i = 0; i < terms; ++i) h.add(W[pick((int)W.size())], laurent());
    return h;
  }
};

using CheckList = std::vector<Check>;

void push(CheckList& cs, const std::string& claim, bool ok, const std::string& detail = "",
          bool advisory = false) {
  cs.push_back({claim, ok, advisory, detail});
}

/* ---------------- suites ---------------- */

CheckList suite_hecke(Workspace& ws, const Caps& caps) {
  CheckList cs;
  auto& H = *ws.hecke;
  const auto& W = ws.sys->all_elements();
  Rand rnd(caps.seed);

  bool assoc = true;
  std::string where;
  for (int i = 0; i < caps.random_triples && assoc; ++i) {
    HeckeElt a = rnd.hecke_elt(H, W), b = rnd.hecke_elt(H, W), c = rnd.hecke_elt(H, W);
    if (H.multiply(H.multiply(a, b), c) != H.multiply(a, H.multiply(b, c))) {
      assoc = false;
      where = "triple " + std::to_string(i);
    }
  }
  push(cs, "hecke product is associative on random triples", assoc, where);

  bool barinv = true, selfdual = true;
  for (const auto& w : W) {
    HeckeElt hw = H.kl(w);
    if (H.bar(hw) != hw) { selfdual = false; break; }
  }
  for (int i = 0; i < 10; ++i) {
    HeckeElt h = rnd.hecke_elt(H, W);
    if (H.bar(H.bar(h)) != h) { barinv = false; break; }
  }
  push(cs, "bar is an involution on random elements", barinv);
  push(cs, "every KL basis element is bar-self-dual", selfdual);

  bool inv_ok = true;
  for (const auto& w : W)
    if (H.multiply(H.std_inverse(w), H.std_basis(w)) != H.unit()) { inv_ok = false; break; }
  push(cs, "standard inverses multiply back to the unit", inv_ok);

  bool anti_ok = true;
  for (int i = 0; i < 10; ++i) {
    HeckeElt h = rnd.hecke_elt(H, W);
    if (H.anti_involution(H.anti_involution(h)) != h) { anti_ok = false; break; }
  }
  push(cs, "the anti-involution squares to the identity", anti_ok);

  bool pair_delta = true;
  for (const auto& x : W)
    for (const auto& y : W) {
      Laurent want = (x == y) ? Laurent(1) : Laurent();
      if (H.pairing(H.std_basis(x), H.std_basis(y)) != want) { pair_delta = false; break; }
    }
  push(cs, "standard basis is orthonormal for the bilinear form", pair_delta);

  bool pair_def = true;
  for (int i = 0; i < 10; ++i) {
    HeckeElt f = rnd.hecke_elt(H, W), g = rnd.hecke_elt(H, W);
    Laurent via_def = H.multiply(f, H.anti_involution(g)).coeff(ws.sys->identity());
    if (via_def != H.pairing(f, g)) { pair_def = false; break; }
  }
  push(cs, "closed-form pairing matches the H_id coefficient of f i(g)", pair_def);
  return cs;
}

CheckList suite_parabolic(Workspace& ws, const Caps&) {
  CheckList cs;
  auto& H = *ws.hecke;
  auto& sys = *ws.sys;
  bool paramult = true, parasquare = true, longestpar = true, triangular = true;
  std::string d1, d2, d3, d4;
  bool positivity = true;
  for (GenSet I : all_subsets(sys)) {
    Element wI = sys.longest_element(I);
    HeckeElt hwI = H.kl(wI);
    Laurent piI = sys.poincare_parabolic(I).second;
    // explicit expansion of the KL element of a longest parabolic element
    HeckeElt explicit_h = H.zero();
    for (const auto& x : sys.parabolic_elements(I))
      explicit_h.add(x, Laurent::v(wI.length() - x.length()));
    if (hwI != explicit_h) {
      longestpar = false;
      d3 = "I=" + sys.gens_str(I);
    }
    for (const auto& x : sys.parabolic_elements(I)) {
      if (H.multiply(H.std_basis(x), hwI) != hwI.scaled(Laurent::v(-x.length()))) {
        paramult = false;
        d1 = "I=" + sys.gens_str(I) + " x=" + sys.word_str(x);
      }
    }
    for (GenSet K : all_subsets(sys)) {
      if (!K.subset_of(I)) continue;
      Laurent piK = sys.poincare_parabolic(K).second;
      if (H.multiply(H.kl(sys.longest_element(K)), hwI) != hwI.scaled(piK)) {
        parasquare = false;
        d2 = "K=" + sys.gens_str(K) + " I=" + sys.gens_str(I);
      }
    }
  }
  // triangularity and positivity of the full KL table
  for (const auto& w : sys.all_elements()) {
    for (const auto& [x, c] : H.kl(w).terms()) {
      if (!sys.bruhat_leq(x, w)) { triangular = false; d4 = sys.word_str(w); }
      if (x != w && !(c.nonneg() && c.positive_exponents_only())) {
        positivity = false;
        d4 = "h[" + sys.word_str(x) + "," + sys.word_str(w) + "]=" + c.str();
      }
      if (x == w && !c.is_one()) { triangular = false; d4 = sys.word_str(w); }
    }
  }
  push(cs, "right multiplication by a parabolic KL element rescales by v^-l", paramult, d1);
  push(cs, "nested parabolic KL elements multiply by the Poincare polynomial", parasquare, d2);
  push(cs, "parabolic KL elements have the closed-form expansion", longestpar, d3);
  push(cs, "KL expansions are unitriangular over the Bruhat order", triangular, d4);
  bool theorem = positivity_is_theorem(ws.sys->spec());
  push(cs, "KL coefficients lie in v N[v]", positivity, d4, !theorem);
  return cs;
}

CheckList suite_cosets(Workspace& ws, const Caps&) {
  CheckList cs;
  auto& sys = *ws.sys;
  auto& C = *ws.cosets;
  const auto& W = sys.all_elements();
  bool partition = true, count = true, howlett = true, bruhatprop = true, quo_monotone = true;
  std::string d;
  for (GenSet I : all_subsets(sys))
    for (GenSet J : all_subsets(sys)) {
      auto cosets = C.double_cosets(I, J);
      long total = 0;
      for (const auto& p : cosets) {
        total += p->size();
        // Howlett count: |p| = |D_K n W_I| * |W_J|
        long dk = 0;
        for (const auto& u : sys.parabolic_elements(I)) {
          bool minimal = true;
          for (int s : p->kilmoyer.members())
            if (sys.right_descent(u, s)) { minimal = false; break; }
          if (minimal) ++dk;
        }
        long wj = (long)sys.parabolic_elements(J).size();
        if (dk * wj != p->size()) { count = false; d = "I=" + sys.gens_str(I) + " J=" + sys.gens_str(J); }
        for (const auto& x : p->elements) {
          auto [u, v] = C.howlett_factor(x, *p);
          if (sys.multiply(u, sys.multiply(p->pmin, v)) != x ||
              u.length() + p->pmin.length() + v.length() != x.length())
            howlett = false;
          if (!sys.in_parabolic(v, J)) howlett = false;
        }
        // if x and tx lie in p then t in W_I or x^{-1} t x in W_J
        for (const auto& x : p->elements)
          for (const auto& t : sys.reflections()) {
            Element tx = sys.multiply(t, x);
            if (!p->contains(tx) || tx == x) continue;
            Element tp = sys.multiply(sys.inverse(x), tx);  // x^{-1} (tx) = x^{-1}tx
            if (!sys.in_parabolic(t, I) && !sys.in_parabolic(tp, J)) bruhatprop = false;
          }
      }
      if (total != (long)W.size()) partition = false;
      // quo is a poset morphism into any coarser pair
      for (const auto& p : cosets)
        for (const auto& q : cosets)
          if (C.coset_bruhat_leq(*p, *q)) {
            auto qp = C.quotient(*p, sys.all_gens(), sys.all_gens());
            auto qq = C.quotient(*q, sys.all_gens(), sys.all_gens());
            if (!C.coset_bruhat_leq(*qp, *qq)) quo_monotone = false;
          }
    }
  push(cs, "double cosets partition the group", partition);
  push(cs, "coset sizes follow the Kilmoyer count", count, d);
  push(cs, "Howlett factorizations recompose with additive lengths", howlett);
  push(cs, "reflections moving inside a coset act through W_I or W_J", bruhatprop);
  push(cs, "the quotient map is monotone for the coset Bruhat order", quo_monotone);
  return cs;
}

CheckList suite_poincare(Workspace& ws, const Caps&) {
  CheckList cs;
  auto& sys = *ws.sys;
  auto& C = *ws.cosets;
  bool p1 = true, p2 = true, p3 = true, p4 = true, ratio = true;
  std::string d;
  auto subsets = all_subsets(sys);
  for (GenSet I : subsets)
    for (GenSet J : subsets) {
      auto [ptI, piI] = sys.poincare_parabolic(I);
      auto [ptJ, piJ] = sys.poincare_parabolic(J);
      for (const auto& p : C.double_cosets(I, J)) {
        auto [ptK, piK] = sys.poincare_parabolic(p->kilmoyer);
        Element wI = sys.longest_element(I), wJ = sys.longest_element(J),
                wK = sys.longest_element(p->kilmoyer);
        if (p->pmax.length() - p->pmin.length() !=
            wI.length() + wJ.length() - wK.length())
          p1 = false;
        if (p->poincare_tilde * ptK != ptI * ptJ) {
          p2 = false;
          d = "I=" + sys.gens_str(I) + " J=" + sys.gens_str(J) + " p=" + sys.word_str(p->pmin);
        }
        if (p->poincare * piK != piI * piJ) p3 = false;
        if (!p->poincare.self_dual()) p4 = false;
        // nested divisibility against every coarser pair
        for (GenSet K : subsets)
          for (GenSet L : subsets) {
            if (!I.subset_of(K) || !J.subset_of(L)) continue;
            auto q = C.quotient(*p, K, L);
            try {
              Laurent r = C.poincare_ratio(I, *p, J, K, *q, L);
              if (!r.nonneg()) ratio = false;
            } catch (const std::exception&) {
              ratio = false;
            }
          }
      }
    }
  push(cs, "coset length spread matches the longest-element lengths", p1);
  push(cs, "reduced Poincare polynomials factor through the Kilmoyer subset", p2, d);
  push(cs, "Poincare polynomials factor through the Kilmoyer subset", p3);
  push(cs, "coset Poincare polynomials are self-dual", p4);
  push(cs, "nested Poincare ratios divide exactly with nonnegative coefficients", ratio);
  return cs;
}

CheckList suite_defect(Workspace& ws, const Caps&) {
  CheckList cs;
  auto& sys = *ws.sys;
  auto& C = *ws.cosets;
  bool ok = true;
  std::string d;
  for (GenSet I : all_subsets(sys))
    for (GenSet J : all_subsets(sys))
      for (const auto& p : C.double_cosets(I, J))
        for (const auto& x : p->elements)
          if (C.length_defect(x, *p) != p->pmax.length() - x.length()) {
            ok = false;
            d = sys.word_str(x);
          }
  push(cs, "upward reflections inside the coset count the length defect", ok, d);
  return cs;
}

CheckList suite_translation(Workspace& ws, const Caps& caps) {
  CheckList cs;
  auto& sys = *ws.sys;
  auto& A = *ws.alg;
  auto subsets = all_subsets(sys);

  // adjacent nested (J, K) pairs, J != K
  std::vector<std::pair<GenSet, GenSet>> nested;
  for (GenSet J : subsets)
    for (GenSet K : subsets)
      if (!(J == K) && (J.subset_of(K) || K.subset_of(J))) nested.push_back({J, K});

  std::atomic<bool> closed{true}, supp1{true}, supp2{true};
  std::vector<std::string> fail_notes(subsets.size());
  parallel_for(caps.jobs, (long)subsets.size(), [&](long ii) {
    GenSet I = subsets[ii];
    for (const auto& [J, K] : nested) {
      for (const auto& p : ws.cosets->double_cosets(I, J)) {
        SchurElt f = A.standard(I, J, p->pmin);
        SchurElt via_closed = A.translate(f, K);
        SchurElt via_star = A.star(f, A.generator(J, K));
        if (via_closed != via_star) {
          closed = false;
          fail_notes[ii] = "I=" + sys.gens_str(I) + " J=" + sys.gens_str(J) +
                           " K=" + sys.gens_str(K) + " p=" + sys.word_str(p->pmin);
        }
        // support containment under the quotient map
        if (J.subset_of(K)) {
          auto q = ws.cosets->quotient(*p, I, K);
          for (const auto& [rmin, c] : via_closed.terms())
            if (!(rmin == q->pmin)) supp1 = false;
        } else {
          for (const auto& [rmin, c] : via_closed.terms()) {
            auto r = ws.cosets->coset_of(rmin, I, K);
            auto rq = ws.cosets->quotient(*r, I, J);
            if (!(rq->pmin == p->pmin)) supp2 = false;
          }
        }
      }
    }
  });
  std::string note;
  for (const auto& s : fail_notes)
    if (!s.empty()) { note = s; break; }
  push(cs, "closed-form translation equals the renormalized product", closed, note);
  push(cs, "translation onto a wall stays inside the image coset", supp1);
  push(cs, "translation out of a wall stays inside the preimage cosets", supp2);

  // associativity of the renormalized product on random triples
  Rand rnd(caps.seed + 1);
  bool assoc = true;
  for (int i = 0; i < 10 && assoc; ++i) {
    GenSet I = subsets[rnd.pick((int)subsets.size())];
    GenSet J = subsets[rnd.pick((int)subsets.size())];
    GenSet K = subsets[rnd.pick((int)subsets.size())];
    GenSet L = subsets[rnd.pick((int)subsets.size())];
    auto cIJ = ws.cosets->double_cosets(I, J);
    auto cJK = ws.cosets->double_cosets(J, K);
    auto cKL = ws.cosets->double_cosets(K, L);
    SchurElt f = A.standard(I, J, cIJ[rnd.pick((int)cIJ.size())]->pmin);
    SchurElt g = A.standard(J, K, cJK[rnd.pick((int)cJK.size())]->pmin);
    SchurElt h = A.standard(K, L, cKL[rnd.pick((int)cKL.size())]->pmin);
    if (A.star(A.star(f, g), h) != A.star(f, A.star(g, h))) assoc = false;
  }
  push(cs, "the renormalized product is associative on random triples", assoc);

  // the triple-product collapse: M^I * H_x * M^J is one scaled basis element
  bool wm = true;
  for (GenSet I : subsets)
    for (GenSet J : subsets)
      for (const auto& x : sys.all_elements()) {
        auto [scalar, p] = A.wmst(I, x, J);
        SchurElt lhs = A.star(A.star(A.generator(I, GenSet()),
                                     A.standard(GenSet(), GenSet(), x)),
                              A.generator(GenSet(), J));
        SchurElt want(I, J);
        want.add(p->pmin, scalar);
        if (lhs != want) { wm = false; break; }
      }
  push(cs, "sandwiching a standard basis vector collapses to one coset term", wm);
  return cs;
}

CheckList suite_pairing(Workspace& ws, const Caps& caps) {
  CheckList cs;
  auto& sys = *ws.sys;
  auto& A = *ws.alg;
  auto subsets = all_subsets(sys);
  bool biform = true, ident = true;
  std::string d;
  for (GenSet I : subsets)
    for (GenSet J : subsets) {
      Laurent piJ = sys.poincare_parabolic(J).second;
      auto cosets = ws.cosets->double_cosets(I, J);
      for (const auto& p : cosets)
        for (const auto& q : cosets) {
          Laurent got = A.pairing(A.standard(I, J, p->pmin), A.standard(I, J, q->pmin));
          Laurent want;
          if (p->pmin == q->pmin)
            want = p->poincare.exact_div(piJ).shifted(p->pmax.length() - p->pmin.length());
          if (got != want) {
            biform = false;
            d = "I=" + sys.gens_str(I) + " J=" + sys.gens_str(J) + " p=" + sys.word_str(p->pmin);
          }
        }
    }
  push(cs, "the pairing of standard basis elements has the closed diagonal form", biform, d);

  Rand rnd(caps.seed + 2);
  for (int i = 0; i < 12 && ident; ++i) {
    GenSet I = subsets[rnd.pick((int)subsets.size())];
    GenSet J = subsets[rnd.pick((int)subsets.size())];
    GenSet K = subsets[rnd.pick((int)subsets.size())];
    auto cIJ = ws.cosets->double_cosets(I, J);
    auto cJK = ws.cosets->double_cosets(J, K);
    auto cIK = ws.cosets->double_cosets(I, K);
    SchurElt f = A.standard(I, J, cIJ[rnd.pick((int)cIJ.size())]->pmin).scaled(rnd.laurent());
    SchurElt g = A.standard(J, K, cJK[rnd.pick((int)cJK.size())]->pmin).scaled(rnd.laurent());
    SchurElt h = A.standard(I, K, cIK[rnd.pick((int)cIK.size())]->pmin).scaled(rnd.laurent());
    if (A.pairing(A.star(f, g), h) != A.pairing(f, A.star(h, A.anti(g)))) ident = false;
  }
  push(cs, "the pairing is adjoint for the renormalized product", ident);
  return cs;
}

CheckList suite_sequence(Workspace& ws, const Caps& caps) {
  CheckList cs;
  auto& sys = *ws.sys;
  auto& A = *ws.alg;
  auto subsets = all_subsets(sys);
  std::atomic<bool> found{true};
  std::vector<std::string> notes(subsets.size());
  parallel_for(caps.jobs, (long)subsets.size(), [&](long ii) {
    GenSet I = subsets[ii];
    for (GenSet J : all_subsets(sys))
      for (const auto& p : ws.cosets->double_cosets(I, J)) {
        auto res = A.translation_sequence(I, J, p->pmin, caps.search_cap);
        if (!res.chain) {
          found = false;
          notes[ii] = "I=" + sys.gens_str(I) + " J=" + sys.gens_str(J) +
                      " p=" + sys.word_str(p->pmin);
        } else if (!A.unitriangular_at(res.product, p->pmin)) {
          found = false;
          notes[ii] = "bad product at " + sys.word_str(p->pmin);
        }
      }
  });
  std::string note;
  for (const auto& s : notes)
    if (!s.empty()) { note = s; break; }
  push(cs, "a unitriangular translation sequence exists for every coset", found, note);
  return cs;
}

CheckList suite_positivity(Workspace& ws, const Caps& caps) {
  CheckList cs;
  auto& sys = *ws.sys;
  auto& A = *ws.alg;
  auto subsets = all_subsets(sys);
  bool theorem = positivity_is_theorem(sys.spec());

  std::atomic<bool> positive{true}, selfdual{true}, toptag{true};
  std::vector<std::string> notes(subsets.size());

  // KL basis elements at the hom-space level: self-dual, unitriangular
  for (GenSet I : subsets)
    for (GenSet J : subsets)
      for (const auto& p : ws.cosets->double_cosets(I, J)) {
        SchurElt k = A.kl_elt(I, J, p->pmin);
        HeckeElt emb = A.embed(k);
        if (ws.hecke->bar(emb) != emb) selfdual = false;
        if (emb != ws.hecke->kl(p->pmax)) selfdual = false;
        if (!A.unitriangular_at(k, p->pmin)) toptag = false;
      }
  push(cs, "hom-space KL elements embed onto bar-self-dual KL elements", selfdual);
  push(cs, "hom-space KL elements are unitriangular", toptag);

  // chains of bounded length: decomposition coefficients in N[v,v^-1]
  parallel_for(caps.jobs, (long)subsets.size(), [&](long ii) {
    GenSet start = subsets[ii];
    std::function<void(const std::vector<GenSet>&, const SchurElt&)> dfs =
        [&](const std::vector<GenSet>& chain, const SchurElt& f) {
          for (const auto& [pmin, c] : A.decompose_kl(f)) {
            if (!c.nonneg()) {
              positive = false;
              std::ostringstream os;
              os << "chain";
              for (GenSet g : chain) os << " (" << sys.gens_str(g) << ")";
              os << " coset " << sys.word_str(pmin) << " coeff " << c.str();
              notes[ii] = os.str();
            }
          }
          if ((int)chain.size() - 1 >= caps.chain_len) return;
          for (GenSet nxt : all_subsets(sys)) {
            if (nxt == chain.back()) continue;
            if (!nxt.subset_of(chain.back()) && !chain.back().subset_of(nxt)) continue;
            auto ext = chain;
            ext.push_back(nxt);
            dfs(ext, A.translate(f, nxt));
          }
        };
    SchurElt unit = A.standard(start, start, sys.identity());
    dfs({start}, unit);
  });
  std::string note;
  for (const auto& s : notes)
    if (!s.empty()) { note = s; break; }
  push(cs, "iterated translation characters decompose with coefficients in N[v,v^-1]",
       positive, note, !theorem);
  return cs;
}

CheckList suite_rank(Workspace& ws, const Caps& caps) {
  CheckList cs;
  if (!ws.has_rep()) {
    push(cs, "no rational reflection representation for this system", true, "skipped", true);
    return cs;
  }
  auto& sys = *ws.sys;
  auto& D = *ws.dem;
  auto subsets = all_subsets(sys);
  bool rank_ok = true, prop_ok = true, mp_ok = true;
  std::string d1, d2;
  std::atomic<bool> stop{false};
  parallel_for(caps.jobs, (long)subsets.size(), [&](long ii) {
    GenSet I = subsets[ii];
    for (GenSet J : all_subsets(sys))
      for (const auto& p : ws.cosets->double_cosets(I, J)) {
        if (stop) return;
        try {
          D.graded_rank(*p);
        } catch (const std::exception& e) {
          rank_ok = false;
          d1 = e.what();
          stop = true;
        }
        try {
          D.m_p(*p);
        } catch (const std::exception& e) {
          mp_ok = false;
          d1 = e.what();
          stop = true;
        }
        // two construction paths agree up to one rational scalar
        auto phis = D.phi_basis(*p, false);
        auto alts = D.phi_basis(*p, true);
        for (const auto& [x, phi] : phis) {
          const RXElt& alt = alts.at(x);
          const RatPoly &a = phi.component(x), &b = alt.component(x);
          mpq_class ca = a.terms().begin()->second, cb = b.terms().begin()->second;
          // check phi * cb == alt * ca componentwise
          for (size_t i = 0; i < phi.X().size(); ++i)
            if (phi.components()[i].scaled(cb) != alt.components()[i].scaled(ca)) {
              prop_ok = false;
              d2 = sys.word_str(x) + " in coset " + sys.word_str(p->pmin);
            }
        }
      }
  });
  push(cs, "the basis degrees assemble to the coset Poincare polynomial", rank_ok, d1);
  push(cs, "different descent paths build proportional basis tuples", prop_ok, d2);
  push(cs, "the minimal-representative product is Kilmoyer-invariant", mp_ok);

  // Demazure operators: support spreading, membership closure, linearity
  Rand rnd(caps.seed + 3);
  auto& rep = *ws.rep;
  bool updown = true, member = true, linear = true;
  GenSet S = sys.all_gens();
  auto full = ws.cosets->coset_of(sys.identity(), S, S);
  auto phis = D.phi_basis(*full);
  for (int trial = 0; trial < 8; ++trial) {
    // random member of R(W): random polynomial combination of basis tuples
    RXElt f(full->elements, rep.nvars());
    for (const auto& [x, phi] : phis) {
      if (rnd.pick(2) == 0) continue;
      RatPoly r(rep.nvars(), mpq_class(rnd.pick(5) - 2));
      f += phi.scaled(r);
    }
    for (const auto& t : sys.reflections()) {
      RXElt df = D.demazure_left(t, f);
      if (!D.membership_ok(df)) member = false;
      // supp(d_t f) within supp f united with t supp f
      std::vector<Element> allowed;
      for (const auto& x : f.support()) {
        allowed.push_back(x);
        allowed.push_back(sys.multiply(t, x));
      }
      std::sort(allowed.begin(), allowed.end());
      for (const auto& x : df.support())
        if (!std::binary_search(allowed.begin(), allowed.end(), x)) updown = false;
      // nilpotence
      if (!D.demazure_left(t, df).is_zero()) linear = false;
      // left R^t-linearity: multiply by h_t^2 (a t-invariant)
      RatPoly inv = rep.h(t) * rep.h(t);
      if (D.demazure_left(t, f.scaled(inv)) != df.scaled(inv)) linear = false;
      // right R-linearity of the left operator
      RatPoly r = RatPoly::variable(rep.nvars(), rnd.pick(rep.nvars()));
      if (D.demazure_left(t, D.act_right_scale(f, r)) != D.act_right_scale(df, r))
        linear = false;
    }
  }
  push(cs, "Demazure outputs remain in the ring of tuples", member);
  push(cs, "Demazure operators spread support along the reflection only", updown);
  push(cs, "Demazure operators are nilpotent and linear over the right action", linear);
  return cs;
}

CheckList suite_induction(Workspace& ws, const Caps& caps) {
  CheckList cs;
  if (!ws.has_rep()) {
    push(cs, "no rational reflection representation for this system", true, "skipped", true);
    return cs;
  }
  auto& sys = *ws.sys;
  auto& D = *ws.dem;
  auto subsets = all_subsets(sys);
  std::atomic<bool> ok{true};
  std::vector<std::string> notes(subsets.size());
  parallel_for(caps.jobs, (long)subsets.size(), [&](long ii) {
    GenSet I = subsets[ii];
    for (GenSet J : all_subsets(sys))
      for (const auto& p : ws.cosets->double_cosets(I, J))
        for (GenSet K : all_subsets(sys)) {
          if (!K.subset_of(I)) continue;
          for (GenSet L : all_subsets(sys)) {
            if (!L.subset_of(J)) continue;
            auto rep = D.verify_induction(*p, K, L, caps.deg_cap);
            if (!rep.ok) {
              ok = false;
              notes[ii] = "I=" + sys.gens_str(I) + " J=" + sys.gens_str(J) +
                          " p=" + sys.word_str(p->pmin) + " K=" + sys.gens_str(K) +
                          " L=" + sys.gens_str(L) + " degree " +
                          std::to_string(rep.mismatch_degree);
            }
          }
        }
  });
  std::string note;
  for (const auto& s : notes)
    if (!s.empty()) { note = s; break; }
  push(cs, "invariant dimensions match the extension-of-scalars side degreewise", ok, note);
  return cs;
}

CheckList suite_exactseq(Workspace& ws, const Caps& caps) {
  CheckList cs;
  if (!ws.has_rep()) {
    push(cs, "no rational reflection representation for this system", true, "skipped", true);
    return cs;
  }
  auto& sys = *ws.sys;
  auto& D = *ws.dem;
  bool ok = true, coset_rank = true;
  std::string d;
  for (GenSet I : all_subsets(sys))
    for (GenSet J : all_subsets(sys))
      for (const auto& p : ws.cosets->double_cosets(I, J)) {
        auto rep = D.exact_sequence_check(p->elements, caps.deg_cap > 6 ? 6 : caps.deg_cap);
        if (!rep.ok) {
          ok = false;
          d = "p=" + sys.word_str(p->pmin) + " degree " + std::to_string(rep.mismatch_degree);
        }
        // ring dims also match the free-module count from the basis degrees
        for (size_t di = 0; di < rep.degrees.size(); ++di) {
          int dd = rep.degrees[di];
          long want = 0;
          for (const auto& x : p->elements) {
            int shift = 2 * (p->pmax.length() - x.length());
            if (dd - shift >= 0)
              want += Demazure::poly_ring_dim(ws.rep->nvars(), (dd - shift) / 2);
          }
          if (want != rep.lhs[di]) coset_rank = false;
        }
      }
  push(cs, "difference-map kernels match hyperplane-evaluation membership", ok, d);
  push(cs, "tuple-ring dimensions match the free-module prediction", coset_rank);
  return cs;
}

CheckList suite_hilbert(Workspace& ws, const Caps& caps) {
  CheckList cs;
  if (!ws.has_rep()) {
    push(cs, "no rational reflection representation for this system", true, "skipped", true);
    return cs;
  }
  auto& sys = *ws.sys;
  auto& D = *ws.dem;
  bool agree = true, freeness = true;
  std::string d;
  for (GenSet K : all_subsets(sys)) {
    auto a = D.hilbert_parabolic(K, caps.deg_cap);
    auto b = D.hilbert_parabolic_avg(K, caps.deg_cap);
    if (a != b) { agree = false; d = "K=" + sys.gens_str(K); }
    // freeness: dims(R)_d equal the convolution of dims(R^K) with the
    // reduced Poincare coefficients of K
    Laurent pt = sys.poincare_parabolic(K).first;
    for (int dd = 0; dd <= caps.deg_cap; dd += 2) {
      long direct = Demazure::poly_ring_dim(ws.rep->nvars(), dd / 2);
      long conv = 0;
      for (int g = 0; g <= dd; g += 2) {
        mpz_class c = pt.coeff(-g);
        conv += c.get_si() * a[(dd - g) / 2];
      }
      if (direct != conv) { freeness = false; d = "K=" + sys.gens_str(K); }
    }
  }
  push(cs, "generator fixed spaces agree with the averaging projector", agree, d);
  push(cs, "the polynomial ring is graded free over each invariant subring", freeness, d);
  return cs;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"hecke",     "parabolic", "cosets",   "poincare", "defect",
          "translation", "pairing",  "sequence", "positivity", "rank",
          "induction", "exactseq",  "hilbert"};
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SuiteResult> run(Workspace& ws, const std::string& suite, const Caps& caps) {
  std::vector<SuiteResult> out;
  auto run_one = [&](const std::string& name) {
    SuiteResult r;
    r.name = name;
    if (name == "hecke") r.checks = suite_hecke(ws, caps);
    else if (name == "parabolic") r.checks = suite_parabolic(ws, caps);
    else if (name == "cosets") r.checks = suite_cosets(ws, caps);
    else if (name == "poincare") r.checks = suite_poincare(ws, caps);
    else if (name == "defect") r.checks = suite_defect(ws, caps);
    else if (name == "translation") r.checks = suite_translation(ws, caps);
    else if (name == "pairing") r.checks = suite_pairing(ws, caps);
    else if (name == "sequence") r.checks = suite_sequence(ws, caps);
    else if (name == "positivity") r.checks = suite_positivity(ws, caps);
    else if (name == "rank") r.checks = suite_rank(ws, caps);
    else if (name == "induction") r.checks = suite_induction(ws, caps);
    else if (name == "exactseq") r.checks = suite_exactseq(ws, caps);
    else if (name == "hilbert") r.checks = suite_hilbert(ws, caps);
    else throw std::invalid_argument("unknown suite: " + name);
    out.push_back(std::move(r));
  };
  if (suite == "all") {
    for (const auto& n : suite_names()) run_one(n);
  } else {
    run_one(suite);
  }
  return out;
}

}  // namespace verify
}  // namespace schur
