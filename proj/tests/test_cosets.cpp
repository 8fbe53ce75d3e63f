#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schur/cosets.hpp"

using namespace schur;

namespace {

// Exhaustive Howlett oracle: search W_I x W_J directly for the unique
// factorization x = u p_- v with additive lengths and u right-minimal
// for the Kilmoyer subgroup.
std::pair<Element, Element> howlett_oracle(const CoxeterSystem& sys, const Cosets& C,
                                           const Element& x, const CosetData& p) {
  std::vector<std::pair<Element, Element>> hits;
  for (const auto& u : sys.parabolic_elements(p.I)) {
    bool minimal = true;
    for (int s : p.kilmoyer.members())
      if (sys.right_descent(u, s)) { minimal = false; break; }
    if (!minimal) continue;
    for (const auto& v : sys.parabolic_elements(p.J)) {
      if (u.length() + p.pmin.length() + v.length() != x.length()) continue;
      if (sys.multiply(u, sys.multiply(p.pmin, v)) == x) hits.push_back({u, v});
    }
  }
  REQUIRE(hits.size() == 1);
  return hits.front();
}

}  // namespace

TEST_CASE("coset listing and canonical representatives") {
  CoxeterSystem sys(CoxeterSpec::type_a(2));
  Cosets C(sys);
  GenSet I = GenSet::single(0), J = GenSet::single(1);

  auto cosets = C.double_cosets(I, J);
  REQUIRE(cosets.size() == 2);
  CHECK(cosets[0]->pmin == sys.identity());
  CHECK(cosets[0]->size() == 4);
  CHECK(cosets[1]->pmin == sys.parse("s2.s1"));
  CHECK(cosets[1]->size() == 2);
  CHECK(cosets[1]->pmax == sys.parse("s1.s2.s1"));

  CHECK(C.coset_of(sys.parse("s1.s2.s1"), I, J)->pmin == sys.parse("s2.s1"));

  auto singleton = C.coset_of(sys.identity(), GenSet(), GenSet());
  CHECK(singleton->size() == 1);
  CHECK(singleton->pmin == singleton->pmax);
}

TEST_CASE("kilmoyer intersections") {
  CoxeterSystem sys(CoxeterSpec::type_a(2));
  Cosets C(sys);
  GenSet I = GenSet::single(0), J = GenSet::single(1);
  CHECK(C.coset_of(sys.identity(), I, J)->kilmoyer.empty());
  CHECK(C.coset_of(sys.parse("s2.s1"), I, J)->kilmoyer == GenSet::single(0));
  CHECK(C.coset_of(sys.identity(), sys.all_gens(), sys.all_gens())->kilmoyer ==
        sys.all_gens());

  // K generates exactly W_I n p_- W_J p_-^{-1}, checked by enumeration
  CoxeterSystem b2(CoxeterSpec::type_b(2));
  Cosets CB(b2);
  for (std::uint32_t ib = 0; ib < 4; ++ib)
    for (std::uint32_t jb = 0; jb < 4; ++jb) {
      GenSet Ib(ib), Jb(jb);
      for (const auto& p : CB.double_cosets(Ib, Jb)) {
        std::set<Element> lhs;
        Element pinv = b2.inverse(p->pmin);
        for (const auto& wj : b2.parabolic_elements(Jb)) {
          Element conj = b2.multiply(p->pmin, b2.multiply(wj, pinv));
          if (b2.in_parabolic(conj, Ib)) lhs.insert(conj);
        }
        const auto& wk = b2.parabolic_elements(p->kilmoyer);
        CHECK(lhs == std::set<Element>(wk.begin(), wk.end()));
      }
    }
}

TEST_CASE("howlett factorization") {
  CoxeterSystem sys(CoxeterSpec::type_a(2));
  Cosets C(sys);
  GenSet I = GenSet::single(0), J = GenSet::single(1);
  auto p = C.coset_of(sys.parse("s2.s1"), I, J);

  auto [u1, v1] = C.howlett_factor(sys.parse("s2.s1"), *p);
  CHECK(u1 == sys.identity());
  CHECK(v1 == sys.identity());

  auto [u2, v2] = C.howlett_factor(sys.parse("s1.s2.s1"), *p);
  CHECK(u2 == sys.identity());
  CHECK(v2 == sys.generator(1));

  auto pe = C.coset_of(sys.identity(), I, J);
  auto [u3, v3] = C.howlett_factor(sys.parse("s1.s2"), *pe);
  CHECK(u3 == sys.generator(0));
  CHECK(v3 == sys.generator(1));

  CHECK_THROWS_AS(C.howlett_factor(sys.parse("s1"), *p), std::invalid_argument);

  // exhaustive agreement with the search oracle over the whole group
  for (std::uint32_t ib = 0; ib < 4; ++ib)
    for (std::uint32_t jb = 0; jb < 4; ++jb) {
      GenSet Ib(ib), Jb(jb);
      for (const auto& q : C.double_cosets(Ib, Jb))
        for (const auto& x : q->elements) {
          auto got = C.howlett_factor(x, *q);
          auto want = howlett_oracle(sys, C, x, *q);
          CHECK(got.first == want.first);
          CHECK(got.second == want.second);
        }
    }
}

TEST_CASE("poincare polynomials of cosets") {
  CoxeterSystem sys(CoxeterSpec::type_a(2));
  Cosets C(sys);
  GenSet I = GenSet::single(0), J = GenSet::single(1);

  CHECK(sys.poincare_parabolic(GenSet::single(0)).second ==
        Laurent::v(1) + Laurent::v(-1));
  CHECK(sys.poincare_parabolic(sys.all_gens()).second ==
        Laurent::v(3) + Laurent(2, 1) + Laurent(2, -1) + Laurent::v(-3));

  auto p = C.coset_of(sys.parse("s2.s1"), I, J);
  CHECK(p->poincare == Laurent::v(1) + Laurent::v(-1));
  CHECK(p->poincare_tilde == Laurent::v(-4) + Laurent::v(-6));
  CHECK(p->poincare.self_dual());

  // the defining identities across a whole group
  CoxeterSystem b2(CoxeterSpec::type_b(2));
  Cosets CB(b2);
  long order = 8;
  for (std::uint32_t ib = 0; ib < 4; ++ib)
    for (std::uint32_t jb = 0; jb < 4; ++jb) {
      GenSet Ib(ib), Jb(jb);
      auto ptI = b2.poincare_parabolic(Ib).first;
      auto ptJ = b2.poincare_parabolic(Jb).first;
      long total = 0;
      for (const auto& p2 : CB.double_cosets(Ib, Jb)) {
        total += p2->size();
        auto ptK = b2.poincare_parabolic(p2->kilmoyer).first;
        CHECK(p2->poincare_tilde * ptK == ptI * ptJ);
        CHECK(p2->poincare.self_dual());
        CHECK(p2->pmax.length() - p2->pmin.length() ==
              b2.longest_element(Ib).length() + b2.longest_element(Jb).length() -
                  b2.longest_element(p2->kilmoyer).length());
      }
      CHECK(total == order);
    }
}

TEST_CASE("bruhat order on cosets and quotients") {
  CoxeterSystem sys(CoxeterSpec::type_a(2));
  Cosets C(sys);
  GenSet I = GenSet::single(0), J = GenSet::single(1);
  auto pe = C.coset_of(sys.identity(), I, J);
  auto pt = C.coset_of(sys.parse("s2.s1"), I, J);
  CHECK(C.coset_bruhat_leq(*pe, *pt));
  CHECK(!C.coset_bruhat_leq(*pt, *pe));

  auto q = C.quotient(*pt, sys.all_gens(), sys.all_gens());
  CHECK(q->size() == 6);
  CHECK_THROWS_AS(C.quotient(*pt, GenSet(), GenSet()), std::invalid_argument);

  // quotient preserves the order, exhaustively
  for (std::uint32_t ib = 0; ib < 4; ++ib)
    for (std::uint32_t jb = 0; jb < 4; ++jb)
      for (std::uint32_t kb = 0; kb < 4; ++kb)
        for (std::uint32_t lb = 0; lb < 4; ++lb) {
          GenSet Ib(ib), Jb(jb), Kb(kb), Lb(lb);
          if (!Ib.subset_of(Kb) || !Jb.subset_of(Lb)) continue;
          auto cosets = C.double_cosets(Ib, Jb);
          for (const auto& a : cosets)
            for (const auto& b : cosets)
              if (C.coset_bruhat_leq(*a, *b))
                CHECK(C.coset_bruhat_leq(*C.quotient(*a, Kb, Lb), *C.quotient(*b, Kb, Lb)));
        }
}

TEST_CASE("length defect counts upward reflections") {
  CoxeterSystem sys(CoxeterSpec::type_a(2));
  Cosets C(sys);
  GenSet I = GenSet::single(0), J = GenSet::single(1);
  auto p = C.coset_of(sys.identity(), I, J);
  CHECK(C.length_defect(sys.parse("s1.s2"), *p) == 0);
  CHECK(C.length_defect(sys.parse("s1"), *p) == 1);
  CHECK(C.length_defect(sys.identity(), *p) == 2);
  for (const auto& x : p->elements)
    CHECK(C.length_defect(x, *p) == p->pmax.length() - x.length());
  CHECK_THROWS_AS(C.length_defect(sys.parse("s2.s1"), *p), std::invalid_argument);
}

TEST_CASE("poincare ratios") {
  CoxeterSystem sys(CoxeterSpec::type_a(2));
  Cosets C(sys);
  GenSet I = GenSet::single(0), J = GenSet::single(1), S = sys.all_gens();

  auto p = C.coset_of(sys.parse("s2.s1"), I, J);
  auto q = C.quotient(*p, S, S);
  Laurent ratio = C.poincare_ratio(I, *p, J, S, *q, S);
  Laurent piS = sys.poincare_parabolic(S).second;
  Laurent piI = sys.poincare_parabolic(GenSet::single(0)).second;
  CHECK(ratio == piS.exact_div(piI));
  CHECK(ratio.nonneg());

  // denominator one
  auto p0 = C.coset_of(sys.parse("s1.s2"), GenSet(), GenSet());
  auto q0 = C.quotient(*p0, S, S);
  CHECK(C.poincare_ratio(GenSet(), *p0, GenSet(), S, *q0, S) == piS);

  // p = q gives 1
  CHECK(C.poincare_ratio(I, *p, J, I, *p, J).is_one());

  CHECK_THROWS_AS(C.poincare_ratio(S, *q, S, I, *p, J), std::invalid_argument);
}
