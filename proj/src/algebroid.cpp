#include "schur/algebroid.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace schur {

void SchurElt::add(const Element& pmin, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(pmin);
  if (it == terms_.end()) {
    terms_.emplace(pmin, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurElt& SchurElt::operator+=(const SchurElt& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SchurElt& SchurElt::operator-=(const SchurElt& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

SchurElt SchurElt::scaled(const Laurent& c) const {
  SchurElt r(I_, J_);
  if (c.is_zero()) return r;
  for (const auto& [p, k] : terms_) r.terms_.emplace(p, k * c);
  return r;
}

std::vector<TranslationStep> TranslationChain::steps() const {
  std::vector<TranslationStep> r;
  for (size_t i = 0; i + 1 < subsets.size(); ++i)
    r.push_back({subsets[i], subsets[i + 1], subsets[i].subset_of(subsets[i + 1])});
  return r;
}

SchurElt Algebroid::standard(GenSet I, GenSet J, const Element& x) const {
  CosetRef p = cosets_.coset_of(x, I, J);
  SchurElt r(I, J);
  r.add(p->pmin, Laurent(1));
  return r;
}

SchurElt Algebroid::generator(GenSet I, GenSet J) const {
  if (!I.subset_of(J) && !J.subset_of(I))
    throw std::invalid_argument("standard generators need nested subsets");
  return standard(I, J, sys_.identity());
}

SchurElt Algebroid::kl_elt(GenSet I, GenSet J, const Element& x) const {
  CosetRef p = cosets_.coset_of(x, I, J);
  try {
    return extract(hecke_.kl(p->pmax), I, J);
  } catch (const ExtractError&) {
    throw std::logic_error("KL element of a coset-maximal element left the hom-space");
  }
}

HeckeElt Algebroid::embed(const SchurElt& f) const {
  HeckeElt h(&sys_);
  for (const auto& [pmin, c] : f.terms()) {
    CosetRef p = cosets_.coset_of(pmin, f.left(), f.right());
    int top = p->pmax.length();
    for (const auto& x : p->elements) h.add(x, c.shifted(top - x.length()));
  }
  return h;
}

SchurElt Algebroid::extract(const HeckeElt& h, GenSet I, GenSet J) const {
  SchurElt out(I, J);
  HeckeElt rem = h;
  while (!rem.is_zero()) {
    // Longest remaining term must be the maximal representative of its coset.
    const auto& [y, a] = *rem.terms().rbegin();
    CosetRef p = cosets_.coset_of(y, I, J);
    if (p->pmax != y) {
      std::ostringstream msg;
      msg << "element is not in the hom-space for (" << sys_.gens_str(I) << "),("
          << sys_.gens_str(J) << "): stuck at " << sys_.word_str(y);
      throw ExtractError(msg.str(), rem);
    }
    Laurent c = a;  // copy; the loop below erases y from rem
    int top = p->pmax.length();
    for (const auto& x : p->elements) rem.add(x, -c.shifted(top - x.length()));
    out.add(p->pmin, c);
  }
  return out;
}

SchurElt Algebroid::star(const SchurElt& f, const SchurElt& g) const {
  if (!(f.right() == g.left()))
    throw std::invalid_argument("star product needs matching middle subsets");
  HeckeElt prod = hecke_.multiply(embed(f), embed(g));
  Laurent pij = poincare(f.right());
  HeckeElt scaled(&sys_);
  for (const auto& [w, c] : prod.terms()) scaled.add(w, c.exact_div(pij));
  return extract(scaled, f.left(), g.right());
}

SchurElt Algebroid::translate(const SchurElt& f, GenSet K) const {
  GenSet I = f.left(), J = f.right();
  if (J == K) return f;
  if (!J.subset_of(K) && !K.subset_of(J))
    throw std::invalid_argument("translation needs nested subsets");
  SchurElt out(I, K);
  if (K.subset_of(J)) {
    // onto the wall: each coset splits; the piece containing p_+ has
    // coefficient one, the others pick up positive powers of v
    for (const auto& [pmin, c] : f.terms()) {
      CosetRef p = cosets_.coset_of(pmin, I, J);
      std::set<Element> seen;
      for (const auto& x : p->elements) {
        Element qmin = cosets_.minimal_rep(x, I, K);
        if (!seen.insert(qmin).second) continue;
        CosetRef q = cosets_.coset_of(qmin, I, K);
        out.add(qmin, c.shifted(p->pmax.length() - q->pmax.length()));
      }
    }
  } else {
    // out of the wall: single image coset, scaled by a Poincare ratio
    for (const auto& [pmin, c] : f.terms()) {
      CosetRef p = cosets_.coset_of(pmin, I, J);
      CosetRef q = cosets_.coset_of(pmin, I, K);
      Laurent ratio = cosets_.poincare_ratio(I, *p, J, I, *q, K);
      out.add(q->pmin, c.shifted(q->pmin.length() - p->pmin.length()) * ratio);
    }
  }
  return out;
}

std::pair<Laurent, CosetRef> Algebroid::wmst(GenSet I, const Element& x, GenSet J) const {
  CosetRef p = cosets_.coset_of(x, I, J);
  Laurent scalar = sys_.poincare_parabolic(p->kilmoyer).second;
  return {scalar.shifted(p->pmin.length() - x.length()), p};
}

Laurent Algebroid::pairing(const SchurElt& f, const SchurElt& g) const {
  if (!(f.left() == g.left()) || !(f.right() == g.right()))
    throw std::invalid_argument("pairing needs elements of the same hom-space");
  Laurent h = hecke_.pairing(embed(f), embed(g));
  return h.exact_div(poincare(f.right()));
}

SchurElt Algebroid::anti(const SchurElt& f) const {
  return extract(hecke_.anti_involution(embed(f)), f.right(), f.left());
}

Laurent Algebroid::hom_rank(const SchurElt& chd_m, const SchurElt& chn_n) const {
  return pairing(chd_m, chn_n).bar();
}

bool Algebroid::unitriangular_at(const SchurElt& f, const Element& pmin) const {
  if (!f.coeff(pmin).is_one()) return false;
  for (const auto& [q, c] : f.terms()) {
    if (q == pmin) continue;
    if (!sys_.bruhat_leq(q, pmin)) return false;
  }
  return true;
}

namespace {
std::string state_key(GenSet cur, const SchurElt& f) {
  std::ostringstream os;
  os << cur.bits() << '#';
  for (const auto& [p, c] : f.terms()) {
    os << p.length() << ':';
    for (int s : p.word()) os << s << '.';
    os << '=' << c.str() << ';';
  }
  return os.str();
}

// sum of coefficients (the Laurent polynomial at v = 1)
mpz_class coeff_mass(const Laurent& f) {
  mpz_class m = 0;
  for (const auto& [e, c] : f.terms()) m += c;
  return m;
}
}  // namespace

// Candidate chain from the wall structure of the coset, or nothing. The
// target coset is fattened one wall at a time while its maximal element
// keeps all the added descents (each widening undoes as a split step whose
// top piece carries coefficient one); the left side is fattened through the
// anti-involution, which reverses chains. The fat base case is solved by
// the identity-coset chain or, for a trivial stabilizer, by a reduced word
// of the minimal representative.
std::vector<GenSet> Algebroid::heuristic_chain(GenSet I, GenSet J, const Element& x,
                                               int depth) const {
  if (depth > 2 * sys_.num_gens() + 4) return {};
  CosetRef p = cosets_.coset_of(x, I, J);
  const Element& top = p->pmax;

  GenSet dr = sys_.right_descents(top);
  for (int t : dr.members()) {
    if (J.contains(t)) continue;
    GenSet J2 = J.with(t);
    auto sub = heuristic_chain(I, J2, p->pmin, depth + 1);
    if (sub.empty()) return {};
    sub.push_back(J);
    return sub;
  }
  GenSet dl = sys_.left_descents(top);
  if (!(dl == I)) {
    auto rev = heuristic_chain(J, I, sys_.inverse(p->pmin), depth + 1);
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
  // base: I and J carry every descent of the maximal element
  std::vector<GenSet> chain;
  if (p->pmin.is_identity()) {
    chain = {I, I & J, J};
  } else if (p->kilmoyer.empty()) {
    chain.push_back(I);
    chain.push_back(GenSet());
    for (int t : p->pmin.word()) {
      chain.push_back(GenSet::single(t));
      chain.push_back(GenSet());
    }
    chain.push_back(J);
  }
  return chain;
}

SequenceSearchResult Algebroid::translation_sequence(GenSet I, GenSet J,
                                                     const Element& x, int cap) const {
  SequenceSearchResult result;
  CosetRef target = cosets_.coset_of(x, I, J);
  const Element& top = target->pmax;

  // validated candidate first
  {
    std::vector<GenSet> cand = heuristic_chain(I, J, x, 0);
    if (!cand.empty()) {
      // drop consecutive repeats
      std::vector<GenSet> chain;
      for (GenSet g : cand)
        if (chain.empty() || !(chain.back() == g)) chain.push_back(g);
      if ((int)chain.size() - 1 <= cap) {
        SchurElt prod = bott_samelson_char(chain);
        ++result.states_explored;
        if (unitriangular_at(prod, target->pmin)) {
          result.chain = TranslationChain{chain};
          result.product = prod;
          return result;
        }
      }
    }
  }

  const std::uint32_t nsets = 1u << sys_.num_gens();
  struct State {
    GenSet cur;
    SchurElt f;
    std::vector<GenSet> chain;
  };
  std::deque<State> queue;
  std::set<std::string> visited;

  SchurElt start = standard(I, I, sys_.identity());
  queue.push_back({I, start, {I}});
  visited.insert(state_key(I, start));

  auto is_goal = [&](const State& st) {
    return st.cur == J && unitriangular_at(st.f, target->pmin);
  };
  auto admissible = [&](const SchurElt& f, GenSet cur) {
    // coefficients are nonnegative throughout, so nothing ever cancels:
    // support climbing above the target element is dead, and the term
    // covering the target element must keep coefficient mass at most one
    for (const auto& [qmin, c] : f.terms()) {
      CosetRef q = cosets_.coset_of(qmin, I, cur);
      if (!sys_.bruhat_leq(q->pmax, top)) return false;
    }
    Element cover = cosets_.minimal_rep(top, I, cur);
    Laurent c = f.coeff(cover);
    if (!c.is_zero() && coeff_mass(c) > 1) return false;
    return true;
  };

  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    ++result.states_explored;
    if (is_goal(st)) {
      result.chain = TranslationChain{st.chain};
      result.product = st.f;
      return result;
    }
    if ((int)st.chain.size() - 1 >= cap) continue;
    for (std::uint32_t bits = 0; bits < nsets; ++bits) {
      GenSet nxt(bits);
      if (nxt == st.cur) continue;
      if (!nxt.subset_of(st.cur) && !st.cur.subset_of(nxt)) continue;
      SchurElt g = translate(st.f, nxt);
      if (!admissible(g, nxt)) continue;
      std::string key = state_key(nxt, g);
      if (!visited.insert(key).second) continue;
      State ns{nxt, std::move(g), st.chain};
      ns.chain.push_back(nxt);
      queue.push_back(std::move(ns));
    }
  }
  return result;  // chain empty: search exhausted under the cap
}

SchurElt Algebroid::bott_samelson_char(const std::vector<GenSet>& chain) const {
  if (chain.empty()) throw std::invalid_argument("empty translation chain");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!chain[i].subset_of(chain[i + 1]) && !chain[i + 1].subset_of(chain[i]))
      throw std::invalid_argument("translation chain steps must be nested");
  SchurElt f = standard(chain[0], chain[0], sys_.identity());
  for (size_t i = 1; i < chain.size(); ++i) f = translate(f, chain[i]);
  return f;
}

std::map<Element, Laurent> Algebroid::decompose_kl(SchurElt f) const {
  std::map<Element, Laurent> out;
  while (!f.is_zero()) {
    // ShortLex-least Bruhat-maximal support coset
    const Element* pick = nullptr;
    for (const auto& [p, c] : f.terms()) {
      bool maximal = true;
      for (const auto& [q, d] : f.terms()) {
        if (q == p) continue;
        if (sys_.bruhat_leq(p, q)) { maximal = false; break; }
      }
      if (maximal) { pick = &p; break; }
    }
    Element p = *pick;
    Laurent c = f.coeff(p);
    f -= kl_elt(f.left(), f.right(), p).scaled(c);
    out[p] += c;
  }
  return out;
}

}  // namespace schur
