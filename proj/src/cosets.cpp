#include "schur/cosets.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace schur {

bool CosetData::contains(const Element& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Element Cosets::minimal_rep(Element x, GenSet I, GenSet J) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : I.members())
      while (sys_.left_descent(x, s)) { x = sys_.multiply_gen_left(s, x); moved = true; }
    for (int t : J.members())
      while (sys_.right_descent(x, t)) { x = sys_.multiply_gen_right(x, t); moved = true; }
  }
  return x;
}

Element Cosets::maximal_rep(Element x, GenSet I, GenSet J) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : I.members())
      while (!sys_.left_descent(x, s)) { x = sys_.multiply_gen_left(s, x); moved = true; }
    for (int t : J.members())
      while (!sys_.right_descent(x, t)) { x = sys_.multiply_gen_right(x, t); moved = true; }
  }
  return x;
}

CosetRef Cosets::build(GenSet I, GenSet J, const Element& pmin) const {
  auto d = std::make_shared<CosetData>();
  d->I = I;
  d->J = J;
  d->pmin = pmin;
  d->pmax = maximal_rep(pmin, I, J);

  // K = I n p_- J p_-^{-1}: s in K iff p_-^{-1} s p_- is a generator of J.
  Element pinv = sys_.inverse(pmin);
  for (int s : I.members()) {
    Element conj = sys_.multiply(pinv, sys_.multiply_gen_left(s, pmin));
    if (conj.length() == 1 && J.contains(conj.word()[0]))
      d->kilmoyer = d->kilmoyer.with(s);
  }

  // Orbit of p_- under left W_I and right W_J.
  std::set<Element> seen;
  std::deque<Element> queue;
  seen.insert(pmin);
  queue.push_back(pmin);
  while (!queue.empty()) {
    Element cur = queue.front();
    queue.pop_front();
    for (int s : I.members()) {
      Element n = sys_.multiply_gen_left(s, cur);
      if (seen.insert(n).second) queue.push_back(n);
    }
    for (int t : J.members()) {
      Element n = sys_.multiply_gen_right(cur, t);
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  d->elements.assign(seen.begin(), seen.end());

  for (const auto& x : d->elements) d->poincare_tilde += Laurent::v(-2 * x.length());
  d->poincare = d->poincare_tilde.shifted(d->pmax.length() + d->pmin.length());
  return d;
}

CosetRef Cosets::coset_of(const Element& x, GenSet I, GenSet J) const {
  Element pmin = minimal_rep(x, I, J);
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_tuple(I, J, pmin);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  CosetRef d = build(I, J, pmin);
  cache_.emplace(key, d);
  return d;
}

std::vector<CosetRef> Cosets::double_cosets(GenSet I, GenSet J) const {
  std::set<Element> mins;
  for (const auto& w : sys_.all_elements()) mins.insert(minimal_rep(w, I, J));
  std::vector<CosetRef> out;
  for (const auto& m : mins) out.push_back(coset_of(m, I, J));
  // set order is ShortLex on p_-, which refines (length, lex)
  return out;
}

std::pair<Element, Element> Cosets::howlett_factor(const Element& x, const CosetData& p) const {
  if (!p.contains(x)) throw std::invalid_argument("element not in the double coset");
  // Peel a in W_I and b in W_J with x = a p_- b and additive lengths.
  Element a = sys_.identity(), b = sys_.identity(), y = x;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int t : p.J.members())
      while (sys_.right_descent(y, t)) {
        y = sys_.multiply_gen_right(y, t);
        b = sys_.multiply_gen_left(t, b);
        moved = true;
      }
    for (int s : p.I.members())
      while (sys_.left_descent(y, s)) {
        y = sys_.multiply_gen_left(s, y);
        a = sys_.multiply_gen_right(a, s);
        moved = true;
      }
  }
  if (y != p.pmin) throw std::logic_error("double coset stripping missed p_minus");
  // Normalize a = u k with u in D_K n W_I, k in W_K, then fold k through p_-.
  Element u = a, k = sys_.identity();
  bool again = true;
  while (again) {
    again = false;
    for (int s : p.kilmoyer.members())
      while (sys_.right_descent(u, s)) {
        u = sys_.multiply_gen_right(u, s);
        k = sys_.multiply_gen_left(s, k);
        again = true;
      }
  }
  Element kp = sys_.multiply(sys_.inverse(p.pmin), sys_.multiply(k, p.pmin));
  Element v = sys_.multiply(kp, b);
  if (sys_.multiply(u, sys_.multiply(p.pmin, v)) != x)
    throw std::logic_error("Howlett factorization does not recompose");
  if (u.length() + p.pmin.length() + v.length() != x.length())
    throw std::logic_error("Howlett factorization lengths are not additive");
  return {u, v};
}

int Cosets::length_defect(const Element& x, const CosetData& p) const {
  if (!p.contains(x)) throw std::invalid_argument("element not in the double coset");
  int count = 0;
  for (const auto& t : sys_.reflections()) {
    Element tx = sys_.multiply(t, x);
    if (tx.length() > x.length() && p.contains(tx)) ++count;
  }
  return count;
}

bool Cosets::coset_bruhat_leq(const CosetData& p, const CosetData& q) const {
  return sys_.bruhat_leq(p.pmin, q.pmin);
}

CosetRef Cosets::quotient(const CosetData& p, GenSet K, GenSet L) const {
  if (!p.I.subset_of(K) || !p.J.subset_of(L))
    throw std::invalid_argument("quotient requires I subset K and J subset L");
  return coset_of(p.pmin, K, L);
}

Laurent Cosets::poincare_ratio(GenSet I, const CosetData& p, GenSet J,
                               GenSet K, const CosetData& q, GenSet L) const {
  if (!I.subset_of(K) || !J.subset_of(L))
    throw std::invalid_argument("poincare_ratio requires nested generator subsets");
  if (!q.contains(p.pmin))
    throw std::invalid_argument("poincare_ratio requires p inside q");
  Laurent num = sys_.poincare_parabolic(q.kilmoyer).second;
  Laurent den = sys_.poincare_parabolic(p.kilmoyer).second;
  Laurent ratio;
  if (!Laurent::try_div(num, den, ratio) || !ratio.nonneg())
    throw std::logic_error("Poincare ratio is not an exact nonnegative quotient");
  return ratio;
}

}  // namespace schur
