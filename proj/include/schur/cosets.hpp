#ifndef SCHUR_COSETS_HPP
#define SCHUR_COSETS_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "schur/coxeter.hpp"
#include "schur/laurent.hpp"

namespace schur {

// A (W_I, W_J)-double coset. Identity is (I, J, p_minus); everything else
// is derived once when the coset is first built and shared after that.
struct CosetData {
  GenSet I, J;
  Element pmin, pmax;
  GenSet kilmoyer;                 // K with W_K = W_I n p_- W_J p_-^{-1}
  std::vector<Element> elements;   // ShortLex
  Laurent poincare_tilde, poincare;

  int size() const { return (int)elements.size(); }
  bool contains(const Element& x) const;
};

using CosetRef = std::shared_ptr<const CosetData>;

// Double-coset structure for one system: canonical representatives,
// Kilmoyer intersections, Howlett factorizations, Poincare data and the
// Bruhat order on cosets. Cosets are cached per (I, J, p_minus).
class Cosets {
 public:
  explicit Cosets(const CoxeterSystem& sys) : sys_(sys) {}
  Cosets(const Cosets&) = delete;
  Cosets& operator=(const Cosets&) = delete;

  const CoxeterSystem& system() const { return sys_; }

  // Minimal / maximal representative of W_I x W_J by descent stripping.
  Element minimal_rep(Element x, GenSet I, GenSet J) const;
  Element maximal_rep(Element x, GenSet I, GenSet J) const;

  CosetRef coset_of(const Element& x, GenSet I, GenSet J) const;
  // All cosets, ordered by (length of p_minus, ShortLex).
  std::vector<CosetRef> double_cosets(GenSet I, GenSet J) const;

  // Unique (u, v) with x = u p_- v, u in D_K n W_I, v in W_J and
  // additive lengths. Throws when x is not in p.
  std::pair<Element, Element> howlett_factor(const Element& x, const CosetData& p) const;

  // |{t in T : x < tx in p}|; equals l(p_+) - l(x).
  int length_defect(const Element& x, const CosetData& p) const;

  // p <= q in the coset Bruhat order iff p_- <= q_-.
  bool coset_bruhat_leq(const CosetData& p, const CosetData& q) const;
  // Image coset W_K p W_L for I subset K, J subset L.
  CosetRef quotient(const CosetData& p, GenSet K, GenSet L) const;

  // pi(K,q,L) / pi(I,p,J); exact with nonnegative coefficients, anything
  // else is an internal inconsistency.
  Laurent poincare_ratio(GenSet I, const CosetData& p, GenSet J,
                         GenSet K, const CosetData& q, GenSet L) const;

  std::pair<Laurent, Laurent> poincare_parabolic(GenSet I) const {
    return sys_.poincare_parabolic(I);
  }

 private:
  const CoxeterSystem& sys_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<GenSet, GenSet, Element>, CosetRef> cache_;

  CosetRef build(GenSet I, GenSet J, const Element& pmin) const;
};

}  // namespace schur

#endif
