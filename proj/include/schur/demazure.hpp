#ifndef SCHUR_DEMAZURE_HPP
#define SCHUR_DEMAZURE_HPP

#include <map>
#include <vector>

#include "schur/cosets.hpp"
#include "schur/ratpoly.hpp"

namespace schur {

// Rational reflection representation for type A (coordinate permutations of
// Q^{n+1}), type B (signed permutations of Q^n) and products of these.
// Reflection equations h_t are integer linear forms; the reflection action,
// conjugation consistency (up to sign), pairwise independence of the h_t and
// reflection-faithfulness are all verified exactly at construction.
class ReflectionRep {
 public:
  explicit ReflectionRep(const CoxeterSystem& sys);

  const CoxeterSystem& system() const { return sys_; }
  int nvars() const { return nvars_; }

  RatPoly variable(int i) const { return RatPoly::variable(nvars_, i); }
  // Signed variable images of w: x_i -> sign * x_j encoded as +-(j+1).
  std::vector<int> var_image(const Element& w) const;
  RatPoly act(const Element& w, const RatPoly& f) const;
  // Hyperplane equation of a reflection.
  const RatPoly& h(const Element& t) const;
  // The vector v_t with t(l) = l - 2 h_t(l) v_t.
  const std::vector<mpq_class>& reflection_vector(const Element& t) const;

 private:
  const CoxeterSystem& sys_;
  int nvars_ = 0;
  std::map<Element, RatPoly> h_;
  std::map<Element, std::vector<mpq_class>> v_;
  std::vector<std::pair<int, int>> var_ranges_;  // per factor: (var_off, var_cnt)

  void build_reflection_data();
  void verify_construction() const;
};

// Tuple (f_x)_{x in X}; element of R(X) once the divisibility conditions
// hold. X is kept in ShortLex order.
class RXElt {
 public:
  RXElt() = default;
  RXElt(std::vector<Element> X, int nvars);

  const std::vector<Element>& X() const { return X_; }
  int index_of(const Element& x) const;  // -1 if absent
  const RatPoly& component(const Element& x) const;
  RatPoly& component_mut(const Element& x);
  const std::vector<RatPoly>& components() const { return comp_; }
  std::vector<Element> support() const;
  bool is_zero() const;
  RXElt& operator+=(const RXElt& o);
  RXElt& operator-=(const RXElt& o);
  RXElt scaled(const RatPoly& r) const;  // componentwise left action of R
  bool operator==(const RXElt& o) const { return X_ == o.X_ && comp_ == o.comp_; }

 private:
  std::vector<Element> X_;
  std::vector<RatPoly> comp_;
};

struct DimReport {
  bool ok = true;
  int mismatch_degree = -1;
  std::vector<int> degrees;  // even degrees checked
  std::vector<int> lhs, rhs;
};

// Demazure operators on R(X), the phi basis of R(p), graded ranks,
// invariant dimensions and the degreewise comparisons they support.
class Demazure {
 public:
  Demazure(const ReflectionRep& rep, Cosets& cosets)
      : rep_(rep), sys_(rep.system()), cosets_(cosets) {}
  Demazure(const Demazure&) = delete;
  Demazure& operator=(const Demazure&) = delete;

  const ReflectionRep& rep() const { return rep_; }

  // Divisibility conditions f_x - f_{tx} in (h_t) over all edges of X.
  bool membership_ok(const RXElt& f) const;

  RXElt act_left(const Element& u, const RXElt& f) const;
  RXElt act_right(const RXElt& f, const Element& v) const;
  // Right action of the polynomial ring: (f r)_x = f_x * (x r).
  RXElt act_right_scale(const RXElt& f, const RatPoly& r) const;

  // (d_t f)_x = (f_x - t f_{tx}) / (2 h_t); requires tX = X.
  RXElt demazure_left(const Element& t, const RXElt& f) const;
  // (f d_t)_x = (f_x - f_{xt}) / (2 x(h_t)); requires Xt = X.
  RXElt demazure_right(const RXElt& f, const Element& t) const;

  // alpha_x = prod of h_t over t with x < tx in p.
  RatPoly alpha(const Element& x, const CosetData& p) const;
  // m_p = prod of h_t over t with t p_- < p_-; checked W_K-invariant.
  RatPoly m_p(const CosetData& p) const;

  // Homogeneous basis of R(p); each phi_x verified for degree, support,
  // membership and a nonzero value at x. alt_path picks right steps first
  // and the largest descent, for the uniqueness-up-to-scalar test.
  std::map<Element, RXElt> phi_basis(const CosetData& p, bool alt_path = false) const;

  // Sum of v^{-deg phi_x}; hard failure unless it equals pi~(p) exactly.
  Laurent graded_rank(const CosetData& p) const;

  // dim of the W_K x W_L-invariant subspace of R(p)_d per even degree d.
  std::vector<int> invariant_dims(const CosetData& p, GenSet K, GenSet L, int deg_cap) const;
  // Degreewise comparison with the extension-of-scalars side.
  DimReport verify_induction(const CosetData& p, GenSet K, GenSet L, int deg_cap) const;

  // dims of (R^{W_K})_d per even degree, by exact linear algebra on the
  // generator fixed-space conditions.
  std::vector<int> hilbert_parabolic(GenSet K, int deg_cap) const;
  // Same dims through the rank of the averaging projector (cross-check).
  std::vector<int> hilbert_parabolic_avg(GenSet K, int deg_cap) const;

  // Degreewise kernel dims of the difference map against an
  // evaluation-on-hyperplane-grids membership count.
  DimReport exact_sequence_check(const std::vector<Element>& X, int deg_cap) const;

  // dim R_d for even d (free polynomial ring).
  static long poly_ring_dim(int nvars, int poly_deg);

 private:
  const ReflectionRep& rep_;
  const CoxeterSystem& sys_;
  Cosets& cosets_;

  struct Edge {
    int xi, xj;  // indices into X, l(x_i) < l(x_j)
    Element t;
  };
  std::vector<Edge> edges_of(const std::vector<Element>& X) const;
  void check_deg_cap(int deg_cap) const;
};

}  // namespace schur

#endif
