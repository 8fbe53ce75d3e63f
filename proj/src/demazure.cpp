#include "schur/demazure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schur {

/* ---------------- ReflectionRep ---------------- */

ReflectionRep::ReflectionRep(const CoxeterSystem& sys) : sys_(sys) {
  struct FactorVars { CoxeterSpec::Kind kind; int n; int pay_off; int var_off; };
  // Recover the factor layout from the spec; dihedral factors have no
  // built-in rational reflection representation here.
  std::vector<FactorVars> fvs;
  std::function<void(const CoxeterSpec&)> walk = [&](const CoxeterSpec& s) {
    if (s.kind == CoxeterSpec::Kind::Product) {
      for (const auto& f : s.factors) walk(f);
      return;
    }
    if (s.kind == CoxeterSpec::Kind::I2)
      throw std::invalid_argument("dihedral systems have no built-in reflection representation");
    FactorVars fv;
    fv.kind = s.kind;
    fv.n = s.rank;
    fv.pay_off = fvs.empty() ? 0 : fvs.back().pay_off +
        (fvs.back().kind == CoxeterSpec::Kind::A ? fvs.back().n + 1 : fvs.back().n);
    fv.var_off = nvars_;
    nvars_ += (s.kind == CoxeterSpec::Kind::A) ? s.rank + 1 : s.rank;
    fvs.push_back(fv);
  };
  walk(sys.spec());
  for (const auto& fv : fvs)
    var_ranges_.push_back({fv.var_off, fv.kind == CoxeterSpec::Kind::A ? fv.n + 1 : fv.n});
  build_reflection_data();
  verify_construction();
}

std::vector<int> ReflectionRep::var_image(const Element& w) const {
  // w . x_i = sign(w(i)) x_{|w(i)|} in each factor
  std::vector<int> img(nvars_, 0);
  const auto& pay = w.payload();
  size_t pay_pos = 0;
  for (const auto& [var_off, var_cnt] : var_ranges_) {
    bool type_a = true;
    // type A payload slots store 0-based images, type B signed 1-based
    for (int i = 0; i < var_cnt; ++i)
      if (pay[pay_pos + i] <= 0 && !(pay[pay_pos + i] == 0)) type_a = false;
    // safer: detect by value range; type A payload is exactly {0..cnt-1}
    std::vector<bool> seen(var_cnt, false);
    type_a = true;
    for (int i = 0; i < var_cnt; ++i) {
      std::int32_t v = pay[pay_pos + i];
      if (v < 0 || v >= var_cnt) { type_a = false; break; }
      seen[v] = true;
    }
    if (type_a)
      for (int i = 0; i < var_cnt; ++i) type_a = type_a && seen[i];
    if (type_a) {
      for (int i = 0; i < var_cnt; ++i)
        img[var_off + i] = var_off + pay[pay_pos + i] + 1;
    } else {
      for (int i = 0; i < var_cnt; ++i) {
        std::int32_t v = pay[pay_pos + i];
        img[var_off + i] = v > 0 ? (var_off + v) : -(var_off - v);
      }
    }
    pay_pos += var_cnt;
  }
  return img;
}

RatPoly ReflectionRep::act(const Element& w, const RatPoly& f) const {
  return f.substitute_signed(var_image(w));
}

void ReflectionRep::build_reflection_data() {
  for (const auto& t : sys_.reflections()) {
    const auto& pay = t.payload();
    RatPoly ht(nvars_);
    std::vector<mpq_class> vt(nvars_, 0);
    size_t pay_pos = 0;
    bool found = false;
    for (size_t fi = 0; fi < var_ranges_.size(); ++fi) {
      const auto& [var_off, var_cnt] = var_ranges_[fi];
      std::vector<int> moved;
      bool type_a = true;
      {
        std::vector<bool> seen(var_cnt, false);
        for (int i = 0; i < var_cnt; ++i) {
          std::int32_t v = pay[pay_pos + i];
          if (v < 0 || v >= var_cnt) { type_a = false; break; }
          seen[v] = true;
        }
        if (type_a)
          for (int i = 0; i < var_cnt; ++i) type_a = type_a && seen[i];
      }
      if (type_a) {
        for (int i = 0; i < var_cnt; ++i)
          if (pay[pay_pos + i] != i) moved.push_back(i);
        if (moved.size() == 2) {
          int i = moved[0], j = moved[1];
          ht = variable(var_off + i) - variable(var_off + j);
          vt[var_off + i] = mpq_class(1, 2);
          vt[var_off + j] = mpq_class(-1, 2);
          found = true;
        } else if (!moved.empty()) {
          throw std::logic_error("reflection moves more than two coordinates");
        }
      } else {
        for (int i = 0; i < var_cnt; ++i)
          if (pay[pay_pos + i] != i + 1) moved.push_back(i);
        if (moved.size() == 1) {
          int i = moved[0];
          if (pay[pay_pos + i] != -(i + 1))
            throw std::logic_error("unexpected reflection payload");
          ht = variable(var_off + i);
          vt[var_off + i] = 1;
          found = true;
        } else if (moved.size() == 2) {
          int i = moved[0], j = moved[1];
          std::int32_t vi = pay[pay_pos + i];
          if (vi == j + 1) {
            ht = variable(var_off + i) - variable(var_off + j);
            vt[var_off + i] = mpq_class(1, 2);
            vt[var_off + j] = mpq_class(-1, 2);
          } else if (vi == -(j + 1)) {
            ht = variable(var_off + i) + variable(var_off + j);
            vt[var_off + i] = mpq_class(1, 2);
            vt[var_off + j] = mpq_class(1, 2);
          } else {
            throw std::logic_error("unexpected reflection payload");
          }
          found = true;
        } else if (!moved.empty()) {
          throw std::logic_error("reflection moves more than two coordinates");
        }
      }
      pay_pos += var_cnt;
    }
    if (!found) throw std::logic_error("reflection fixes every coordinate");
    h_.emplace(t, std::move(ht));
    v_.emplace(t, std::move(vt));
  }
}

void ReflectionRep::verify_construction() const {
  const auto& T = sys_.reflections();
  // t(l) = l - 2 h_t(l) v_t, on every basis vector. Reflections are
  // involutions, so the variable image of t doubles as its vector action.
  for (const auto& t : T) {
    const RatPoly& ht = h(t);
    const auto& vt = reflection_vector(t);
    std::vector<int> img = var_image(t);
    for (int k = 0; k < nvars_; ++k) {
      std::vector<mpq_class> lhs(nvars_, 0);
      int j = img[k] > 0 ? img[k] - 1 : -img[k] - 1;
      lhs[j] = img[k] > 0 ? 1 : -1;
      Monomial mk{std::vector<int>(nvars_, 0)};
      mk.e[k] = 1;
      mpq_class htk = ht.coeff(mk);
      for (int c = 0; c < nvars_; ++c) {
        mpq_class rhs = (c == k ? 1 : 0) - 2 * htk * vt[c];
        if (lhs[c] != rhs) throw std::logic_error("reflection action identity failed");
      }
    }
  }
  // conjugation consistency up to sign, and pairwise independence
  for (const auto& t : T) {
    for (int s = 0; s < sys_.num_gens(); ++s) {
      Element g = sys_.generator(s);
      Element conj = sys_.multiply(g, sys_.multiply(t, g));
      RatPoly moved = act(g, h(t));
      if (moved != h(conj) && moved != -h(conj))
        throw std::logic_error("conjugation does not permute reflection equations");
    }
  }
  for (size_t a = 0; a < T.size(); ++a)
    for (size_t b = a + 1; b < T.size(); ++b) {
      std::vector<std::vector<mpq_class>> rows(2, std::vector<mpq_class>(nvars_, 0));
      for (int k = 0; k < nvars_; ++k) {
        Monomial mk{std::vector<int>(nvars_, 0)};
        mk.e[k] = 1;
        rows[0][k] = h(T[a]).coeff(mk);
        rows[1][k] = h(T[b]).coeff(mk);
      }
      if (rational_rank(rows) != 2)
        throw std::logic_error("reflection equations are not pairwise independent");
    }
  // reflection-faithfulness at desk scale: codim of the fixed space is one
  // exactly on T, and only the identity acts trivially. The fixed-space
  // codimension is invariant under transpose, so the variable image of w
  // serves as the matrix.
  if (sys_.group_order() <= 5000) {
    for (const auto& w : sys_.all_elements()) {
      std::vector<int> img = var_image(w);
      std::vector<std::vector<mpq_class>> rows(nvars_, std::vector<mpq_class>(nvars_, 0));
      for (int k = 0; k < nvars_; ++k) {
        int j = img[k] > 0 ? img[k] - 1 : -img[k] - 1;
        rows[k][j] += img[k] > 0 ? 1 : -1;
        rows[k][k] -= 1;
      }
      int codim = rational_rank(rows);
      bool is_refl = std::binary_search(T.begin(), T.end(), w);
      if (is_refl != (codim == 1))
        throw std::logic_error("fixed-space codimension does not detect reflections");
      if (!w.is_identity() && codim == 0)
        throw std::logic_error("representation is not faithful");
    }
  }
}

const RatPoly& ReflectionRep::h(const Element& t) const {
  auto it = h_.find(t);
  if (it == h_.end()) throw std::invalid_argument("not a reflection");
  return it->second;
}

const std::vector<mpq_class>& ReflectionRep::reflection_vector(const Element& t) const {
  auto it = v_.find(t);
  if (it == v_.end()) throw std::invalid_argument("not a reflection");
  return it->second;
}

/* ---------------- RXElt ---------------- */

RXElt::RXElt(std::vector<Element> X, int nvars) : X_(std::move(X)) {
  std::sort(X_.begin(), X_.end());
  comp_.assign(X_.size(), RatPoly(nvars));
}

int RXElt::index_of(const Element& x) const {
  auto it = std::lower_bound(X_.begin(), X_.end(), x);
  if (it == X_.end() || !(*it == x)) return -1;
  return (int)(it - X_.begin());
}

const RatPoly& RXElt::component(const Element& x) const {
  int i = index_of(x);
  if (i < 0) throw std::invalid_argument("element outside the index set");
  return comp_[i];
}

RatPoly& RXElt::component_mut(const Element& x) {
  int i = index_of(x);
  if (i < 0) throw std::invalid_argument("element outside the index set");
  return comp_[i];
}

std::vector<Element> RXElt::support() const {
  std::vector<Element> r;
  for (size_t i = 0; i < X_.size(); ++i)
    if (!comp_[i].is_zero()) r.push_back(X_[i]);
  return r;
}

bool RXElt::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

RXElt& RXElt::operator+=(const RXElt& o) {
  if (X_ != o.X_) throw std::invalid_argument("tuples over different index sets");
  for (size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
  return *this;
}

RXElt& RXElt::operator-=(const RXElt& o) {
  if (X_ != o.X_) throw std::invalid_argument("tuples over different index sets");
  for (size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
  return *this;
}

RXElt RXElt::scaled(const RatPoly& r) const {
  RXElt out = *this;
  for (auto& c : out.comp_) c = c * r;
  return out;
}

/* ---------------- Demazure ---------------- */

std::vector<Demazure::Edge> Demazure::edges_of(const std::vector<Element>& X) const {
  std::vector<Edge> edges;
  for (const auto& t : sys_.reflections()) {
    for (size_t i = 0; i < X.size(); ++i) {
      Element tx = sys_.multiply(t, X[i]);
      if (tx.length() <= X[i].length()) continue;  // count each pair once, upward
      auto it = std::lower_bound(X.begin(), X.end(), tx);
      if (it == X.end() || !(*it == tx)) continue;
      edges.push_back({(int)i, (int)(it - X.begin()), t});
    }
  }
  return edges;
}

bool Demazure::membership_ok(const RXElt& f) const {
  for (const auto& e : edges_of(f.X())) {
    RatPoly diff = f.components()[e.xi] - f.components()[e.xj];
    if (!diff.divisible_by_linear(rep_.h(e.t))) return false;
  }
  return true;
}

RXElt Demazure::act_left(const Element& u, const RXElt& f) const {
  RXElt out(f.X(), rep_.nvars());
  Element uinv = sys_.inverse(u);
  for (const auto& x : f.X()) {
    Element src = sys_.multiply(uinv, x);
    out.component_mut(x) = rep_.act(u, f.component(src));
  }
  return out;
}

RXElt Demazure::act_right(const RXElt& f, const Element& v) const {
  RXElt out(f.X(), rep_.nvars());
  Element vinv = sys_.inverse(v);
  for (const auto& x : f.X())
    out.component_mut(x) = f.component(sys_.multiply(x, vinv));
  return out;
}

RXElt Demazure::act_right_scale(const RXElt& f, const RatPoly& r) const {
  RXElt out = f;
  for (const auto& x : f.X())
    out.component_mut(x) = f.component(x) * rep_.act(x, r);
  return out;
}

RXElt Demazure::demazure_left(const Element& t, const RXElt& f) const {
  const RatPoly& ht = rep_.h(t);
  RatPoly twoht = ht.scaled(2);
  RXElt out(f.X(), rep_.nvars());
  for (const auto& x : f.X()) {
    Element tx = sys_.multiply(t, x);
    if (out.index_of(tx) < 0)
      throw std::invalid_argument("left Demazure operator needs tX = X");
    RatPoly num = f.component(x) - rep_.act(t, f.component(tx));
    out.component_mut(x) = num.exact_div_linear(twoht);
  }
  return out;
}

RXElt Demazure::demazure_right(const RXElt& f, const Element& t) const {
  RXElt out(f.X(), rep_.nvars());
  for (const auto& x : f.X()) {
    Element xt = sys_.multiply(x, t);
    if (out.index_of(xt) < 0)
      throw std::invalid_argument("right Demazure operator needs Xt = X");
    RatPoly div = rep_.act(x, rep_.h(t)).scaled(2);
    RatPoly num = f.component(x) - f.component(xt);
    out.component_mut(x) = num.exact_div_linear(div);
  }
  return out;
}

RatPoly Demazure::alpha(const Element& x, const CosetData& p) const {
  if (!p.contains(x)) throw std::invalid_argument("element not in the double coset");
  RatPoly prod(rep_.nvars(), 1);
  int count = 0;
  for (const auto& t : sys_.reflections()) {
    Element tx = sys_.multiply(t, x);
    if (tx.length() > x.length() && p.contains(tx)) {
      prod = prod * rep_.h(t);
      ++count;
    }
  }
  if (count != p.pmax.length() - x.length())
    throw std::logic_error("reflection count disagrees with the length defect");
  return prod;
}

RatPoly Demazure::m_p(const CosetData& p) const {
  RatPoly prod(rep_.nvars(), 1);
  for (const auto& t : sys_.reflections())
    if (sys_.multiply(t, p.pmin).length() < p.pmin.length()) prod = prod * rep_.h(t);
  for (int s : p.kilmoyer.members()) {
    if (rep_.act(sys_.generator(s), prod) != prod)
      throw std::logic_error("m_p is not invariant under the Kilmoyer subgroup");
  }
  return prod;
}

std::map<Element, RXElt> Demazure::phi_basis(const CosetData& p, bool alt_path) const {
  std::map<Element, RXElt> out;
  // base: the indicator tuple at p_- carrying alpha_{p_-}
  RXElt base(p.elements, rep_.nvars());
  base.component_mut(p.pmin) = alpha(p.pmin, p);
  out.emplace(p.pmin, std::move(base));

  // p.elements is ShortLex sorted, so lengths are nondecreasing
  for (const auto& y : p.elements) {
    if (y == p.pmin) continue;
    RXElt phi;
    bool built = false;
    auto try_left = [&]() {
      auto mem = p.I.members();
      if (alt_path) std::reverse(mem.begin(), mem.end());
      for (int s : mem) {
        if (!sys_.left_descent(y, s)) continue;
        Element sy = sys_.multiply_gen_left(s, y);
        phi = demazure_left(sys_.generator(s), out.at(sy));
        built = true;
        return;
      }
    };
    auto try_right = [&]() {
      auto mem = p.J.members();
      if (alt_path) std::reverse(mem.begin(), mem.end());
      for (int t : mem) {
        if (!sys_.right_descent(y, t)) continue;
        Element yt = sys_.multiply_gen_right(y, t);
        phi = demazure_right(out.at(yt), sys_.generator(t));
        built = true;
        return;
      }
    };
    if (alt_path) { try_right(); if (!built) try_left(); }
    else { try_left(); if (!built) try_right(); }
    if (!built)
      throw std::logic_error("no descent step inside the coset below " + sys_.word_str(y));

    // verify degree, support and membership
    int want = p.pmax.length() - y.length();
    for (size_t i = 0; i < phi.X().size(); ++i) {
      const RatPoly& c = phi.components()[i];
      if (c.is_zero()) continue;
      if (!c.homogeneous() || c.degree() != want)
        throw std::logic_error("phi component with wrong degree");
      if (!sys_.bruhat_leq(phi.X()[i], y))
        throw std::logic_error("phi support escapes the Bruhat interval");
    }
    if (phi.component(y).is_zero()) throw std::logic_error("phi vanishes at its own index");
    if (!membership_ok(phi)) throw std::logic_error("phi leaves R(p)");
    out.emplace(y, std::move(phi));
  }
  return out;
}

Laurent Demazure::graded_rank(const CosetData& p) const {
  auto phis = phi_basis(p);
  Laurent sum;
  for (const auto& [x, phi] : phis) {
    int deg = -1;
    for (const auto& c : phi.components())
      if (!c.is_zero()) deg = std::max(deg, c.degree());
    sum += Laurent::v(-2 * deg);
  }
  if (sum != p.poincare_tilde)
    throw std::logic_error("graded rank of R(p) differs from its Poincare polynomial");
  return sum;
}

void Demazure::check_deg_cap(int deg_cap) const {
  static constexpr int kMaxDeg = 40;
  if (deg_cap < 0 || deg_cap > kMaxDeg)
    throw std::invalid_argument("degree cap out of range");
  if (deg_cap % 2 != 0)
    throw std::invalid_argument("degree cap must be even");
}

long Demazure::poly_ring_dim(int nvars, int poly_deg) {
  // C(poly_deg + nvars - 1, nvars - 1)
  long r = 1;
  for (int i = 1; i <= nvars - 1; ++i) r = r * (poly_deg + i) / i;
  return r;
}

std::vector<int> Demazure::invariant_dims(const CosetData& p, GenSet K, GenSet L,
                                          int deg_cap) const {
  check_deg_cap(deg_cap);
  if (!K.subset_of(p.I) || !L.subset_of(p.J))
    throw std::invalid_argument("invariant subgroups must sit inside (I, J)");
  const int nv = rep_.nvars();
  const auto& X = p.elements;
  auto edges = edges_of(X);
  std::vector<int> dims;
  for (int d = 0; d <= deg_cap; d += 2) {
    int k = d / 2;
    auto monos = monomials_of_degree(nv, k);
    const int M = (int)monos.size();
    const long N = (long)X.size() * M;
    if (N > 20000) throw std::invalid_argument("dimension guard exceeded");
    std::map<Monomial, int> mono_idx;
    for (int i = 0; i < M; ++i) mono_idx[monos[i]] = i;
    std::vector<std::vector<mpq_class>> rows;
    auto unknown = [&](int xi, int mi) { return xi * M + mi; };

    // membership: remainder of (f_x - f_{tx}) mod h_t vanishes
    for (const auto& e : edges) {
      const RatPoly& ht = rep_.h(e.t);
      std::vector<RatPoly> rems(M);
      for (int mi = 0; mi < M; ++mi) {
        RatPoly mono(nv);
        mono.add_term(monos[mi], 1);
        RatPoly rem;
        mono.divrem_linear(ht, rem);
        rems[mi] = rem;
      }
      for (int ri = 0; ri < M; ++ri) {
        std::vector<mpq_class> row(N, 0);
        bool nonzero = false;
        for (int mi = 0; mi < M; ++mi) {
          mpq_class c = rems[mi].coeff(monos[ri]);
          if (c == 0) continue;
          row[unknown(e.xi, mi)] += c;
          row[unknown(e.xj, mi)] -= c;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    // left invariance under generators of K: u f_{u^{-1}x} = f_x
    for (int s : K.members()) {
      Element u = sys_.generator(s);
      Element uinv = u;  // involution
      auto img = rep_.var_image(u);
      for (size_t xi = 0; xi < X.size(); ++xi) {
        int src = -1;
        {
          Element sx = sys_.multiply(uinv, X[xi]);
          auto it = std::lower_bound(X.begin(), X.end(), sx);
          src = (int)(it - X.begin());
        }
        for (int mi = 0; mi < M; ++mi) {
          RatPoly mono(nv);
          mono.add_term(monos[mi], 1);
          RatPoly moved = mono.substitute_signed(img);  // one signed monomial
          const auto& [mm, cc] = *moved.terms().begin();
          std::vector<mpq_class> row(N, 0);
          row[unknown(src, mi)] += cc;
          row[unknown((int)xi, mono_idx.at(mm))] -= 1;
          rows.push_back(std::move(row));
        }
      }
    }
    // right invariance under generators of L: f_{x v^{-1}} = f_x
    for (int t : L.members()) {
      Element v = sys_.generator(t);
      for (size_t xi = 0; xi < X.size(); ++xi) {
        Element xv = sys_.multiply(X[xi], v);
        auto it = std::lower_bound(X.begin(), X.end(), xv);
        int src = (int)(it - X.begin());
        if ((int)xi == src) continue;
        for (int mi = 0; mi < M; ++mi) {
          std::vector<mpq_class> row(N, 0);
          row[unknown(src, mi)] += 1;
          row[unknown((int)xi, mi)] -= 1;
          rows.push_back(std::move(row));
        }
      }
    }
    dims.push_back((int)N - rational_rank(std::move(rows)));
  }
  return dims;
}

std::vector<int> Demazure::hilbert_parabolic(GenSet K, int deg_cap) const {
  check_deg_cap(deg_cap);
  const int nv = rep_.nvars();
  std::vector<int> dims;
  for (int d = 0; d <= deg_cap; d += 2) {
    auto monos = monomials_of_degree(nv, d / 2);
    const int M = (int)monos.size();
    std::map<Monomial, int> mono_idx;
    for (int i = 0; i < M; ++i) mono_idx[monos[i]] = i;
    std::vector<std::vector<mpq_class>> rows;
    for (int s : K.members()) {
      auto img = rep_.var_image(sys_.generator(s));
      for (int mi = 0; mi < M; ++mi) {
        RatPoly mono(nv);
        mono.add_term(monos[mi], 1);
        RatPoly moved = mono.substitute_signed(img);
        std::vector<mpq_class> row(M, 0);
        row[mi] -= 1;
        for (const auto& [mm, cc] : moved.terms()) row[mono_idx.at(mm)] += cc;
        bool nonzero = false;
        for (const auto& c : row) nonzero = nonzero || c != 0;
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    dims.push_back(M - rational_rank(std::move(rows)));
  }
  return dims;
}

std::vector<int> Demazure::hilbert_parabolic_avg(GenSet K, int deg_cap) const {
  check_deg_cap(deg_cap);
  const int nv = rep_.nvars();
  const auto& elems = sys_.parabolic_elements(K);
  std::vector<int> dims;
  for (int d = 0; d <= deg_cap; d += 2) {
    auto monos = monomials_of_degree(nv, d / 2);
    const int M = (int)monos.size();
    std::map<Monomial, int> mono_idx;
    for (int i = 0; i < M; ++i) mono_idx[monos[i]] = i;
    // rank of the averaging projector equals the invariant dimension
    std::vector<std::vector<mpq_class>> avg(M, std::vector<mpq_class>(M, 0));
    for (const auto& w : elems) {
      auto img = rep_.var_image(w);
      for (int mi = 0; mi < M; ++mi) {
        RatPoly mono(nv);
        mono.add_term(monos[mi], 1);
        RatPoly moved = mono.substitute_signed(img);
        for (const auto& [mm, cc] : moved.terms()) avg[mono_idx.at(mm)][mi] += cc;
      }
    }
    dims.push_back(rational_rank(std::move(avg)));
  }
  return dims;
}

namespace {
// coefficient of v^{-d} (d >= 0) in a Laurent polynomial, as long
long coeff_at_neg(const Laurent& f, int d) {
  mpz_class c = f.coeff(-d);
  return c.get_si();
}
}  // namespace

DimReport Demazure::verify_induction(const CosetData& p, GenSet K, GenSet L,
                                     int deg_cap) const {
  DimReport rep;
  GenSet K2 = p.kilmoyer;
  std::vector<int> lhs = invariant_dims(p, K, L, deg_cap);
  std::vector<int> mid = hilbert_parabolic(K2, deg_cap);
  Laurent ratio_ik = sys_.poincare_parabolic(p.I).first.exact_div(sys_.poincare_parabolic(K).first);
  Laurent ratio_jl = sys_.poincare_parabolic(p.J).first.exact_div(sys_.poincare_parabolic(L).first);
  for (int d = 0; d <= deg_cap; d += 2) {
    long total = 0;
    for (int a = 0; a <= d; a += 2)
      for (int b = 0; a + b <= d; b += 2) {
        int c = d - a - b;
        total += coeff_at_neg(ratio_ik, a) * mid[b / 2] * coeff_at_neg(ratio_jl, c);
      }
    rep.degrees.push_back(d);
    rep.lhs.push_back(lhs[d / 2]);
    rep.rhs.push_back((int)total);
    if (lhs[d / 2] != (int)total && rep.ok) {
      rep.ok = false;
      rep.mismatch_degree = d;
    }
  }
  return rep;
}

DimReport Demazure::exact_sequence_check(const std::vector<Element>& X0, int deg_cap) const {
  check_deg_cap(deg_cap);
  std::vector<Element> X = X0;
  std::sort(X.begin(), X.end());
  const int nv = rep_.nvars();
  auto edges = edges_of(X);
  DimReport out;

  // rational points spanning the hyperplane h = 0: a kernel basis scaled to
  // integer grids of side k+1
  auto hyperplane_grid = [&](const RatPoly& ht, int k) {
    int pivot = -1;
    mpq_class pc;
    for (int i = 0; i < nv; ++i) {
      Monomial m{std::vector<int>(nv, 0)};
      m.e[i] = 1;
      mpq_class c = ht.coeff(m);
      if (c != 0) { pivot = i; pc = c; break; }
    }
    std::vector<std::vector<mpq_class>> basis;
    for (int q = 0; q < nv; ++q) {
      if (q == pivot) continue;
      Monomial m{std::vector<int>(nv, 0)};
      m.e[q] = 1;
      std::vector<mpq_class> b(nv, 0);
      b[q] = 1;
      b[pivot] = -ht.coeff(m) / pc;
      basis.push_back(std::move(b));
    }
    std::vector<std::vector<mpq_class>> pts;
    std::vector<int> idx(basis.size(), 0);
    while (true) {
      std::vector<mpq_class> pt(nv, 0);
      for (size_t b = 0; b < basis.size(); ++b)
        for (int c = 0; c < nv; ++c) pt[c] += idx[b] * basis[b][c];
      pts.push_back(std::move(pt));
      size_t pos = 0;
      while (pos < idx.size() && idx[pos] == k) idx[pos++] = 0;
      if (pos == idx.size()) break;
      ++idx[pos];
    }
    return pts;
  };

  for (int d = 0; d <= deg_cap; d += 2) {
    int k = d / 2;
    auto monos = monomials_of_degree(nv, k);
    const int M = (int)monos.size();
    const long N = (long)X.size() * M;
    if (N > 20000) throw std::invalid_argument("dimension guard exceeded");
    auto unknown = [&](int xi, int mi) { return xi * M + mi; };

    // route 1: kernel of the signed difference map into R_x/(h_t)
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& e : edges) {
      const RatPoly& ht = rep_.h(e.t);
      std::vector<RatPoly> rems(M);
      for (int mi = 0; mi < M; ++mi) {
        RatPoly mono(nv);
        mono.add_term(monos[mi], 1);
        RatPoly rem;
        mono.divrem_linear(ht, rem);
        rems[mi] = rem;
      }
      for (int ri = 0; ri < M; ++ri) {
        std::vector<mpq_class> row(N, 0);
        bool nonzero = false;
        for (int mi = 0; mi < M; ++mi) {
          mpq_class c = rems[mi].coeff(monos[ri]);
          if (c == 0) continue;
          row[unknown(e.xi, mi)] += c;   // epsilon = +1 for x < tx
          row[unknown(e.xj, mi)] -= c;   // epsilon = -1 for the upper end
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    int kernel_dim = (int)N - rational_rank(std::move(rows));

    // route 2: membership by evaluation on hyperplane point grids
    std::vector<std::vector<mpq_class>> ev;
    for (const auto& e : edges) {
      for (const auto& pt : hyperplane_grid(rep_.h(e.t), k)) {
        std::vector<mpq_class> row(N, 0);
        bool nonzero = false;
        for (int mi = 0; mi < M; ++mi) {
          RatPoly mono(nv);
          mono.add_term(monos[mi], 1);
          mpq_class val = mono.evaluate(pt);
          if (val == 0) continue;
          row[unknown(e.xi, mi)] += val;
          row[unknown(e.xj, mi)] -= val;
          nonzero = true;
        }
        if (nonzero) ev.push_back(std::move(row));
      }
    }
    int member_dim = (int)N - rational_rank(std::move(ev));

    out.degrees.push_back(d);
    out.lhs.push_back(kernel_dim);
    out.rhs.push_back(member_dim);
    if (kernel_dim != member_dim && out.ok) {
      out.ok = false;
      out.mismatch_degree = d;
    }
  }
  return out;
}

}  // namespace schur
