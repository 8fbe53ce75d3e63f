#include "schur/ratpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace schur {

RatPoly::RatPoly(int nvars, const mpq_class& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Monomial{std::vector<int>(nvars, 0)}, c);
}

RatPoly RatPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  RatPoly p(nvars);
  Monomial m{std::vector<int>(nvars, 0)};
  m.e[i] = 1;
  p.terms_.emplace(std::move(m), mpq_class(1));
  return p;
}

mpq_class RatPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void RatPoly::check_vars(const RatPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials over different variable sets");
}

void RatPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  a.check_vars(b);
  RatPoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (int i = 0; i < a.nvars_; ++i) m.e[i] += mb.e[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

RatPoly RatPoly::scaled(const mpq_class& c) const {
  RatPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

int RatPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

bool RatPoly::homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.total();
  for (const auto& [m, c] : terms_)
    if (m.total() != d) return false;
  return true;
}

RatPoly RatPoly::homogeneous_component(int poly_deg) const {
  RatPoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.total() == poly_deg) r.terms_.emplace(m, c);
  return r;
}

RatPoly RatPoly::substitute_signed(const std::vector<int>& image) const {
  if ((int)image.size() != nvars_) throw std::invalid_argument("bad variable image");
  RatPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial n{std::vector<int>(nvars_, 0)};
    int sign = 1;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      int im = image[i];
      int j = (im > 0 ? im : -im) - 1;
      n.e[j] += m.e[i];
      if (im < 0 && (m.e[i] & 1)) sign = -sign;
    }
    r.add_term(n, sign > 0 ? c : -c);
  }
  return r;
}

mpq_class RatPoly::evaluate(const std::vector<mpq_class>& point) const {
  if ((int)point.size() != nvars_) throw std::invalid_argument("bad evaluation point");
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

RatPoly RatPoly::divrem_linear(const RatPoly& lin, RatPoly& rem) const {
  if (lin.is_zero() || lin.degree() != 1)
    throw std::invalid_argument("divisor must be a nonzero linear form");
  check_vars(lin);
  for (const auto& [m, c] : lin.terms_)
    if (m.total() != 1) throw std::invalid_argument("divisor must be homogeneous linear");
  // pivot = first variable with nonzero coefficient
  int pivot = -1;
  mpq_class pc;
  for (int i = 0; i < nvars_; ++i) {
    Monomial m{std::vector<int>(nvars_, 0)};
    m.e[i] = 1;
    mpq_class c = lin.coeff(m);
    if (c != 0) { pivot = i; pc = c; break; }
  }
  RatPoly q(nvars_), r = *this;
  while (true) {
    // highest pivot-degree term
    const Monomial* best = nullptr;
    for (const auto& [m, c] : r.terms_)
      if (m.e[pivot] > 0 && (!best || m.e[pivot] > best->e[pivot] ||
                             (m.e[pivot] == best->e[pivot] && m < *best)))
        best = &m;
    if (!best) break;
    Monomial qm = *best;
    qm.e[pivot] -= 1;
    mpq_class qc = r.coeff(*best) / pc;
    RatPoly qt(nvars_);
    qt.terms_.emplace(qm, qc);
    q += qt;
    r -= qt * lin;
  }
  rem = r;
  return q;
}

bool RatPoly::divisible_by_linear(const RatPoly& lin) const {
  RatPoly rem;
  divrem_linear(lin, rem);
  return rem.is_zero();
}

RatPoly RatPoly::exact_div_linear(const RatPoly& lin) const {
  RatPoly rem;
  RatPoly q = divrem_linear(lin, rem);
  if (!rem.is_zero())
    throw std::domain_error("inexact division by linear form: (" + str() + ") / (" + lin.str() + ")");
  return q;
}

static std::string mono_str(const Monomial& m) {
  std::string s;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

std::string RatPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string ms = mono_str(m);
    if (ms.empty()) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << ms;
    }
  }
  return out.str();
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur{std::vector<int>(nvars, 0)};
  // enumerate recursively, then sort into canonical order
  std::vector<int> stack;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur.e[var] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur.e[var] = k;
      rec(var + 1, left - k);
    }
    cur.e[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial{{}});
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

int rational_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const mpq_class pc = rows[rank][col];
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      mpq_class f = rows[r][col] / pc;
      for (size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return (int)rank;
}

}  // namespace schur
