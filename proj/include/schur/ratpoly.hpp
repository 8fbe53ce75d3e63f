#ifndef SCHUR_RATPOLY_HPP
#define SCHUR_RATPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace schur {

// Monomial in a fixed number of variables. Ordering: total degree first,
// then exponent vectors in descending lexicographic order, so x1^2 comes
// before x1*x2 before x2^2.
struct Monomial {
  std::vector<int> e;

  int total() const {
    int t = 0;
    for (int k : e) t += k;
    return t;
  }
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const {
    int a = total(), b = o.total();
    if (a != b) return a < b;
    return e > o.e;
  }
};

// Sparse multivariate polynomial over Q. Variables x1..xn carry degree 2
// (the "paper degree" is twice the polynomial degree).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(int nvars) : nvars_(nvars) {}
  RatPoly(int nvars, const mpq_class& c);
  static RatPoly variable(int nvars, int i);  // x_{i+1}, 0-based index

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const mpq_class& c);
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly operator-() const;
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { a += b; return a; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { a -= b; return a; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly scaled(const mpq_class& c) const;
  bool operator==(const RatPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  // Polynomial degree (total exponent); -1 for zero. Paper degree is 2x.
  int degree() const;
  bool homogeneous() const;
  RatPoly homogeneous_component(int poly_deg) const;

  // Substitute x_i -> sign * x_{perm[i]} (signed variable images).
  RatPoly substitute_signed(const std::vector<int>& image) const;  // image[i] = +-(j+1)
  // Evaluate at a rational point.
  mpq_class evaluate(const std::vector<mpq_class>& point) const;

  // Division by a nonzero linear form: *this = q * lin + r with r free of
  // the pivot variable. Returns q, stores r in rem.
  RatPoly divrem_linear(const RatPoly& lin, RatPoly& rem) const;
  bool divisible_by_linear(const RatPoly& lin) const;
  RatPoly exact_div_linear(const RatPoly& lin) const;  // throws on remainder

  // Canonical text, e.g. "1/2*x1^2 - x1*x2"; "0" for zero.
  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<Monomial, mpq_class> terms_;
  void check_vars(const RatPoly& o) const;
};

// All monomials of total degree d in n variables, in Monomial order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Exact rank of a rational matrix (rows of equal width) by Gauss elimination.
int rational_rank(std::vector<std::vector<mpq_class>> rows);

}  // namespace schur

#endif
