#ifndef SCHUR_LAURENT_HPP
#define SCHUR_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace schur {

// Sparse element of Z[v,v^-1]. Exponent -> coefficient, no zero
// coefficients stored. Coefficients are arbitrary precision.
class Laurent {
 public:
  using Map = std::map<int, mpz_class>;

  Laurent() = default;
  Laurent(long c) { if (c != 0) m_[0] = c; }
  Laurent(const mpz_class& c, int exp) { if (c != 0) m_[exp] = c; }

  static Laurent v(int exp = 1) { return Laurent(1, exp); }

  bool is_zero() const { return m_.empty(); }
  bool is_one() const { return m_.size() == 1 && m_.begin()->first == 0 && m_.begin()->second == 1; }
  const Map& terms() const { return m_; }

  mpz_class coeff(int exp) const {
    auto it = m_.find(exp);
    return it == m_.end() ? mpz_class(0) : it->second;
  }
  int min_exp() const { require_nonzero(); return m_.begin()->first; }
  int max_exp() const { require_nonzero(); return m_.rbegin()->first; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return m_ == o.m_; }
  bool operator!=(const Laurent& o) const { return m_ != o.m_; }
  bool operator<(const Laurent& o) const { return m_ < o.m_; }

  // The involution v -> v^-1.
  Laurent bar() const;
  bool self_dual() const { return *this == bar(); }

  // Multiplication by v^k.
  Laurent shifted(int k) const;

  // True if all coefficients are >= 0.
  bool nonneg() const;
  // True if supported on strictly positive exponents.
  bool positive_exponents_only() const { return m_.empty() || m_.begin()->first >= 1; }

  // Exact division; throws std::domain_error when the division leaves a
  // remainder or a non-integral quotient coefficient.
  Laurent exact_div(const Laurent& d) const;
  static bool try_div(const Laurent& f, const Laurent& d, Laurent& quot);

  // "v^-1 + 2 + 3*v^2", ascending exponents; "0" for zero.
  std::string str() const;
  static Laurent parse(const std::string& s);

 private:
  Map m_;
  void require_nonzero() const {
    if (m_.empty()) throw std::domain_error("zero Laurent polynomial has no support");
  }
};

}  // namespace schur

#endif
