#include "schur/laurent.hpp"

#include <cctype>
#include <sstream>

namespace schur {

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.m_) {
    auto it = m_.find(e);
    if (it == m_.end()) {
      m_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.m_) {
    auto it = m_.find(e);
    if (it == m_.end()) {
      m_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) m_.erase(it);
    }
  }
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : m_) r.m_.emplace(e, -c);
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.m_)
    for (const auto& [eb, cb] : b.m_) {
      mpz_class& slot = r.m_[ea + eb];
      slot += ca * cb;
    }
  for (auto it = r.m_.begin(); it != r.m_.end();)
    it = (it->second == 0) ? r.m_.erase(it) : std::next(it);
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : m_) r.m_.emplace(-e, c);
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, c] : m_) r.m_.emplace(e + k, c);
  return r;
}

bool Laurent::nonneg() const {
  for (const auto& [e, c] : m_)
    if (c < 0) return false;
  return true;
}

bool Laurent::try_div(const Laurent& f, const Laurent& d, Laurent& quot) {
  if (d.is_zero()) return false;
  quot = Laurent();
  if (f.is_zero()) return true;
  Laurent rem = f;
  const int dtop = d.max_exp();
  const mpz_class& dc = d.m_.rbegin()->second;
  // Long division from the top exponent; quotients must stay integral.
  while (!rem.is_zero()) {
    int rtop = rem.max_exp();
    if (rtop - rem.min_exp() < dtop - d.min_exp()) return false;
    mpz_class q = rem.m_.rbegin()->second / dc;
    if (q * dc != rem.m_.rbegin()->second) return false;
    Laurent t(q, rtop - dtop);
    quot += t;
    rem -= t * d;
    if (!rem.is_zero() && rem.max_exp() >= rtop) return false;
  }
  return true;
}

Laurent Laurent::exact_div(const Laurent& d) const {
  Laurent q;
  if (!try_div(*this, d, q))
    throw std::domain_error("inexact Laurent division: (" + str() + ") / (" + d.str() + ")");
  return q;
}

std::string Laurent::str() const {
  if (m_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : m_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "v";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

Laurent Laurent::parse(const std::string& s) {
  Laurent r;
  size_t i = 0;
  auto skip = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  skip();
  if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return r;
  int sign = 1;
  while (i < s.size()) {
    skip();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      skip();
    }
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    int exp = 0;
    skip();
    if (i < s.size() && s[i] == '*') { ++i; skip(); }
    if (i < s.size() && s[i] == 'v') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          if (s[i] == '-') esign = -1;
          ++i;
        }
        std::string ed;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ed += s[i++];
        if (ed.empty()) throw std::invalid_argument("bad Laurent literal: " + s);
        exp = esign * std::stoi(ed);
      }
    } else if (digits.empty()) {
      throw std::invalid_argument("bad Laurent literal: " + s);
    }
    r += Laurent(sign * c, exp);
    skip();
  }
  return r;
}

}  // namespace schur
