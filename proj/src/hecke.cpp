#include "schur/hecke.hpp"

#include <stdexcept>

namespace schur {

void HeckeElt::add(const Element& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (sys_ == nullptr) sys_ = o.sys_;
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (sys_ == nullptr) sys_ = o.sys_;
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElt HeckeElt::scaled(const Laurent& c) const {
  HeckeElt r(sys_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

void HeckeAlgebra::check_same_system(const HeckeElt& h) const {
  if (h.system() != nullptr && h.system() != &sys_)
    throw std::invalid_argument("Hecke elements from different systems");
}

HeckeElt HeckeAlgebra::std_basis(const Element& w) const {
  HeckeElt r(&sys_);
  r.add(w, Laurent(1));
  return r;
}

HeckeElt HeckeAlgebra::mult_gen_left(int s, const HeckeElt& h) const {
  check_same_system(h);
  static const Laurent kRule = Laurent::v(-1) - Laurent::v(1);  // v^-1 - v
  HeckeElt r(&sys_);
  for (const auto& [w, c] : h.terms()) {
    Element sw = sys_.multiply_gen_left(s, w);
    if (sw.length() > w.length()) {
      r.add(sw, c);
    } else {
      r.add(w, kRule * c);
      r.add(sw, c);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::mult_gen_right(const HeckeElt& h, int s) const {
  check_same_system(h);
  static const Laurent kRule = Laurent::v(-1) - Laurent::v(1);
  HeckeElt r(&sys_);
  for (const auto& [w, c] : h.terms()) {
    Element ws = sys_.multiply_gen_right(w, s);
    if (ws.length() > w.length()) {
      r.add(ws, c);
    } else {
      r.add(w, kRule * c);
      r.add(ws, c);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::multiply(const HeckeElt& a, const HeckeElt& b) const {
  check_same_system(a);
  check_same_system(b);
  HeckeElt out(&sys_);
  for (const auto& [w, c] : a.terms()) {
    HeckeElt cur = b;
    const auto& word = w.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      cur = mult_gen_left(*it, cur);
    out += cur.scaled(c);
  }
  return out;
}

HeckeElt HeckeAlgebra::std_inverse(const Element& w) const {
  // H_w^{-1} = H_{s_k}^{-1} ... H_{s_1}^{-1} for w = s_1 ... s_k
  static const Laurent kShift = Laurent::v(1) - Laurent::v(-1);  // v - v^-1
  HeckeElt r = unit();
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    HeckeElt geninv(&sys_);
    geninv.add(sys_.generator(*it), Laurent(1));
    geninv.add(sys_.identity(), kShift);
    r = multiply(r, geninv);
  }
  return r;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  check_same_system(h);
  HeckeElt r(&sys_);
  for (const auto& [w, c] : h.terms())
    r += std_inverse(sys_.inverse(w)).scaled(c.bar());
  return r;
}

HeckeElt HeckeAlgebra::anti_involution(const HeckeElt& h) const {
  check_same_system(h);
  HeckeElt r(&sys_);
  for (const auto& [w, c] : h.terms()) r.add(sys_.inverse(w), c);
  return r;
}

Laurent HeckeAlgebra::pairing(const HeckeElt& f, const HeckeElt& g) const {
  check_same_system(f);
  check_same_system(g);
  if (f.system() != nullptr && g.system() != nullptr && f.system() != g.system())
    throw std::invalid_argument("Hecke elements from different systems");
  Laurent r;
  for (const auto& [w, c] : f.terms()) {
    Laurent d = g.coeff(w);
    if (!d.is_zero()) r += c * d;
  }
  return r;
}

HeckeElt HeckeAlgebra::kl(const Element& w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = kl_cache_.find(w);
    if (it != kl_cache_.end()) return it->second;
  }
  HeckeElt h = kl_uncached(w);
  std::lock_guard<std::mutex> lock(mu_);
  ++kl_computed_;
  kl_cache_.emplace(w, h);
  return h;
}

HeckeElt HeckeAlgebra::kl_uncached(const Element& w) const {
  if (w.is_identity()) return unit();
  // h_w = h_s h_{w'} - sum mu(z,w') h_z over z with sz < z, for w = s w'.
  int s = w.word().front();
  Element wp = sys_.multiply_gen_left(s, w);
  HeckeElt hwp = kl(wp);
  HeckeElt acc = mult_gen_left(s, hwp) + hwp.scaled(Laurent::v(1));  // h_s h_{w'}
  for (const auto& [z, c] : hwp.terms()) {
    if (z == wp) continue;
    mpz_class mu = c.coeff(1);
    if (mu == 0) continue;
    if (sys_.multiply_gen_left(s, z).length() < z.length())
      acc -= kl(z).scaled(Laurent(mu, 0));
  }
  return acc;
}

Laurent HeckeAlgebra::kl_poly(const Element& x, const Element& w) const {
  if (!sys_.bruhat_leq(x, w)) return Laurent();
  return kl(w).coeff(x);
}

std::uint64_t HeckeAlgebra::kl_computed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return kl_computed_;
}

void HeckeAlgebra::preload_kl(const Element& w, const HeckeElt& h) const {
  std::lock_guard<std::mutex> lock(mu_);
  kl_cache_.emplace(w, h);
}

std::map<Element, HeckeElt> HeckeAlgebra::kl_cache_snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return kl_cache_;
}

}  // namespace schur
