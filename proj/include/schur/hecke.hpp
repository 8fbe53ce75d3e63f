#ifndef SCHUR_HECKE_HPP
#define SCHUR_HECKE_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "schur/coxeter.hpp"
#include "schur/laurent.hpp"

namespace schur {

// Element of the Hecke algebra H in the standard basis: a sparse map
// from group elements to Z[v,v^-1] coefficients. No zero terms stored.
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(const CoxeterSystem* sys) : sys_(sys) {}

  const CoxeterSystem* system() const { return sys_; }
  const std::map<Element, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const Element& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent() : it->second;
  }

  void add(const Element& w, const Laurent& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { a += b; return a; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { a -= b; return a; }
  HeckeElt scaled(const Laurent& c) const;
  bool operator==(const HeckeElt& o) const { return terms_ == o.terms_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

 private:
  const CoxeterSystem* sys_ = nullptr;
  std::map<Element, Laurent> terms_;
};

// The Hecke algebra of a fixed system, with the Kazhdan-Lusztig table as a
// growing shared cache. Concurrent requests for the same entry may duplicate
// work but always converge to identical values (entries are pure functions
// of the key); the cache itself is mutex-guarded.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const CoxeterSystem& sys) : sys_(sys) {}
  HeckeAlgebra(const HeckeAlgebra&) = delete;
  HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

  const CoxeterSystem& system() const { return sys_; }

  HeckeElt zero() const { return HeckeElt(&sys_); }
  HeckeElt unit() const { return std_basis(sys_.identity()); }
  HeckeElt std_basis(const Element& w) const;

  // H_s * h and h * H_s.
  HeckeElt mult_gen_left(int s, const HeckeElt& h) const;
  HeckeElt mult_gen_right(const HeckeElt& h, int s) const;
  // Generator-rule product: the left factor is decomposed along its cached
  // ShortLex word and the rule is applied letter by letter from the right.
  HeckeElt multiply(const HeckeElt& a, const HeckeElt& b) const;

  // H_w^{-1}, built from H_s^{-1} = H_s + (v - v^{-1})H_e.
  HeckeElt std_inverse(const Element& w) const;
  // bar: v -> v^-1, H_w -> H_{w^{-1}}^{-1}.
  HeckeElt bar(const HeckeElt& h) const;
  // i: H_x -> H_{x^{-1}}, coefficients untouched.
  HeckeElt anti_involution(const HeckeElt& h) const;
  // <f,g> = coefficient of H_id in f * i(g); equals sum_x f_x g_x.
  Laurent pairing(const HeckeElt& f, const HeckeElt& g) const;

  // Kazhdan-Lusztig basis element h_w (cached) and h_{x,w}.
  HeckeElt kl(const Element& w) const;
  Laurent kl_poly(const Element& x, const Element& w) const;

  // Number of h_w computed from scratch so far (cache misses).
  std::uint64_t kl_computed() const;
  // Preload/extract cache entries (w -> full h_w expansion) for the CLI cache.
  void preload_kl(const Element& w, const HeckeElt& h) const;
  std::map<Element, HeckeElt> kl_cache_snapshot() const;

  void check_same_system(const HeckeElt& h) const;

 private:
  const CoxeterSystem& sys_;
  mutable std::mutex mu_;
  mutable std::map<Element, HeckeElt> kl_cache_;
  mutable std::uint64_t kl_computed_ = 0;

  HeckeElt kl_uncached(const Element& w) const;
};

}  // namespace schur

#endif
