#ifndef SCHUR_COXETER_HPP
#define SCHUR_COXETER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "schur/laurent.hpp"

namespace schur {

// A subset of the simple generators, as a bitset over generator indices.
class GenSet {
 public:
  GenSet() = default;
  explicit GenSet(std::uint32_t bits) : bits_(bits) {}
  static GenSet single(int s) { return GenSet(1u << s); }
  static GenSet full(int n) { return GenSet(n >= 32 ? ~0u : ((1u << n) - 1)); }

  bool contains(int s) const { return (bits_ >> s) & 1u; }
  bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcount(bits_); }
  std::uint32_t bits() const { return bits_; }

  GenSet with(int s) const { return GenSet(bits_ | (1u << s)); }
  GenSet without(int s) const { return GenSet(bits_ & ~(1u << s)); }
  friend GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  bool operator==(const GenSet&) const = default;
  bool operator<(const GenSet& o) const { return bits_ < o.bits_; }

  std::vector<int> members() const {
    std::vector<int> r;
    for (int s = 0; s < 32; ++s)
      if (contains(s)) r.push_back(s);
    return r;
  }

 private:
  std::uint32_t bits_ = 0;
};

struct CoxeterSpec {
  enum class Kind { A, B, I2, Product };
  Kind kind = Kind::A;
  int rank = 1;                      // types A (n >= 1) and B (n >= 2)
  int m = 2;                         // type I2 (m >= 2)
  std::vector<CoxeterSpec> factors;  // product
  std::vector<std::string> labels;   // optional custom generator labels

  static CoxeterSpec type_a(int n);
  static CoxeterSpec type_b(int n);
  static CoxeterSpec dihedral(int m);
  static CoxeterSpec product(std::vector<CoxeterSpec> fs);

  int gen_count() const;
  // Validates ranks and the total generator cap; throws std::invalid_argument.
  void validate(int gen_cap = 16) const;

  std::string to_json() const;
  static CoxeterSpec from_json_text(const std::string& text);
  // Shorthand: "A2", "B3", "I2:5", and 'x'-joined products like "A2xA1".
  static CoxeterSpec parse_shorthand(const std::string& text);
  // Canonical serialization; basis of the cache hash.
  std::string canonical() const { return to_json(); }
};

// An element of a concrete finite Coxeter group model. Immutable; carries
// its length and ShortLex-minimal reduced word. Equality is payload
// equality; ordering is ShortLex (length, then word lexicographically).
class Element {
 public:
  Element() = default;
  const std::vector<std::int32_t>& payload() const { return pay_; }
  int length() const { return len_; }
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const { return len_ == 0; }

  bool operator==(const Element& o) const { return pay_ == o.pay_; }
  bool operator!=(const Element& o) const { return pay_ != o.pay_; }
  bool operator<(const Element& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    if (word_ != o.word_) return word_ < o.word_;
    return pay_ < o.pay_;
  }

 private:
  friend class CoxeterSystem;
  std::vector<std::int32_t> pay_;
  int len_ = 0;
  std::vector<int> word_;
};

// Concrete model of a finite Coxeter group: permutations (type A), signed
// permutations (type B), the rotation/reflection presentation of a dihedral
// group (type I2), and componentwise products of these. All operations are
// pure; the element list and reflection set are lazy, idempotent caches.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterSpec spec, int gen_cap = 16);
  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  const CoxeterSpec& spec() const { return spec_; }
  int num_gens() const { return (int)labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  int gen_index(const std::string& label) const;  // -1 when unknown
  GenSet all_gens() const { return GenSet::full(num_gens()); }

  Element identity() const;
  Element generator(int s) const;
  Element multiply(const Element& a, const Element& b) const;
  Element multiply_gen_right(const Element& a, int s) const;
  Element multiply_gen_left(int s, const Element& a) const;
  Element inverse(const Element& a) const;

  int length(const Element& a) const { return a.length(); }
  bool right_descent(const Element& a, int s) const;  // l(as) < l(a)
  bool left_descent(const Element& a, int s) const;   // l(sa) < l(a)
  GenSet right_descents(const Element& a) const;
  GenSet left_descents(const Element& a) const;

  bool bruhat_leq(const Element& x, const Element& w) const;

  // Group order from the closed-form factor orders.
  mpz_class group_order() const;

  // All |W| elements in ShortLex order; guarded against huge groups.
  const std::vector<Element>& all_elements() const;
  // T = closure of S under conjugation, ShortLex order.
  const std::vector<Element>& reflections() const;

  // Longest element of the standard parabolic W_I.
  Element longest_element(GenSet I) const;
  bool in_parabolic(const Element& a, GenSet I) const;
  // Elements of W_I in ShortLex order (cached per subset).
  const std::vector<Element>& parabolic_elements(GenSet I) const;
  // pi~(I) and pi(I).
  std::pair<Laurent, Laurent> poincare_parabolic(GenSet I) const;

  // Serialization: ShortLex reduced words, "s1.s2.s1"; identity is "e".
  std::string word_str(const Element& a) const;
  Element parse(const std::string& word) const;
  Element from_word(const std::vector<int>& word) const;
  std::string gens_str(GenSet I) const;              // "s1,s2"; "" for empty
  GenSet parse_gens(const std::string& csv) const;   // inverse of gens_str
  std::vector<std::string> gen_labels(GenSet I) const;

  // Length from the model statistic (inversion count / closed form),
  // independent of the cached word. Used by consistency checks.
  int model_length(const Element& a) const;

 private:
  struct Factor {
    CoxeterSpec::Kind kind;
    int n = 0;        // rank for A/B, m for I2
    int gen_off = 0;  // first generator index
    int gen_cnt = 0;
    int pay_off = 0;  // first payload slot
    int pay_cnt = 0;
  };

  CoxeterSpec spec_;
  std::vector<Factor> factors_;
  std::vector<std::string> labels_;
  std::vector<std::int32_t> id_pay_;

  mutable std::once_flag elems_once_, refl_once_;
  mutable std::vector<Element> elems_, refl_;
  mutable std::mutex parab_mu_;
  mutable std::map<GenSet, std::vector<Element>> parab_;

  void flatten(const CoxeterSpec& s);
  const Factor& factor_of_gen(int s) const;
  void apply_gen_right(std::vector<std::int32_t>& pay, int s) const;
  void apply_gen_left(std::vector<std::int32_t>& pay, int s) const;
  bool payload_right_descent(const std::vector<std::int32_t>& pay, int s) const;
  bool payload_left_descent(const std::vector<std::int32_t>& pay, int s) const;
  std::vector<std::int32_t> payload_mult(const std::vector<std::int32_t>& a,
                                         const std::vector<std::int32_t>& b) const;
  std::vector<std::int32_t> payload_inverse(const std::vector<std::int32_t>& a) const;
  Element seal(std::vector<std::int32_t> pay) const;  // computes word + length
};

}  // namespace schur

#endif
