#ifndef SCHUR_ALGEBROID_HPP
#define SCHUR_ALGEBROID_HPP

#include <optional>
#include <vector>

#include "schur/cosets.hpp"
#include "schur/hecke.hpp"

namespace schur {

// Element of the hom-space between two finitary subsets, in standard-basis
// coordinates: a sparse map p_minus -> Z[v,v^-1].
class SchurElt {
 public:
  SchurElt() = default;
  SchurElt(GenSet I, GenSet J) : I_(I), J_(J) {}

  GenSet left() const { return I_; }
  GenSet right() const { return J_; }
  const std::map<Element, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const Element& pmin) const {
    auto it = terms_.find(pmin);
    return it == terms_.end() ? Laurent() : it->second;
  }

  void add(const Element& pmin, const Laurent& c);
  SchurElt& operator+=(const SchurElt& o);
  SchurElt& operator-=(const SchurElt& o);
  SchurElt scaled(const Laurent& c) const;
  bool operator==(const SchurElt& o) const {
    return I_ == o.I_ && J_ == o.J_ && terms_ == o.terms_;
  }
  bool operator!=(const SchurElt& o) const { return !(*this == o); }

 private:
  GenSet I_, J_;
  std::map<Element, Laurent> terms_;
};

// Raised by extract_from_hecke when the input does not lie in the hom-space;
// carries the part that could not be written in the standard basis.
struct ExtractError : std::runtime_error {
  HeckeElt remainder;
  ExtractError(const std::string& msg, HeckeElt rem)
      : std::runtime_error(msg), remainder(std::move(rem)) {}
};

struct TranslationStep {
  GenSet from, to;
  bool out_of_wall = false;  // true when from is a subset of to
};

struct TranslationChain {
  std::vector<GenSet> subsets;  // J_0 .. J_n
  std::vector<TranslationStep> steps() const;
};

struct SequenceSearchResult {
  std::optional<TranslationChain> chain;
  SchurElt product;       // realized product when found
  long states_explored = 0;
};

// The hom-spaces between finitary subsets with the renormalized product,
// standard and Kazhdan-Lusztig bases, closed multiplication forms and the
// translation-sequence search. Everything is computed through the Hecke
// algebra: embed, multiply, divide exactly, extract.
class Algebroid {
 public:
  Algebroid(const CoxeterSystem& sys, HeckeAlgebra& hecke, Cosets& cosets)
      : sys_(sys), hecke_(hecke), cosets_(cosets) {}
  Algebroid(const Algebroid&) = delete;
  Algebroid& operator=(const Algebroid&) = delete;

  const CoxeterSystem& system() const { return sys_; }
  Cosets& cosets() const { return cosets_; }
  HeckeAlgebra& hecke() const { return hecke_; }

  SchurElt standard(GenSet I, GenSet J, const Element& pmin_or_any) const;
  // The standard generator between nested subsets: the basis element of the
  // coset containing the identity.
  SchurElt generator(GenSet I, GenSet J) const;
  SchurElt kl_elt(GenSet I, GenSet J, const Element& pmin_or_any) const;

  HeckeElt embed(const SchurElt& f) const;
  SchurElt extract(const HeckeElt& h, GenSet I, GenSet J) const;

  // f *_J g for f over (I,J) and g over (J,K).
  SchurElt star(const SchurElt& f, const SchurElt& g) const;
  // Closed-form action of the standard generator: f over (I,J) translated
  // to (I,K) for nested J,K. Equals star(f, generator(J,K)).
  SchurElt translate(const SchurElt& f, GenSet K) const;

  // The scalar c and coset p with M^(I,0) * H_x * M^(0,J) = c * M_p.
  std::pair<Laurent, CosetRef> wmst(GenSet I, const Element& x, GenSet J) const;

  // <f,g> = coefficient of H_id in f *_J i(g).
  Laurent pairing(const SchurElt& f, const SchurElt& g) const;
  // i restricted to the hom-spaces: (I,J) -> (J,I).
  SchurElt anti(const SchurElt& f) const;
  // Graded hom-rank predictor: bar of the pairing.
  Laurent hom_rank(const SchurElt& chd_m, const SchurElt& chn_n) const;

  // Product = M_p + strictly lower terms?
  bool unitriangular_at(const SchurElt& f, const Element& pmin) const;
  // Breadth-first search for a nested-subset sequence whose generator
  // product is unitriangular with top term the given coset.
  SequenceSearchResult translation_sequence(GenSet I, GenSet J, const Element& pmin,
                                            int cap = 12) const;

  // Product of standard generators along a nested chain, starting from the
  // identity morphism of the first subset.
  SchurElt bott_samelson_char(const std::vector<GenSet>& chain) const;
  // Coordinates in the KL basis, by top-down elimination. Always succeeds.
  std::map<Element, Laurent> decompose_kl(SchurElt f) const;

  Laurent poincare(GenSet I) const { return sys_.poincare_parabolic(I).second; }

 private:
  const CoxeterSystem& sys_;
  HeckeAlgebra& hecke_;
  Cosets& cosets_;

  std::vector<GenSet> heuristic_chain(GenSet I, GenSet J, const Element& x,
                                      int depth) const;
};

}  // namespace schur

#endif
