#ifndef SCHUR_VERIFY_HPP
#define SCHUR_VERIFY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "schur/algebroid.hpp"
#include "schur/demazure.hpp"

namespace schur {

// Everything needed to compute over one Coxeter system. The reflection
// representation is only built for systems that support one (no dihedral
// factors); rep/dem stay null otherwise.
struct Workspace {
  std::unique_ptr<CoxeterSystem> sys;
  std::unique_ptr<HeckeAlgebra> hecke;
  std::unique_ptr<Cosets> cosets;
  std::unique_ptr<Algebroid> alg;
  std::unique_ptr<ReflectionRep> rep;
  std::unique_ptr<Demazure> dem;

  explicit Workspace(const CoxeterSpec& spec, int gen_cap = 16);
  bool has_rep() const { return dem != nullptr; }
};

namespace verify {

struct Check {
  std::string claim;
  bool ok = true;
  bool advisory = false;  // reported, never fails the suite
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok && !c.advisory) return false;
    return true;
  }
};

struct Caps {
  int deg_cap = 8;
  int search_cap = 12;
  int chain_len = 3;
  int random_triples = 50;
  std::uint64_t seed = 20240801;
  int jobs = 1;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
// Runs one suite ("all" runs every suite that applies to the system).
std::vector<SuiteResult> run(Workspace& ws, const std::string& suite, const Caps& caps);

// Positivity of KL coefficients is asserted only on models where it is a
// theorem for this toolkit: types A and B and products of those.
bool positivity_is_theorem(const CoxeterSpec& spec);

}  // namespace verify
}  // namespace schur

#endif
