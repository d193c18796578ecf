#ifndef GOODINV_POTENTIAL_HPP
#define GOODINV_POTENTIAL_HPP

#include <array>

#include "goodinv/goodness.hpp"

namespace goodinv {

/// The n-tuple of invariant polynomials in the good invariants x whose
/// second derivatives give the multiplication's structure constants.
struct PotentialField {
  GroupPtr group;
  std::vector<CycPoly> components;  // in x-variables
  bool duality = false;
  Rat z1_at_q = Rat(1);  // 1 in the paper-normalized compatible frame
};

/// Coefficients from the I_gamma^(1) derivative formula, evaluated exactly
/// at q-hat scale and carried to the paper normalization numerically, then
/// rationalized and certified by an exact square identity.
PotentialField potential_vector_field(const std::vector<CycPoly>& x_graded,
                                      const GroupPtr& group,
                                      const std::vector<Cyclotomic>& norm_sq,
                                      const NumericOptions& opt);

/// Convenience: catalog good set of the group's own frame.
PotentialField catalog_potential_field(const GroupPtr& group);

/// True iff dF/dx_{pairing[gamma]} == components[gamma] exactly for all
/// gamma; `pairing` is 0-based and must be an involution.
bool verify_potential_function(const CycPoly& f, const PotentialField& p,
                               const std::vector<int>& pairing);

struct AssociativityResult {
  bool associative = false;
  // First violating (alpha, beta, gamma, delta), 1-based, when inassociative.
  std::optional<std::array<int, 4>> counterexample;
  CycPoly difference;  // the nonzero difference polynomial at the witness
};

/// Polynomial identity test of sum_e C_ab^e C_eg^d == sum_e C_bg^e C_ae^d
/// with C_ab^g = d2 G_gamma / dx_alpha dx_beta, by exact expansion.
AssociativityResult associativity_check(const PotentialField& p);

Json potential_json(const PotentialField& p, const AssociativityResult* assoc = nullptr);

}  // namespace goodinv

#endif
