#ifndef GOODINV_GOODNESS_HPP
#define GOODINV_GOODNESS_HPP

#include "goodinv/groups.hpp"
#include "goodinv/json_io.hpp"
#include "goodinv/rationalize.hpp"

namespace goodinv {

struct NumericOptions {
  int digits = 60;
  int tol_exponent = 40;  // comparisons at 10^{-tol_exponent}
  long max_den = 1000000;

  BigFloat tolerance() const { return BigFloat::pow10(-tol_exponent, digits); }
};

/// An admissible triplet (g, zeta, q) together with the eigenbasis q-hat
/// (unnormalized, exact) and the graded coordinate change u = Q z-hat.
/// The paper-normalized basis is q-hat_alpha / sqrt(norm_sq[alpha]).
struct AdmissibleFrame {
  GroupPtr group;
  CycMatrix g;
  Cyclotomic zeta;
  std::vector<CycVector> basis;      // q-hat_1..q-hat_n, degree-list order
  std::vector<Cyclotomic> norm_sq;   // hermitian(q-hat, q-hat), real positive
  CycMatrix coord_change;            // columns are q-hat_alpha
  CycMatrix coord_change_inv;

  const CycVector& q() const { return basis[0]; }
  const std::vector<int>& degrees() const { return group->degrees; }
  int rank() const { return static_cast<int>(basis.size()); }
  /// nu_alpha = |q-hat_alpha|, at the requested precision.
  std::vector<BigFloat> norms(int digits) const;
  /// p(u) rewritten in the unnormalized graded coordinates z-hat.
  CycPoly to_graded(const CycPoly& p_in_u) const;
};

/// Builds and validates the frame for a group's cataloged (g, zeta) with the
/// cataloged eigenvectors; recomputes eigenvectors by exact elimination when
/// the catalog does not provide them. Validates g q = zeta^{1-d_alpha} q,
/// regularity of q, and the eigenvalue multiset.
AdmissibleFrame build_frame(const GroupPtr& spec, const CycMatrix& g,
                            const Cyclotomic& zeta,
                            const std::vector<CycVector>* eigenvectors = nullptr);

/// The group's own cataloged frame.
AdmissibleFrame catalog_frame(const GroupPtr& spec);

struct GoodnessCondition {
  int alpha = 0;  // 1-based, paper convention
  Exp multi_index;
  Cyclotomic value;  // exact derivative value at q-hat scale
  bool pass = false;
};

struct GoodnessReport {
  std::vector<GoodnessCondition> conditions;
  std::string jacobian_residual;  // decimal string of the max |J - I| entry
  bool jacobian_ok = false;
  bool pass = false;
};

/// Exact path: every I_alpha^(0) derivative of x_alpha vanishes at q.
/// Numeric path: the Jacobian of x w.r.t. the paper-normalized graded
/// coordinates at q equals the identity within tolerance. `x_graded` are the
/// invariants already written in z-hat coordinates.
GoodnessReport check_goodness_graded(const std::vector<CycPoly>& x_graded,
                                     const std::vector<int>& degrees,
                                     const std::vector<Cyclotomic>& norm_sq,
                                     const NumericOptions& opt);

/// Same, starting from invariants in the ambient u coordinates.
GoodnessReport check_goodness(const std::vector<CycPoly>& x_in_u,
                              const AdmissibleFrame& frame,
                              const NumericOptions& opt);

/// Graded transforms of the cataloged good invariants (construction-aware:
/// power sums and products are rebuilt from transformed ingredients).
std::vector<CycPoly> graded_good_invariants(const GroupSpec& spec,
                                            const AdmissibleFrame& frame);
std::vector<CycPoly> graded_named(const GroupSpec& spec, const AdmissibleFrame& frame,
                                  const std::vector<std::string>& names);

/// Unique good and compatible basic set as combinations of sigma; exact
/// vanishing solve plus numeric compatibility normalization, rationalized
/// and re-verified exactly.
std::vector<CycPoly> solve_good_basis(const GroupPtr& spec, const AdmissibleFrame& frame,
                                      const std::vector<CycPoly>& sigma,
                                      const NumericOptions& opt);

/// x_alpha -> a_1^{-d_alpha+1} a_alpha^{-1} x_alpha.
std::vector<CycPoly> rescale_good_basis(const std::vector<CycPoly>& x,
                                        const std::vector<Cyclotomic>& a,
                                        const std::vector<int>& degrees);

Json goodness_report_json(const GoodnessReport& report);

/// d^|a| p / dz^a evaluated at z-hat = (1, 0, ..., 0), for p homogeneous of
/// total degree `degree` in graded coordinates. Reads off a single stored
/// coefficient.
Cyclotomic derivative_at_qhat(const CycPoly& p, const Exp& a, int degree);

}  // namespace goodinv

#endif
