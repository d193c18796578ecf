#ifndef GOODINV_REDUCTION_HPP
#define GOODINV_REDUCTION_HPP

#include "goodinv/goodness.hpp"

namespace goodinv {

/// The delta-reduction data: E = V(g^{d1/delta}, zeta^{d1/delta}), index sets,
/// and the induced admissible frame on E. In the surviving z-hat coordinates
/// the child frame's coordinate change is the identity and pi_E(g) is
/// diagonal.
struct ReductionContext {
  const AdmissibleFrame* parent = nullptr;
  int delta = 1;
  std::vector<int> i_set;   // 0-based surviving indices
  std::vector<int> ic_set;
  std::vector<int> child_degrees;
  std::vector<Cyclotomic> child_norm_sq;
  std::vector<int> var_map;  // parent var index -> child var index or -1
  bool coordinate_subspace = false;  // the m | n+1 monomial special case
};

ReductionContext make_context(const AdmissibleFrame& frame, int delta);
/// The G(m,m,n+1), m | n+1 special case: E = span(e_1..e_n) by fiat,
/// i-set {1..n}.
ReductionContext make_coordinate_context(const AdmissibleFrame& frame);

/// Restriction homomorphism: kill the non-surviving graded coordinates and
/// reindex onto the child variables. Input and output are in graded
/// coordinates.
CycPoly phi_E(const CycPoly& p_graded, const ReductionContext& ctx);

/// phi_E of the parent good invariants with child-goodness verification;
/// also asserts the i^c images vanish. Results are in child graded
/// coordinates.
std::vector<CycPoly> reduce_good_basis(const std::vector<CycPoly>& x_graded,
                                       const ReductionContext& ctx,
                                       const NumericOptions& opt,
                                       GoodnessReport* child_report = nullptr);

/// phi_E on a potential vector field in x-space: components indexed by i(δ)
/// with the non-surviving x set to zero, re-indexed to the child's x
/// variables. Components indexed by i^c(δ) are asserted to vanish.
std::vector<CycPoly> reduce_potential(const std::vector<CycPoly>& components_in_x,
                                      const ReductionContext& ctx);

/// One verified generator correspondence of a cataloged reduction edge.
struct WitnessOutcome {
  bool preserves_E = false;
  bool matches_child = false;
};

/// Exact check that each witness element preserves E and restricts, through
/// the cataloged basis map, to the claimed child generator.
bool verify_witness(const AdmissibleFrame& parent, const ReductionContext& ctx,
                    const ReductionEdge& edge, const GroupPtr& child,
                    std::vector<WitnessOutcome>* outcomes = nullptr);

struct InvariantMapEntry {
  int parent_alpha = 0;  // 1-based
  int child_beta = 0;    // 1-based
  Cyclotomic factor;     // paper-level phase c_alpha
  bool exact = false;
};

/// Full verification of a cataloged reduction edge: witnesses, invariant
/// mapping with the x-change phases, potential mapping with the pvf-change
/// phases, and child goodness.
struct ReductionReport {
  std::string parent, target;
  int delta = 0;
  std::vector<int> i_set_1based;
  std::vector<InvariantMapEntry> mapped;
  std::vector<int> zeroed_1based;
  bool invariants_ok = false;
  bool potential_ok = false;
  bool witnesses_ok = false;
  bool child_goodness_ok = false;
  std::string witness_status;  // "verified" or "degrees-match-only"
  GoodnessReport child_goodness;
  bool pass = false;
};

ReductionReport verify_reduction_edge(const GroupPtr& parent, const ReductionEdge& edge,
                                      const std::string& catalog_dir,
                                      const NumericOptions& opt);

Json reduction_report_json(const ReductionReport& r);

/// Prop. "lift": good basic invariants of G(m,1,n) lifted to G(m,m,n+1),
/// including x_{n+1} = (sqrt n)^n zeta_{nm}^{-n(n+1)/2} sigma_{n+1}.
/// Returns the lifted set in the u coordinates of G(m,m,n+1) and verifies
/// goodness on the lifted frame.
std::vector<CycPoly> lift_good_basis(int m, int n,
                                     const std::vector<std::map<Exp, Cyclotomic, GradedLex>>& coeffs,
                                     const NumericOptions& opt,
                                     GoodnessReport* report = nullptr);

/// One row of the divisor walk.
struct SequenceEntry {
  int delta = 0;
  std::vector<int> surviving_degrees;
  std::vector<std::string> candidates;
  std::string witness_status;  // "verified", "degrees-match-only"
  std::string note;
};

std::vector<SequenceEntry> reduction_sequence(const GroupPtr& spec,
                                              const std::string& catalog_dir,
                                              const NumericOptions& opt);

}  // namespace goodinv

#endif
