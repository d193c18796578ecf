#ifndef GOODINV_GROUPS_HPP
#define GOODINV_GROUPS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "goodinv/poly.hpp"

namespace goodinv {

struct RootEntry {
  CycVector root;
  Cyclotomic eigenvalue;  // nontrivial eigenvalue of the reflection
};

/// How a named catalog polynomial is built. Constructions are kept so that
/// invariance checks and graded-coordinate transforms can substitute into
/// the ingredients instead of the expanded polynomial.
struct PolyRecipe {
  enum class Kind { Explicit, PowerSum, ElemSym, Combo };
  Kind kind = Kind::Explicit;
  CycPoly expanded;                 // always populated after load
  std::string forms_ref;            // PowerSum: named linear-form list
  int power = 0;                    // PowerSum
  std::vector<std::string> parts;   // ElemSym/Combo: named ingredient polys
  int esym_k = 0;                   // ElemSym
  Cyclotomic scale;                 // ElemSym prefactor
  std::map<Exp, Cyclotomic, GradedLex> combo_terms;  // Combo coefficients
};

struct FrameData {
  CycMatrix g;
  Cyclotomic zeta;                   // primitive d1-th root of unity
  std::vector<CycVector> eigenvectors;  // unnormalized q-hat, ordered by degree list
  bool present = false;
};

struct ReductionWitness {
  // Parent element: either a product of reflections s(root, eigenvalue)
  // or a power of the frame element g.
  struct Factor {
    bool is_g_power = false;
    int g_power = 1;
    RootEntry refl;
  };
  std::vector<Factor> parent_word;
  std::vector<int> child_word;  // indices into the target group's generators
};

struct ReductionEdge {
  int delta = 0;
  std::string target;
  struct Pair {
    int parent = 0;       // 0-based index into parent degrees
    int child = 0;        // 0-based index into child degrees
    Cyclotomic phase;     // a_alpha of the paper-normalized basis map
    Cyclotomic rel;       // exact d_alpha / d_alpha0 scale ratio
  };
  std::vector<Pair> pairs;
  std::optional<Cyclotomic> rel0;  // exact d_alpha0 itself, when cyclotomic
  std::vector<ReductionWitness> witnesses;
};

struct GroupSpec {
  std::string name;
  int rank = 0;
  int field_order = 1;
  std::vector<int> degrees;  // paper order (descending, except G(m,m,n+1) tail)
  bool duality = false;
  std::vector<int> codegrees;  // derived from duality, or supplied

  std::vector<CycMatrix> generators;
  std::vector<RootEntry> roots;      // seed or complete reflection data
  bool roots_complete = false;       // true: `roots` lists every line
  std::optional<int> expected_reflection_lines;

  std::map<std::string, std::vector<std::vector<Cyclotomic>>> forms;  // named linear-form lists
  std::vector<std::pair<std::string, PolyRecipe>> named_polys;
  std::vector<std::string> basic_invariant_names;
  std::vector<std::string> good_invariant_names;

  FrameData frame;

  std::vector<CycPoly> potential_components;   // in x-variables
  std::optional<CycPoly> potential_function;   // in x-variables
  std::vector<int> potential_pairing;          // 0-based; components = dF/dx_{pairing[g]}

  std::vector<ReductionEdge> reductions;

  // For monomial families: the construction parameters.
  struct MonomialParams {
    int m = 0, p = 0, n = 0;  // G(m, p, n_rank) with p in {1, m}
  };
  std::optional<MonomialParams> monomial;

  const CycPoly& named(const std::string& name) const;
  std::vector<CycPoly> basic_invariants() const;
  std::vector<CycPoly> good_invariants() const;

  int a_count(int d) const;                  // #{alpha : d | d_alpha}
  std::optional<int> b_count(int d) const;   // #{alpha : d | d_alpha*}, needs codegrees
  std::vector<int> i_set(int delta) const;   // 0-based indices with delta | d_alpha
  std::vector<int> ic_set(int delta) const;
  Int order_product() const;                 // prod d_alpha
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

/// G(m,1,n) or G(m,m,n) by the standard monomial construction, with the
/// admissible-frame data and sigma basic invariants attached.
GroupPtr monomial_group(int m, int p, int rank);

/// Cyclic group mu_d acting on C by the primitive d-th root.
GroupPtr cyclic_group(int d);

/// Loads a cataloged primitive group (G35, G28, G25, G8, G5, G31, G9, G10),
/// mu(d), or a monomial family G(m,p,n); validates all catalog invariants.
GroupPtr catalog_group(const std::string& name, const std::string& catalog_dir);

/// The eight cataloged primitive group names, in file order.
const std::vector<std::string>& primitive_catalog_names();

struct ReflectionSet {
  struct Entry {
    CycVector line;        // canonical representative (first nonzero = 1)
    Cyclotomic eigenvalue;
  };
  std::vector<Entry> entries;
  int distinct_lines = 0;
};

/// Closure of the generator reflections under conjugation, merged with the
/// cataloged root list, deduplicated by (line, eigenvalue). Throws past cap.
ReflectionSet reflections(const GroupSpec& spec, int cap = 5000);

/// True iff hermitian(q, root) != 0 for every reflection line.
bool is_regular_vector(const CycVector& q, const ReflectionSet& refl);

/// Exact invariance of p under every generator. When `root_hint` data exists
/// the substitution uses the rank-one update form of a reflection.
bool is_invariant(const CycPoly& p, const GroupSpec& spec);

/// p composed with a single reflection, via the rank-one Taylor expansion
/// p(u + c * l(u) v); much faster than generic substitution for large p.
CycPoly substitute_reflection(const CycPoly& p, const CycVector& root,
                              const Cyclotomic& lambda);

/// BFS closure of the generators, up to cap elements. Returns the order when
/// the closure completes, nothing when the cap policy skips the check, and
/// throws when the closure exceeds the cap inconsistently with prod(degrees).
std::optional<long> group_order_check(const GroupSpec& spec, long cap = 5000);

}  // namespace goodinv

#endif
