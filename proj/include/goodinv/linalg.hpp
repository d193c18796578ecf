#ifndef GOODINV_LINALG_HPP
#define GOODINV_LINALG_HPP

#include <optional>
#include <vector>

#include "goodinv/cyclotomic.hpp"

namespace goodinv {

struct CycVector {
  std::vector<Cyclotomic> e;

  CycVector() = default;
  explicit CycVector(int dim) : e(dim) {}
  explicit CycVector(std::vector<Cyclotomic> v) : e(std::move(v)) {}
  static CycVector unit(int dim, int i);

  int dim() const { return static_cast<int>(e.size()); }
  Cyclotomic& operator[](int i) { return e[i]; }
  const Cyclotomic& operator[](int i) const { return e[i]; }

  CycVector operator+(const CycVector& o) const;
  CycVector operator-(const CycVector& o) const;
  CycVector operator*(const Cyclotomic& s) const;
  bool operator==(const CycVector& o) const;
  bool is_zero() const;
  /// Scale so the first nonzero entry is 1; canonical line representative.
  CycVector line_normal() const;
  std::string key() const;
};

struct CycMatrix {
  int rows = 0, cols = 0;
  std::vector<Cyclotomic> a;  // row-major

  CycMatrix() = default;
  CycMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static CycMatrix identity(int n);

  Cyclotomic& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Cyclotomic& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycVector operator*(const CycVector& v) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator*(const Cyclotomic& s) const;
  bool operator==(const CycMatrix& o) const;
  CycMatrix pow(long e) const;
  CycMatrix conj_transpose() const;
  bool is_identity() const;
  /// All entries re-expressed in Q(zeta_n); canonicalizes hash keys.
  CycMatrix to_order(int n) const;
  std::string key() const;
};

/// Standard Hermitian product (v, w) = sum v_i conj(w_i).
Cyclotomic hermitian(const CycVector& v, const CycVector& w);

/// Reflection s(v, lambda): w -> w - (1 - lambda) (w,v)/(v,v) v.
CycMatrix reflection(const CycVector& root, const Cyclotomic& lambda);

/// Root line and nontrivial eigenvalue of a reflection matrix
/// (rank(A - I) must be 1); root spans the image of A - I.
std::pair<CycVector, Cyclotomic> reflection_data(const CycMatrix& m);

/// Exact basis of the null space, fraction-free elimination.
std::vector<CycVector> kernel(const CycMatrix& m);

/// Exact basis of ker(M - lambda I).
std::vector<CycVector> eigenspace(const CycMatrix& m, const Cyclotomic& lambda);

int rank(const CycMatrix& m);
CycMatrix inverse(const CycMatrix& m);  // throws when singular

/// Least k <= cap with M^k = I.
int matrix_order(const CycMatrix& m, int cap);

/// Solve A x = b exactly; nothing when inconsistent. When the system is
/// underdetermined, free variables are set to zero.
std::optional<CycVector> solve(const CycMatrix& a, const CycVector& b);

}  // namespace goodinv

#endif
