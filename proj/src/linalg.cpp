#include "goodinv/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace goodinv {

CycVector CycVector::unit(int dim, int i) {
  CycVector v(dim);
  for (int k = 0; k < dim; ++k) v.e[k] = Cyclotomic(static_cast<long>(k == i));
  return v;
}

CycVector CycVector::operator+(const CycVector& o) const {
  CycVector r(dim());
  for (int i = 0; i < dim(); ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

CycVector CycVector::operator-(const CycVector& o) const {
  CycVector r(dim());
  for (int i = 0; i < dim(); ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

CycVector CycVector::operator*(const Cyclotomic& s) const {
  CycVector r(dim());
  for (int i = 0; i < dim(); ++i) r.e[i] = e[i] * s;
  return r;
}

bool CycVector::operator==(const CycVector& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (e[i] != o.e[i]) return false;
  return true;
}

bool CycVector::is_zero() const {
  for (const Cyclotomic& c : e)
    if (!c.is_zero()) return false;
  return true;
}

CycVector CycVector::line_normal() const {
  for (int i = 0; i < dim(); ++i) {
    if (!e[i].is_zero()) {
      Cyclotomic inv = e[i].inverse();
      CycVector r(dim());
      for (int k = 0; k < dim(); ++k) r.e[k] = e[k] * inv;
      return r;
    }
  }
  return *this;
}

std::string CycVector::key() const {
  std::string out;
  for (const Cyclotomic& c : e) {
    out += c.key();
    out += ';';
  }
  return out;
}

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product: shape mismatch");
  CycMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Cyclotomic& lhs = at(i, k);
      if (lhs.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += lhs * o.at(k, j);
      }
    }
  return r;
}

CycVector CycMatrix::operator*(const CycVector& v) const {
  if (cols != v.dim()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  CycVector r(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (at(i, j).is_zero() || v.e[j].is_zero()) continue;
      r.e[i] += at(i, j) * v.e[j];
    }
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  CycMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

CycMatrix CycMatrix::operator*(const Cyclotomic& s) const {
  CycMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

CycMatrix CycMatrix::pow(long e) const {
  if (rows != cols) throw std::invalid_argument("matrix power: square matrix required");
  if (e < 0) return inverse(*this).pow(-e);
  CycMatrix acc = identity(rows);
  CycMatrix base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

CycMatrix CycMatrix::conj_transpose() const {
  CycMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

bool CycMatrix::is_identity() const {
  if (rows != cols) return false;
  Cyclotomic one(1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (i == j ? at(i, j) != one : !at(i, j).is_zero()) return false;
    }
  return true;
}

CycMatrix CycMatrix::to_order(int n) const {
  CycMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i].to_order(n);
  return r;
}

std::string CycMatrix::key() const {
  std::string out = std::to_string(rows) + "x" + std::to_string(cols) + ":";
  for (const Cyclotomic& c : a) {
    out += c.key();
    out += ';';
  }
  return out;
}

Cyclotomic hermitian(const CycVector& v, const CycVector& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("hermitian: dimension mismatch");
  Cyclotomic acc;
  for (int i = 0; i < v.dim(); ++i) {
    if (v.e[i].is_zero() || w.e[i].is_zero()) continue;
    acc += v.e[i] * w.e[i].conj();
  }
  return acc;
}

CycMatrix reflection(const CycVector& root, const Cyclotomic& lambda) {
  if (root.is_zero()) throw std::invalid_argument("reflection: zero root vector");
  if (lambda == Cyclotomic(1)) throw std::invalid_argument("reflection: eigenvalue 1");
  Cyclotomic vv = hermitian(root, root);
  Cyclotomic factor = (Cyclotomic(1) - lambda) / vv;
  int n = root.dim();
  CycMatrix m = CycMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // (w, v) = sum w_j conj(v_j), so column j carries conj(root_j).
      m.at(i, j) -= factor * root.e[i] * root.e[j].conj();
    }
  return m;
}

std::pair<CycVector, Cyclotomic> reflection_data(const CycMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("reflection_data: not square");
  CycMatrix d = m - CycMatrix::identity(m.rows);
  if (rank(d) != 1) throw std::invalid_argument("reflection_data: rank(A - I) != 1");
  for (int j = 0; j < d.cols; ++j) {
    CycVector col(d.rows);
    bool nonzero = false;
    for (int i = 0; i < d.rows; ++i) {
      col.e[i] = d.at(i, j);
      nonzero = nonzero || !col.e[i].is_zero();
    }
    if (!nonzero) continue;
    CycVector root = col.line_normal();
    // Nontrivial eigenvalue from M root = lambda root.
    CycVector image = m * root;
    for (int i = 0; i < root.dim(); ++i) {
      if (!root.e[i].is_zero()) return {root, image.e[i] / root.e[i]};
    }
  }
  throw std::invalid_argument("reflection_data: identity matrix");
}

namespace {

struct Echelon {
  CycMatrix m;                // reduced via fraction-free elimination
  std::vector<int> pivot_col; // per pivot row
};

// Bareiss-style fraction-free elimination; divisions by the previous pivot
// are exact, which keeps intermediate cyclotomic coefficients small.
Echelon echelon_form(CycMatrix m) {
  Echelon ech;
  std::vector<int> pivots;
  Cyclotomic prev(1);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = Cyclotomic();
    }
    prev = m.at(r, c);
    pivots.push_back(c);
    ++r;
  }
  ech.m = std::move(m);
  ech.pivot_col = std::move(pivots);
  return ech;
}

}  // namespace

int rank(const CycMatrix& m) {
  return static_cast<int>(echelon_form(m).pivot_col.size());
}

std::vector<CycVector> kernel(const CycMatrix& m) {
  Echelon ech = echelon_form(m);
  int n = m.cols;
  std::vector<bool> is_pivot(n, false);
  for (int c : ech.pivot_col) is_pivot[c] = true;
  std::vector<CycVector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    CycVector v(n);
    v.e[free] = Cyclotomic(1);
    // Back-substitute through the pivot rows.
    for (int r = static_cast<int>(ech.pivot_col.size()) - 1; r >= 0; --r) {
      int pc = ech.pivot_col[r];
      Cyclotomic acc;
      for (int j = pc + 1; j < n; ++j) {
        if (ech.m.at(r, j).is_zero() || v.e[j].is_zero()) continue;
        acc += ech.m.at(r, j) * v.e[j];
      }
      v.e[pc] = -acc / ech.m.at(r, pc);
    }
    basis.push_back(v.line_normal());
  }
  return basis;
}

std::vector<CycVector> eigenspace(const CycMatrix& m, const Cyclotomic& lambda) {
  if (m.rows != m.cols) throw std::invalid_argument("eigenspace: not square");
  CycMatrix shifted = m;
  for (int i = 0; i < m.rows; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
  return kernel(shifted);
}

CycMatrix inverse(const CycMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  int n = m.rows;
  // Augment with the identity and eliminate.
  CycMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Cyclotomic(1);
  }
  Echelon ech = echelon_form(std::move(aug));
  if (static_cast<int>(ech.pivot_col.size()) < n || ech.pivot_col[n - 1] >= n)
    throw std::domain_error("inverse: singular matrix");
  CycMatrix inv(n, n);
  for (int col = 0; col < n; ++col) {
    for (int r = n - 1; r >= 0; --r) {
      Cyclotomic acc = ech.m.at(r, n + col);
      for (int j = r + 1; j < n; ++j) acc -= ech.m.at(r, j) * inv.at(j, col);
      inv.at(r, col) = acc / ech.m.at(r, r);
    }
  }
  return inv;
}

int matrix_order(const CycMatrix& m, int cap) {
  if (m.rows != m.cols) throw std::invalid_argument("matrix_order: not square");
  CycMatrix acc = m;
  for (int k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  throw std::domain_error("matrix_order: cap exceeded");
}

std::optional<CycVector> solve(const CycMatrix& a, const CycVector& b) {
  if (a.rows != b.dim()) throw std::invalid_argument("solve: shape mismatch");
  CycMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b.e[i];
  }
  Echelon ech = echelon_form(std::move(aug));
  // Inconsistent when a pivot falls in the augmented column.
  if (!ech.pivot_col.empty() && ech.pivot_col.back() == a.cols) return std::nullopt;
  CycVector x(a.cols);
  for (int r = static_cast<int>(ech.pivot_col.size()) - 1; r >= 0; --r) {
    int pc = ech.pivot_col[r];
    Cyclotomic acc = ech.m.at(r, a.cols);
    for (int j = pc + 1; j < a.cols; ++j) {
      if (ech.m.at(r, j).is_zero() || x.e[j].is_zero()) continue;
      acc -= ech.m.at(r, j) * x.e[j];
    }
    x.e[pc] = acc / ech.m.at(r, pc);
  }
  return x;
}

}  // namespace goodinv
