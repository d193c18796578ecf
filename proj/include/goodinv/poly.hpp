#ifndef GOODINV_POLY_HPP
#define GOODINV_POLY_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "goodinv/linalg.hpp"

namespace goodinv {

using Exp = std::vector<int>;

inline int exp_total(const Exp& e) {
  int t = 0;
  for (int v : e) t += v;
  return t;
}

/// Graded-lex order: total degree first, lex tiebreak. Canonical term order
/// for storage and serialization.
struct GradedLex {
  bool operator()(const Exp& a, const Exp& b) const {
    int da = exp_total(a), db = exp_total(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial; C is Cyclotomic on the exact path or
/// BigComplex on the numeric path. Zero coefficients are never stored.
template <class C>
class MultiPoly {
  int nvars_ = 0;
  std::map<Exp, C, GradedLex> terms_;

  static bool coeff_zero(const C& c) { return c.is_zero(); }

public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const C& c) {
    MultiPoly p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
  }
  static MultiPoly variable(int nvars, int i, int power = 1) {
    MultiPoly p(nvars);
    Exp e(nvars, 0);
    e[i] = power;
    p.add_term(e, C(1));
    return p;
  }

  int nvars() const { return nvars_; }
  int nterms() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, C, GradedLex>& terms() const { return terms_; }

  void add_term(const Exp& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("poly term: exponent length mismatch");
    if (coeff_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (coeff_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exp e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  MultiPoly operator*(const C& s) const {
    MultiPoly r(nvars_);
    if (coeff_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }

  bool operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
      if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(int e) const {
    MultiPoly acc = constant(nvars_, C(1));
    MultiPoly base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      if (e >>= 1) base = base * base;
    }
    return acc;
  }

  MultiPoly derivative(int var, int times = 1) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative: bad variable");
    MultiPoly cur = *this;
    for (int t = 0; t < times; ++t) {
      MultiPoly next(nvars_);
      for (const auto& [e, c] : cur.terms_) {
        if (e[var] == 0) continue;
        Exp d = e;
        --d[var];
        next.add_term(d, c * C(e[var]));
      }
      cur = std::move(next);
    }
    return cur;
  }

  C evaluate(std::span<const C> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("evaluate: point dimension mismatch");
    // Precompute the powers each variable actually reaches.
    std::vector<int> maxe(nvars_, 0);
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], e[i]);
    std::vector<std::vector<C>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      pw[i].resize(maxe[i] + 1, C(1));
      for (int k = 1; k <= maxe[i]; ++k) pw[i][k] = pw[i][k - 1] * point[i];
    }
    C acc(0);
    for (const auto& [e, c] : terms_) {
      C t = c;
      for (int i = 0; i < nvars_; ++i)
        if (e[i]) t = t * pw[i][e[i]];
      acc = acc + t;
    }
    return acc;
  }

  int total_degree() const {
    return terms_.empty() ? -1 : exp_total(terms_.rbegin()->first);
  }

  bool is_homogeneous(int* degree_out = nullptr) const {
    if (terms_.empty()) return true;
    int d = exp_total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (exp_total(e) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
  }

  bool is_weighted_homogeneous(const std::vector<int>& weights, int target) const {
    for (const auto& [e, c] : terms_) {
      long w = 0;
      for (int i = 0; i < nvars_; ++i) w += static_cast<long>(e[i]) * weights[i];
      if (w != target) return false;
    }
    return true;
  }

  /// p with variables renamed through `map` into a space of `new_nvars`
  /// variables; every exponent must land on a mapped slot.
  MultiPoly reindex(const std::vector<int>& map, int new_nvars) const {
    MultiPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
      Exp ne(new_nvars, 0);
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (map[i] < 0) throw std::invalid_argument("reindex: unmapped variable in support");
        ne[map[i]] = e[i];
      }
      r.add_term(ne, c);
    }
    return r;
  }

  /// Per-variable scaling x_i -> s_i x_i.
  MultiPoly scale_vars(std::span<const C> s) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      C f = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) f = f * s[i];
      r.add_term(e, f);
    }
    return r;
  }
};

using CycPoly = MultiPoly<Cyclotomic>;

/// Multi-indices a with sum a_i * degrees_i = target and sum a_i >= min_total.
struct IndexSet {
  std::vector<int> degrees;
  int target = 0;
  int min_total = 0;
  std::vector<Exp> entries;
};

IndexSet weighted_monomials(const std::vector<int>& degrees, int target, int min_total);

/// (c1 v1 + ... + cn vn)^m expanded by the multinomial theorem.
CycPoly linear_form_power(const std::vector<Cyclotomic>& coeffs, int m);

/// Substitution u = A z: column j of A holds the u-coordinates of the j-th
/// new basis vector, i.e. u_i = sum_j A[i][j] z_j.
CycPoly linear_substitute(const CycPoly& p, const CycMatrix& a);

/// sum_b coeffs[b] * prod_i sigma_i^{b_i}, expanded.
CycPoly compose_invariants(const std::map<Exp, Cyclotomic, GradedLex>& coeffs,
                           std::span<const CycPoly> sigma);

/// Unique coefficient map with compose_invariants(result, sigma) == p, found
/// by an exact linear solve over monomial coefficients. Throws when p is not
/// in the subring generated by sigma.
std::map<Exp, Cyclotomic, GradedLex> decompose_in_generators(
    const CycPoly& p, std::span<const CycPoly> sigma, const std::vector<int>& degrees);

/// Numeric evaluation of an exact polynomial.
BigComplex evaluate_embedded(const CycPoly& p, std::span<const BigComplex> point, int digits);

}  // namespace goodinv

#endif
