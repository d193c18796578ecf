#include "goodinv/poly.hpp"

#include <algorithm>

namespace goodinv {

namespace {

void enumerate_weighted(const std::vector<int>& degrees, int var, int rem,
                        Exp& cur, std::vector<Exp>& out) {
  if (var == static_cast<int>(degrees.size())) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  for (int k = 0; k * degrees[var] <= rem; ++k) {
    cur[var] = k;
    enumerate_weighted(degrees, var + 1, rem - k * degrees[var], cur, out);
  }
  cur[var] = 0;
}

}  // namespace

IndexSet weighted_monomials(const std::vector<int>& degrees, int target, int min_total) {
  for (int d : degrees)
    if (d <= 0) throw std::invalid_argument("weighted_monomials: degrees must be positive");
  if (target < 0) throw std::invalid_argument("weighted_monomials: negative target");
  IndexSet set;
  set.degrees = degrees;
  set.target = target;
  set.min_total = min_total;
  Exp cur(degrees.size(), 0);
  enumerate_weighted(degrees, 0, target, cur, set.entries);
  std::erase_if(set.entries, [&](const Exp& e) { return exp_total(e) < min_total; });
  std::sort(set.entries.begin(), set.entries.end(), GradedLex{});
  return set;
}

CycPoly linear_form_power(const std::vector<Cyclotomic>& coeffs, int m) {
  int n = static_cast<int>(coeffs.size());
  CycPoly out(n);
  if (m == 0) {
    out.add_term(Exp(n, 0), Cyclotomic(1));
    return out;
  }
  std::vector<std::vector<Cyclotomic>> pw(n);
  for (int i = 0; i < n; ++i) {
    pw[i].push_back(Cyclotomic(1));
    if (!coeffs[i].is_zero())
      for (int k = 1; k <= m; ++k) pw[i].push_back(pw[i][k - 1] * coeffs[i]);
  }
  std::vector<std::vector<Int>> binom(m + 1, std::vector<Int>(m + 1, Int(0)));
  for (int i = 0; i <= m; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Int(0));
  }
  Exp e(n, 0);
  // DFS over exponent tuples, carrying the partial coefficient product and
  // the partial multinomial factor.
  auto dfs = [&](auto&& self, int var, int rem, const Cyclotomic& partial,
                 const Int& mult) -> void {
    if (var == n) {
      if (rem == 0) out.add_term(e, partial * Rat(mult));
      return;
    }
    if (coeffs[var].is_zero()) {
      e[var] = 0;
      self(self, var + 1, rem, partial, mult);
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      e[var] = k;
      self(self, var + 1, rem - k, partial * pw[var][k], mult * binom[rem][k]);
    }
    e[var] = 0;
  };
  dfs(dfs, 0, m, Cyclotomic(1), Int(1));
  return out;
}

CycPoly linear_substitute(const CycPoly& p, const CycMatrix& a) {
  if (a.rows != p.nvars() || a.cols != a.rows)
    throw std::invalid_argument("linear_substitute: matrix side must equal nvars");
  int n = p.nvars();
  // Row form i: image of variable u_i under u = A z.
  std::vector<std::vector<Cyclotomic>> rows(n, std::vector<Cyclotomic>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
  std::vector<std::vector<CycPoly>> powers(n);  // powers[i][k] = L_i^k, lazy
  auto power_of = [&](int i, int k) -> const CycPoly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(CycPoly::constant(n, Cyclotomic(1)));
      CycPoly lin(n);
      for (int j = 0; j < n; ++j) {
        Exp ej(n, 0);
        ej[j] = 1;
        lin.add_term(ej, rows[i][j]);
      }
      cache.push_back(lin);
    }
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };
  CycPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    CycPoly term = CycPoly::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[i]) term = term * power_of(i, e[i]);
    out += term;
  }
  return out;
}

CycPoly compose_invariants(const std::map<Exp, Cyclotomic, GradedLex>& coeffs,
                           std::span<const CycPoly> sigma) {
  if (sigma.empty()) throw std::invalid_argument("compose_invariants: empty generator list");
  int nu = sigma[0].nvars();
  int ns = static_cast<int>(sigma.size());
  std::vector<std::vector<CycPoly>> powers(ns);
  auto power_of = [&](int i, int k) -> const CycPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(CycPoly::constant(nu, Cyclotomic(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * sigma[i]);
    return cache[k];
  };
  CycPoly out(nu);
  for (const auto& [b, c] : coeffs) {
    if (static_cast<int>(b.size()) != ns)
      throw std::invalid_argument("compose_invariants: tuple length mismatch");
    CycPoly term = CycPoly::constant(nu, c);
    for (int i = 0; i < ns; ++i)
      if (b[i]) term = term * power_of(i, b[i]);
    out += term;
  }
  return out;
}

std::map<Exp, Cyclotomic, GradedLex> decompose_in_generators(
    const CycPoly& p, std::span<const CycPoly> sigma, const std::vector<int>& degrees) {
  if (sigma.size() != degrees.size())
    throw std::invalid_argument("decompose_in_generators: degree list mismatch");
  int deg = 0;
  if (!p.is_homogeneous(&deg))
    throw std::domain_error("decompose_in_generators: input not homogeneous");
  if (p.is_zero()) return {};
  IndexSet cands = weighted_monomials(degrees, deg, 0);
  if (cands.entries.empty())
    throw std::domain_error("decompose_in_generators: no candidate products at this degree");
  std::vector<CycPoly> prods;
  prods.reserve(cands.entries.size());
  for (const Exp& b : cands.entries) {
    std::map<Exp, Cyclotomic, GradedLex> single;
    single.emplace(b, Cyclotomic(1));
    prods.push_back(compose_invariants(single, sigma));
  }
  // Union of monomial supports indexes the rows of the linear system.
  std::map<Exp, int, GradedLex> row_index;
  auto note = [&](const CycPoly& q) {
    for (const auto& [e, c] : q.terms())
      row_index.emplace(e, static_cast<int>(row_index.size()));
  };
  for (const CycPoly& q : prods) note(q);
  note(p);
  int nrows = static_cast<int>(row_index.size());
  int ncols = static_cast<int>(prods.size());
  CycMatrix A(nrows, ncols);
  CycVector b(nrows);
  for (int j = 0; j < ncols; ++j)
    for (const auto& [e, c] : prods[j].terms()) A.at(row_index[e], j) = c;
  for (const auto& [e, c] : p.terms()) b.e[row_index[e]] = c;
  std::optional<CycVector> x = solve(A, b);
  if (!x)
    throw std::domain_error("decompose_in_generators: not in the invariant subring");
  std::map<Exp, Cyclotomic, GradedLex> result;
  for (int j = 0; j < ncols; ++j)
    if (!x->e[j].is_zero()) result.emplace(cands.entries[j], x->e[j]);
  // Re-compose to certify, which also covers underdetermined corner cases.
  if (compose_invariants(result, sigma) != p)
    throw std::domain_error("decompose_in_generators: residual nonzero");
  return result;
}

BigComplex evaluate_embedded(const CycPoly& p, std::span<const BigComplex> point, int digits) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw std::invalid_argument("evaluate_embedded: point dimension mismatch");
  int n = p.nvars();
  std::vector<int> maxe(n, 0);
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < n; ++i) maxe[i] = std::max(maxe[i], e[i]);
  std::vector<std::vector<BigComplex>> pw(n);
  for (int i = 0; i < n; ++i) {
    pw[i].resize(maxe[i] + 1, BigComplex::one(digits));
    for (int k = 1; k <= maxe[i]; ++k) pw[i][k] = pw[i][k - 1] * point[i];
  }
  BigComplex acc = BigComplex::zero(digits);
  for (const auto& [e, c] : p.terms()) {
    BigComplex t = c.embed(digits);
    for (int i = 0; i < n; ++i)
      if (e[i]) t = t * pw[i][e[i]];
    acc = acc + t;
  }
  return acc;
}

}  // namespace goodinv
