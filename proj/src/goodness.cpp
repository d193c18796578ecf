#include "goodinv/goodness.hpp"

#include <map>
#include <stdexcept>

namespace goodinv {

Cyclotomic derivative_at_qhat(const CycPoly& p, const Exp& a, int degree) {
  int n = p.nvars();
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("derivative_at_qhat: index length mismatch");
  // Only the monomial with b_i = a_i (i >= 2) and b_1 = degree - sum survives.
  Exp b(n);
  int tail = 0;
  for (int i = 1; i < n; ++i) {
    b[i] = a[i];
    tail += a[i];
  }
  b[0] = degree - tail;
  if (b[0] < a[0] || b[0] < 0) return Cyclotomic(0);
  Cyclotomic coef = p.coeff(b);
  if (coef.is_zero()) return coef;
  Rat factor(1);
  for (int k = 0; k < a[0]; ++k) factor *= (b[0] - k);  // falling factorial
  for (int i = 1; i < n; ++i)
    for (int k = 2; k <= a[i]; ++k) factor *= k;
  return coef * factor;
}

std::vector<BigFloat> AdmissibleFrame::norms(int digits) const {
  std::vector<BigFloat> out;
  out.reserve(norm_sq.size());
  for (const Cyclotomic& nsq : norm_sq) {
    BigComplex v = nsq.embed(digits);
    out.push_back(v.re.sqrt());
  }
  return out;
}

CycPoly AdmissibleFrame::to_graded(const CycPoly& p_in_u) const {
  return linear_substitute(p_in_u, coord_change);
}

AdmissibleFrame build_frame(const GroupPtr& spec, const CycMatrix& g,
                            const Cyclotomic& zeta,
                            const std::vector<CycVector>* eigenvectors) {
  AdmissibleFrame f;
  f.group = spec;
  f.g = g;
  f.zeta = zeta;
  int n = spec->rank;
  int d1 = spec->degrees[0];
  if (zeta.multiplicative_order(2 * d1 + 1) != d1)
    throw std::invalid_argument("build_frame: zeta is not a primitive d1-th root");

  std::vector<Cyclotomic> lambda;
  for (int a = 0; a < n; ++a) lambda.push_back(zeta.pow(1 - spec->degrees[a]));

  if (eigenvectors) {
    if (static_cast<int>(eigenvectors->size()) != n)
      throw std::invalid_argument("build_frame: eigenvector count mismatch");
    f.basis = *eigenvectors;
    for (int a = 0; a < n; ++a)
      if (!(g * f.basis[a] == f.basis[a] * lambda[a]))
        throw std::invalid_argument("build_frame: supplied eigenvector " +
                                    std::to_string(a + 1) + " fails g q = zeta^(1-d) q");
  } else {
    // Eigenvalue multiset check plus exact eigenspaces.
    std::map<std::string, std::vector<int>> groups;
    for (int a = 0; a < n; ++a) groups[lambda[a].key()].push_back(a);
    f.basis.assign(n, CycVector(n));
    for (const auto& [key, idxs] : groups) {
      std::vector<CycVector> space = eigenspace(g, lambda[idxs[0]]);
      if (space.size() != idxs.size())
        throw std::domain_error("build_frame: eigenspace dimension " +
                                std::to_string(space.size()) + " != multiplicity " +
                                std::to_string(idxs.size()));
      if (idxs.size() > 1)
        throw std::domain_error(
            "build_frame: repeated eigenvalue needs an explicit cataloged basis");
      f.basis[idxs[0]] = space[0];
    }
  }

  ReflectionSet refl = reflections(*spec);
  if (!is_regular_vector(f.basis[0], refl))
    throw std::domain_error("build_frame: no regular eigenvector for zeta");

  for (const CycVector& q : f.basis) f.norm_sq.push_back(hermitian(q, q));
  f.coord_change = CycMatrix(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) f.coord_change.at(i, j) = f.basis[j].e[i];
  f.coord_change_inv = inverse(f.coord_change);
  return f;
}

AdmissibleFrame catalog_frame(const GroupPtr& spec) {
  if (!spec->frame.present)
    throw std::invalid_argument("group " + spec->name + " has no cataloged frame");
  return build_frame(spec, spec->frame.g, spec->frame.zeta, &spec->frame.eigenvectors);
}

GoodnessReport check_goodness_graded(const std::vector<CycPoly>& x_graded,
                                     const std::vector<int>& degrees,
                                     const std::vector<Cyclotomic>& norm_sq,
                                     const NumericOptions& opt) {
  int n = static_cast<int>(degrees.size());
  if (static_cast<int>(x_graded.size()) != n)
    throw std::invalid_argument("check_goodness: invariant count != rank");
  GoodnessReport report;
  report.pass = true;

  for (int a = 0; a < n; ++a) {
    int deg = 0;
    if (!x_graded[a].is_homogeneous(&deg) || deg != degrees[a])
      throw std::invalid_argument("check_goodness: x_" + std::to_string(a + 1) +
                                  " is not homogeneous of degree d_" + std::to_string(a + 1));
    IndexSet conditions = weighted_monomials(degrees, degrees[a], 2);
    for (const Exp& idx : conditions.entries) {
      GoodnessCondition c;
      c.alpha = a + 1;
      c.multi_index = idx;
      c.value = derivative_at_qhat(x_graded[a], idx, degrees[a]);
      c.pass = c.value.is_zero();
      report.pass = report.pass && c.pass;
      report.conditions.push_back(std::move(c));
    }
  }

  // Numeric compatibility: the Jacobian w.r.t. the paper-normalized graded
  // coordinates at q must be the identity. Off-diagonal entries and the
  // squared diagonal identity are also checked exactly.
  int digits = opt.digits;
  std::vector<BigFloat> nu;
  for (const Cyclotomic& nsq : norm_sq) nu.push_back(nsq.embed(digits).re.sqrt());
  BigFloat residual = BigFloat::from_long(0, digits);
  bool exact_ok = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Exp idx(n, 0);
      idx[b] = 1;
      Cyclotomic jhat = derivative_at_qhat(x_graded[a], idx, degrees[a]);
      if (a != b && !jhat.is_zero()) exact_ok = false;
      if (a == b) {
        Cyclotomic rhs = norm_sq[0].pow(degrees[a] - 1) * norm_sq[a];
        if (!(jhat * jhat == rhs) || jhat.embed(20).re.sign() <= 0) exact_ok = false;
      }
      BigComplex num = jhat.embed(digits);
      BigFloat scale = nu[0].pow_si(degrees[a] - 1) * nu[b];
      BigComplex entry{num.re / scale, num.im / scale};
      if (a == b) entry.re = entry.re - BigFloat::from_long(1, digits);
      BigFloat mag = entry.abs();
      if (residual < mag) residual = mag;
    }
  }
  report.jacobian_ok = exact_ok && residual < opt.tolerance();
  report.jacobian_residual = residual.to_string(6);
  report.pass = report.pass && report.jacobian_ok;
  return report;
}

GoodnessReport check_goodness(const std::vector<CycPoly>& x_in_u,
                              const AdmissibleFrame& frame,
                              const NumericOptions& opt) {
  std::vector<CycPoly> graded;
  graded.reserve(x_in_u.size());
  for (const CycPoly& x : x_in_u) graded.push_back(frame.to_graded(x));
  return check_goodness_graded(graded, frame.degrees(), frame.norm_sq, opt);
}

namespace {

using FormList = std::vector<std::vector<Cyclotomic>>;

std::vector<CycPoly> elementary_symmetric_all(const std::vector<CycPoly>& args) {
  int nu = args.empty() ? 0 : args[0].nvars();
  std::vector<CycPoly> e(args.size() + 1, CycPoly(nu));
  e[0] = CycPoly::constant(nu, Cyclotomic(1));
  for (size_t t = 0; t < args.size(); ++t)
    for (size_t k = std::min(t + 1, args.size()); k >= 1; --k)
      e[k] = e[k] + e[k - 1] * args[t];
  return e;
}

// Construction-aware graded transform: power sums and symmetric products are
// rebuilt from transformed ingredients, never substituted term by term.
struct GradedTransformer {
  const GroupSpec& spec;
  const AdmissibleFrame& frame;
  std::map<std::string, CycPoly> memo;

  std::vector<Cyclotomic> transform_form(const std::vector<Cyclotomic>& l) {
    int n = frame.rank();
    std::vector<Cyclotomic> out(n);
    for (int j = 0; j < n; ++j) {
      Cyclotomic acc;
      for (int i = 0; i < n; ++i) {
        if (l[i].is_zero()) continue;
        acc += l[i] * frame.coord_change.at(i, j);
      }
      out[j] = acc;
    }
    return out;
  }

  const CycPoly& get(const std::string& name) {
    auto it = memo.find(name);
    if (it != memo.end()) return it->second;
    const PolyRecipe* recipe = nullptr;
    for (const auto& [n, r] : spec.named_polys)
      if (n == name) recipe = &r;
    if (!recipe)
      throw std::invalid_argument("graded transform: unknown poly " + name);
    CycPoly out(spec.rank);
    switch (recipe->kind) {
      case PolyRecipe::Kind::Explicit:
        out = frame.to_graded(recipe->expanded);
        break;
      case PolyRecipe::Kind::PowerSum: {
        for (const auto& l : spec.forms.at(recipe->forms_ref))
          out += linear_form_power(transform_form(l), recipe->power);
        break;
      }
      case PolyRecipe::Kind::ElemSym: {
        std::vector<CycPoly> args;
        for (const std::string& part : recipe->parts) args.push_back(get(part));
        out = elementary_symmetric_all(args)[recipe->esym_k] * recipe->scale;
        break;
      }
      case PolyRecipe::Kind::Combo: {
        std::vector<CycPoly> parts;
        for (const std::string& part : recipe->parts) parts.push_back(get(part));
        out = compose_invariants(recipe->combo_terms, parts) * recipe->scale;
        break;
      }
    }
    return memo.emplace(name, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<CycPoly> graded_named(const GroupSpec& spec, const AdmissibleFrame& frame,
                                  const std::vector<std::string>& names) {
  GradedTransformer t{spec, frame, {}};
  std::vector<CycPoly> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(t.get(n));
  return out;
}

std::vector<CycPoly> graded_good_invariants(const GroupSpec& spec,
                                            const AdmissibleFrame& frame) {
  return graded_named(spec, frame, spec.good_invariant_names);
}

std::vector<CycPoly> solve_good_basis(const GroupPtr& spec, const AdmissibleFrame& frame,
                                      const std::vector<CycPoly>& sigma,
                                      const NumericOptions& opt) {
  int n = spec->rank;
  const std::vector<int>& degrees = spec->degrees;
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("solve_good_basis: need one generator per degree");
  for (int i = 0; i < n; ++i) {
    int deg = 0;
    if (!sigma[i].is_homogeneous(&deg) || deg != degrees[i])
      throw std::invalid_argument("solve_good_basis: sigma_" + std::to_string(i + 1) +
                                  " degree mismatch");
    if (!is_invariant(sigma[i], *spec))
      throw std::invalid_argument("solve_good_basis: sigma_" + std::to_string(i + 1) +
                                  " is not invariant");
  }

  std::vector<CycPoly> sigma_graded;
  for (const CycPoly& s : sigma) sigma_graded.push_back(frame.to_graded(s));

  // Cached powers of each transformed generator.
  std::vector<std::vector<CycPoly>> powers(n);
  auto product_for = [&](const Exp& b) {
    CycPoly acc = CycPoly::constant(n, Cyclotomic(1));
    for (int i = 0; i < n; ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(CycPoly::constant(n, Cyclotomic(1)));
      while (static_cast<int>(cache.size()) <= b[i])
        cache.push_back(cache.back() * sigma_graded[i]);
      if (b[i]) acc = acc * cache[b[i]];
    }
    return acc;
  };

  int digits = opt.digits;
  std::vector<BigFloat> nu = frame.norms(digits);
  RationalizeOptions ropt{spec->field_order, digits, opt.max_den};

  std::vector<CycPoly> result;
  std::vector<CycPoly> result_graded;
  for (int a = 0; a < n; ++a) {
    IndexSet cands = weighted_monomials(degrees, degrees[a], 1);
    std::vector<CycPoly> prods;
    for (const Exp& b : cands.entries) prods.push_back(product_for(b));
    IndexSet conds = weighted_monomials(degrees, degrees[a], 2);

    CycMatrix M(static_cast<int>(conds.entries.size()),
                static_cast<int>(cands.entries.size()));
    for (size_t r = 0; r < conds.entries.size(); ++r)
      for (size_t c = 0; c < cands.entries.size(); ++c)
        M.at(static_cast<int>(r), static_cast<int>(c)) =
            derivative_at_qhat(prods[c], conds.entries[r], degrees[a]);
    std::vector<CycVector> null_basis = kernel(M);
    if (null_basis.size() != 1)
      throw std::domain_error("solve_good_basis: vanishing system for x_" +
                              std::to_string(a + 1) + " has solution dimension " +
                              std::to_string(null_basis.size()));
    const CycVector& c0 = null_basis[0];

    // Compatibility normalization dx_a/dz_a(q) = 1, fixed numerically at the
    // paper normalization and certified by the exact square identity.
    Exp unit(n, 0);
    unit[a] = 1;
    Cyclotomic jval;
    CycPoly xa_graded(n);
    for (size_t c = 0; c < cands.entries.size(); ++c) {
      if (c0.e[c].is_zero()) continue;
      xa_graded += prods[c] * c0.e[c];
    }
    jval = derivative_at_qhat(xa_graded, unit, degrees[a]);
    if (jval.is_zero())
      throw std::domain_error("solve_good_basis: inconsistent normalization for x_" +
                              std::to_string(a + 1));
    BigFloat target = nu[0].pow_si(degrees[a] - 1) * nu[a];
    BigComplex jnum = jval.embed(digits);
    BigComplex s_num = BigComplex{target, BigFloat::from_long(0, digits)} / jnum;
    std::optional<Cyclotomic> s = rationalize_complex(s_num, ropt);
    if (!s)
      throw std::domain_error("solve_good_basis: normalization factor for x_" +
                              std::to_string(a + 1) + " did not rationalize");
    Cyclotomic lhs = (*s * jval);
    Cyclotomic rhs = frame.norm_sq[0].pow(degrees[a] - 1) * frame.norm_sq[a];
    if (!(lhs * lhs == rhs) || lhs.embed(20).re.sign() <= 0)
      throw std::domain_error("solve_good_basis: exact certification failed for x_" +
                              std::to_string(a + 1));

    std::map<Exp, Cyclotomic, GradedLex> coeffs;
    for (size_t c = 0; c < cands.entries.size(); ++c)
      if (!c0.e[c].is_zero()) coeffs.emplace(cands.entries[c], c0.e[c] * *s);
    result.push_back(compose_invariants(coeffs, sigma));
    result_graded.push_back(xa_graded * *s);
  }

  GoodnessReport verify =
      check_goodness_graded(result_graded, degrees, frame.norm_sq, opt);
  if (!verify.pass)
    throw std::domain_error("solve_good_basis: solution failed the goodness recheck");
  return result;
}

std::vector<CycPoly> rescale_good_basis(const std::vector<CycPoly>& x,
                                        const std::vector<Cyclotomic>& a,
                                        const std::vector<int>& degrees) {
  if (x.size() != a.size() || x.size() != degrees.size())
    throw std::invalid_argument("rescale_good_basis: size mismatch");
  for (const Cyclotomic& s : a)
    if (s.is_zero()) throw std::invalid_argument("rescale_good_basis: zero scale");
  std::vector<CycPoly> out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out.push_back(x[i] * (a[0].pow(-(degrees[i] - 1)) * a[i].inverse()));
  return out;
}

Json goodness_report_json(const GoodnessReport& report) {
  Json conds = Json::array();
  for (const GoodnessCondition& c : report.conditions)
    conds.push_back(Json{{"alpha", c.alpha},
                         {"multi_index", c.multi_index},
                         {"value", to_json(c.value)},
                         {"pass", c.pass}});
  return Json{{"conditions", conds},
              {"jacobian_residual", report.jacobian_residual},
              {"jacobian_ok", report.jacobian_ok},
              {"pass", report.pass}};
}

}  // namespace goodinv
