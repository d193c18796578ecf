#include "goodinv/groups.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace goodinv {

const CycPoly& GroupSpec::named(const std::string& name) const {
  for (const auto& [n, recipe] : named_polys)
    if (n == name) return recipe.expanded;
  throw std::invalid_argument("group " + this->name + ": unknown polynomial '" + name + "'");
}

std::vector<CycPoly> GroupSpec::basic_invariants() const {
  std::vector<CycPoly> out;
  out.reserve(basic_invariant_names.size());
  for (const std::string& n : basic_invariant_names) out.push_back(named(n));
  return out;
}

std::vector<CycPoly> GroupSpec::good_invariants() const {
  std::vector<CycPoly> out;
  out.reserve(good_invariant_names.size());
  for (const std::string& n : good_invariant_names) out.push_back(named(n));
  return out;
}

int GroupSpec::a_count(int d) const {
  int c = 0;
  for (int deg : degrees) c += (deg % d == 0);
  return c;
}

std::optional<int> GroupSpec::b_count(int d) const {
  if (codegrees.empty()) return std::nullopt;
  int c = 0;
  for (int deg : codegrees) c += (deg % d == 0);
  return c;
}

std::vector<int> GroupSpec::i_set(int delta) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(degrees.size()); ++i)
    if (degrees[i] % delta == 0) out.push_back(i);
  return out;
}

std::vector<int> GroupSpec::ic_set(int delta) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(degrees.size()); ++i)
    if (degrees[i] % delta != 0) out.push_back(i);
  return out;
}

Int GroupSpec::order_product() const {
  Int p(1);
  for (int d : degrees) p *= d;
  return p;
}

namespace {

// E_k(p_1, ..., p_t) over polynomial arguments, by the product recurrence.
std::vector<CycPoly> elementary_symmetric_all(const std::vector<CycPoly>& args) {
  int nu = args.empty() ? 0 : args[0].nvars();
  std::vector<CycPoly> e(args.size() + 1, CycPoly(nu));
  e[0] = CycPoly::constant(nu, Cyclotomic(1));
  for (size_t t = 0; t < args.size(); ++t)
    for (size_t k = std::min(t + 1, args.size()); k >= 1; --k)
      e[k] = e[k] + e[k - 1] * args[t];
  return e;
}

void add_named_explicit(GroupSpec& g, const std::string& name, CycPoly p) {
  PolyRecipe r;
  r.kind = PolyRecipe::Kind::Explicit;
  r.expanded = std::move(p);
  g.named_polys.emplace_back(name, std::move(r));
}

}  // namespace

GroupPtr monomial_group(int m, int p, int rank) {
  bool full_family = (p == 1 && m >= 2);   // G(m,1,n)
  bool diag_family = (p == m && m >= 2);   // G(m,m,rank)
  if (!full_family && !diag_family)
    throw std::invalid_argument("monomial_group: p must be 1 or m, with m >= 2");
  if (rank < 1 || (diag_family && rank < 2))
    throw std::invalid_argument("monomial_group: invalid rank");

  auto g = std::make_shared<GroupSpec>();
  int n = full_family ? rank : rank - 1;  // d_1 = n m in both families
  int N = n * m;
  g->field_order = N;
  g->rank = rank;
  g->duality = true;
  g->monomial = GroupSpec::MonomialParams{m, p, rank};
  g->name = "G(" + std::to_string(m) + "," + std::to_string(p) + "," +
            std::to_string(rank) + ")";

  for (int i = 1; i <= n; ++i) g->degrees.push_back((n + 1 - i) * m);
  if (diag_family) g->degrees.push_back(n + 1);
  g->codegrees.resize(rank);
  for (int i = 0; i < rank; ++i) g->codegrees[i] = g->degrees[0] - g->degrees[i];

  Cyclotomic zeta = Cyclotomic::root_of_unity(N, 1);
  Cyclotomic zeta_m = zeta.pow(n);  // primitive m-th root
  auto unit = [&](int i) { return CycVector::unit(rank, i); };

  for (int i = 0; i + 1 < rank; ++i)
    g->generators.push_back(reflection(unit(i) - unit(i + 1), Cyclotomic(-1)));
  if (full_family) {
    g->generators.push_back(reflection(unit(rank - 1), zeta_m));
  } else {
    g->generators.push_back(
        reflection(unit(rank - 2) - unit(rank - 1) * zeta_m, Cyclotomic(-1)));
  }

  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      for (int k = 0; k < m; ++k)
        g->roots.push_back({unit(i) - unit(j) * zeta_m.pow(k), Cyclotomic(-1)});
  if (full_family)
    for (int i = 0; i < rank; ++i)
      for (int t = 1; t < m; ++t) g->roots.push_back({unit(i), zeta_m.pow(t)});
  g->roots_complete = true;

  std::vector<CycPoly> um;
  for (int i = 0; i < rank; ++i) um.push_back(CycPoly::variable(rank, i, m));
  std::vector<CycPoly> esym = elementary_symmetric_all(um);
  for (int a = 1; a <= n; ++a) {
    std::string nm = "s" + std::to_string(a);
    add_named_explicit(*g, nm, esym[n + 1 - a]);
    g->basic_invariant_names.push_back(nm);
  }
  if (diag_family) {
    CycPoly prod = CycPoly::constant(rank, Cyclotomic(1));
    for (int i = 0; i < rank; ++i) prod = prod * CycPoly::variable(rank, i);
    std::string nm = "s" + std::to_string(rank);
    add_named_explicit(*g, nm, prod);
    g->basic_invariant_names.push_back(nm);
  }

  CycMatrix gm(rank, rank);
  for (int i = 0; i + 1 < n; ++i) gm.at(i, i + 1) = Cyclotomic(1);
  gm.at(n - 1, 0) = zeta.pow(n);
  if (diag_family) gm.at(rank - 1, rank - 1) = zeta.pow(-n);
  g->frame.g = gm;
  g->frame.zeta = zeta;
  for (int i = 1; i <= n; ++i) {
    Cyclotomic lam = zeta.pow(1 + static_cast<long>(i - 1) * m);
    CycVector q(rank);
    for (int k = 0; k < n; ++k) q.e[k] = lam.pow(k);
    if (diag_family) q.e[rank - 1] = Cyclotomic(0);
    g->frame.eigenvectors.push_back(q);
  }
  if (diag_family) g->frame.eigenvectors.push_back(unit(rank - 1));
  g->frame.present = true;
  return g;
}

GroupPtr cyclic_group(int d) {
  if (d < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  auto g = std::make_shared<GroupSpec>();
  g->name = "mu(" + std::to_string(d) + ")";
  g->rank = 1;
  g->field_order = d;
  g->degrees = {d};
  g->codegrees = {0};
  g->duality = true;
  Cyclotomic zeta = Cyclotomic::root_of_unity(d, 1);
  if (d > 1) {
    g->generators.push_back(reflection(CycVector::unit(1, 0), zeta));
    for (int t = 1; t < d; ++t)
      g->roots.push_back({CycVector::unit(1, 0), zeta.pow(t)});
  }
  g->roots_complete = true;
  add_named_explicit(*g, "s1", CycPoly::variable(1, 0, d));
  g->basic_invariant_names = {"s1"};
  add_named_explicit(*g, "x1", CycPoly::variable(1, 0, d) * Cyclotomic(Rat(1, d)));
  g->good_invariant_names = {"x1"};
  CycMatrix gm(1, 1);
  gm.at(0, 0) = zeta;
  g->frame.g = gm;
  g->frame.zeta = zeta;
  g->frame.eigenvectors = {CycVector::unit(1, 0)};
  g->frame.present = true;
  CycPoly pot(1);
  pot.add_term({2}, Cyclotomic(Rat(1, 2)));
  g->potential_components = {pot};
  return g;
}

ReflectionSet reflections(const GroupSpec& spec, int cap) {
  ReflectionSet set;
  std::unordered_set<std::string> seen;
  std::set<std::string> lines;
  std::deque<RootEntry> queue;

  auto push = [&](const CycVector& root, const Cyclotomic& lambda) {
    CycVector line = root.line_normal();
    std::string key = line.key() + "@" + lambda.key();
    if (!seen.insert(key).second) return;
    lines.insert(line.key());
    set.entries.push_back({line, lambda});
    queue.push_back({line, lambda});
    if (static_cast<int>(set.entries.size()) > cap)
      throw std::domain_error("reflections: closure exceeded cap");
  };

  for (const CycMatrix& gen : spec.generators) {
    auto [root, lam] = reflection_data(gen);
    push(root, lam);
  }
  for (const RootEntry& r : spec.roots) push(r.root, r.eigenvalue);

  // Conjugation closure: g s(v, l) g^{-1} = s(g v, l).
  while (!queue.empty()) {
    RootEntry cur = queue.front();
    queue.pop_front();
    for (const CycMatrix& gen : spec.generators)
      push(gen * cur.root, cur.eigenvalue);
  }
  set.distinct_lines = static_cast<int>(lines.size());
  return set;
}

bool is_regular_vector(const CycVector& q, const ReflectionSet& refl) {
  std::unordered_set<std::string> checked;
  for (const ReflectionSet::Entry& e : refl.entries) {
    if (!checked.insert(e.line.key()).second) continue;
    if (q.dim() != e.line.dim())
      throw std::invalid_argument("is_regular_vector: dimension mismatch");
    if (hermitian(q, e.line).is_zero()) return false;
  }
  return true;
}

CycPoly substitute_reflection(const CycPoly& p, const CycVector& root,
                              const Cyclotomic& lambda) {
  // s(u) = u + c * phi(u) * v with phi(u) = (u, v) and c = -(1-lambda)/(v,v);
  // p(s(u)) = sum_k phi(u)^k c^k / k! * (D_v^k p)(u).
  int n = p.nvars();
  if (root.dim() != n)
    throw std::invalid_argument("substitute_reflection: dimension mismatch");
  Cyclotomic c = -(Cyclotomic(1) - lambda) / hermitian(root, root);
  std::vector<Cyclotomic> phi(n);
  for (int j = 0; j < n; ++j) phi[j] = root.e[j].conj();

  CycPoly out(n);
  CycPoly dk = p;  // D_v^k p
  Cyclotomic ck(1);
  Rat inv_fact(1);
  for (int k = 0; !dk.is_zero(); ++k) {
    if (k > 0) {
      ck = ck * c;
      inv_fact /= k;
    }
    out += linear_form_power(phi, k) * dk * (ck * inv_fact);
    CycPoly next(n);
    for (int i = 0; i < n; ++i) {
      if (root.e[i].is_zero()) continue;
      next += dk.derivative(i) * root.e[i];
    }
    dk = std::move(next);
  }
  return out;
}

bool is_invariant(const CycPoly& p, const GroupSpec& spec) {
  if (p.nvars() != spec.rank)
    throw std::invalid_argument("is_invariant: polynomial rank mismatch");
  for (const CycMatrix& gen : spec.generators) {
    auto [root, lam] = reflection_data(gen);
    if (substitute_reflection(p, root, lam) != p) return false;
  }
  return true;
}

std::optional<long> group_order_check(const GroupSpec& spec, long cap) {
  Int expected = spec.order_product();
  if (expected > cap) return std::nullopt;
  long target = expected.get_si();

  std::unordered_set<std::string> seen;
  std::deque<CycMatrix> queue;
  CycMatrix id = CycMatrix::identity(spec.rank).to_order(spec.field_order);
  seen.insert(id.key());
  queue.push_back(id);
  std::vector<CycMatrix> gens;
  for (const CycMatrix& g : spec.generators) gens.push_back(g.to_order(spec.field_order));

  while (!queue.empty()) {
    CycMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (const CycMatrix& g : gens) {
      CycMatrix next = (cur * g).to_order(spec.field_order);
      if (seen.insert(next.key()).second) {
        if (static_cast<long>(seen.size()) > target)
          throw std::domain_error("group_order_check: closure exceeds product of degrees");
        queue.push_back(std::move(next));
      }
    }
  }
  if (static_cast<long>(seen.size()) != target)
    throw std::domain_error("group_order_check: closure order " +
                            std::to_string(seen.size()) +
                            " != product of degrees " + std::to_string(target));
  return target;
}

}  // namespace goodinv
