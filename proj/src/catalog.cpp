#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "goodinv/cycexpr.hpp"
#include "goodinv/groups.hpp"
#include "goodinv/json_io.hpp"

namespace goodinv {

namespace {

using FormList = std::vector<std::vector<Cyclotomic>>;

Cyclotomic expr(const Json& j, int order) {
  return parse_cyclotomic(j.get<std::string>(), order).to_order(order);
}

CycVector vec_expr(const Json& j, int order) {
  CycVector v(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v.e[i] = expr(j[i], order);
  return v;
}

CycPoly terms_expr(const Json& terms, int nvars, int order) {
  CycPoly p(nvars);
  for (const Json& t : terms) {
    Exp e = t.at("e").get<Exp>();
    if (static_cast<int>(e.size()) != nvars)
      throw std::invalid_argument("catalog poly: exponent length mismatch");
    p.add_term(e, expr(t.at("c"), order));
  }
  return p;
}

std::vector<CycPoly> elementary_symmetric_all(const std::vector<CycPoly>& args) {
  int nu = args.empty() ? 0 : args[0].nvars();
  std::vector<CycPoly> e(args.size() + 1, CycPoly(nu));
  e[0] = CycPoly::constant(nu, Cyclotomic(1));
  for (size_t t = 0; t < args.size(); ++t)
    for (size_t k = std::min(t + 1, args.size()); k >= 1; --k)
      e[k] = e[k] + e[k - 1] * args[t];
  return e;
}

CycPoly power_sum_of_forms(const FormList& forms, int power) {
  if (forms.empty()) throw std::invalid_argument("power sum over empty form list");
  CycPoly acc(static_cast<int>(forms[0].size()));
  for (const auto& f : forms) acc += linear_form_power(f, power);
  return acc;
}

CycPoly expand_recipe(const GroupSpec& g, const PolyRecipe& r) {
  switch (r.kind) {
    case PolyRecipe::Kind::Explicit:
      return r.expanded;
    case PolyRecipe::Kind::PowerSum:
      return power_sum_of_forms(g.forms.at(r.forms_ref), r.power);
    case PolyRecipe::Kind::ElemSym: {
      std::vector<CycPoly> args;
      for (const std::string& part : r.parts) args.push_back(g.named(part));
      return elementary_symmetric_all(args)[r.esym_k] * r.scale;
    }
    case PolyRecipe::Kind::Combo: {
      std::vector<CycPoly> parts;
      for (const std::string& part : r.parts) parts.push_back(g.named(part));
      return compose_invariants(r.combo_terms, parts) * r.scale;
    }
  }
  throw std::logic_error("unreachable");
}

struct FrameWord {
  std::vector<int> word;
  long power = 1;
  bool invert = false;
};

CycMatrix element_from_word(const GroupSpec& g, const FrameWord& w) {
  CycMatrix m = CycMatrix::identity(g.rank);
  for (int idx : w.word) m = m * g.generators.at(idx);
  m = m.pow(w.power);
  if (w.invert) m = inverse(m);
  return m;
}

// ---- Construction-aware invariance -----------------------------------------

// Substituted version of every named polynomial under one reflection.
// Power sums and elementary-symmetric products look at the multiset of their
// substituted ingredients first, which settles invariance without expansion
// whenever the reflection permutes the ingredient list.
struct SubstitutionPass {
  const GroupSpec& g;
  CycVector root;
  Cyclotomic lambda;
  std::map<std::string, CycPoly> memo;
  std::map<std::string, FormList> forms_memo;
  std::map<std::string, bool> forms_permuted;

  const FormList& forms_image(const std::string& ref) {
    auto it = forms_memo.find(ref);
    if (it != forms_memo.end()) return it->second;
    const FormList& src = g.forms.at(ref);
    FormList img;
    CycMatrix s = reflection(root, lambda);
    for (const auto& f : src) {
      // (l o s)_j = sum_i l_i s_ij
      std::vector<Cyclotomic> nf(f.size());
      for (size_t j = 0; j < f.size(); ++j) {
        Cyclotomic acc;
        for (size_t i = 0; i < f.size(); ++i) {
          if (f[i].is_zero()) continue;
          acc += f[i] * s.at(static_cast<int>(i), static_cast<int>(j));
        }
        nf[j] = acc;
      }
      img.push_back(std::move(nf));
    }
    auto form_key = [](const std::vector<Cyclotomic>& f) {
      std::string k;
      for (const Cyclotomic& c : f) k += c.key() + ";";
      return k;
    };
    std::multiset<std::string> a, b;
    for (const auto& f : src) a.insert(form_key(f));
    for (const auto& f : img) b.insert(form_key(f));
    forms_permuted[ref] = (a == b);
    return forms_memo.emplace(ref, std::move(img)).first->second;
  }

  const CycPoly& image(const std::string& name) {
    auto it = memo.find(name);
    if (it != memo.end()) return it->second;
    const PolyRecipe* recipe = nullptr;
    for (const auto& [n, r] : g.named_polys)
      if (n == name) recipe = &r;
    if (!recipe) throw std::invalid_argument("substitution: unknown poly " + name);
    CycPoly out(g.rank);
    switch (recipe->kind) {
      case PolyRecipe::Kind::Explicit:
        out = substitute_reflection(recipe->expanded, root, lambda);
        break;
      case PolyRecipe::Kind::PowerSum: {
        const FormList& img = forms_image(recipe->forms_ref);
        if (forms_permuted[recipe->forms_ref]) {
          out = recipe->expanded;  // the power sum is symmetric in the forms
        } else {
          out = power_sum_of_forms(img, recipe->power);
        }
        break;
      }
      case PolyRecipe::Kind::ElemSym: {
        // E_k is symmetric in its arguments: a permuted part multiset gives
        // invariance for free.
        std::vector<CycPoly> args;
        std::multiset<std::string> before, after;
        for (const std::string& part : recipe->parts) {
          const CycPoly& im = image(part);
          args.push_back(im);
          after.insert(to_json(im).dump());
          before.insert(to_json(g.named(part)).dump());
        }
        if (before == after) {
          out = recipe->expanded;
        } else {
          out = elementary_symmetric_all(args)[recipe->esym_k] * recipe->scale;
        }
        break;
      }
      case PolyRecipe::Kind::Combo: {
        std::vector<CycPoly> parts;
        for (const std::string& part : recipe->parts) parts.push_back(image(part));
        out = compose_invariants(recipe->combo_terms, parts) * recipe->scale;
        break;
      }
    }
    return memo.emplace(name, std::move(out)).first->second;
  }
};

void validate_invariance(const GroupSpec& g) {
  std::vector<std::string> to_check = g.basic_invariant_names;
  to_check.insert(to_check.end(), g.good_invariant_names.begin(),
                  g.good_invariant_names.end());
  for (const CycMatrix& gen : g.generators) {
    auto [root, lam] = reflection_data(gen);
    SubstitutionPass pass{g, root, lam, {}, {}, {}};
    for (const std::string& name : to_check) {
      if (pass.image(name) != g.named(name))
        throw std::domain_error("catalog " + g.name + ": '" + name +
                                "' is not invariant under a generator");
    }
  }
}

void validate_spec(GroupSpec& g) {
  // Generators are reflections of finite order.
  for (const CycMatrix& gen : g.generators) {
    auto [root, lam] = reflection_data(gen);
    auto ord = lam.multiplicative_order(2 * g.field_order);
    if (!ord) throw std::domain_error("catalog " + g.name + ": non-finite generator eigenvalue");
    if (matrix_order(gen, *ord + 1) != *ord)
      throw std::domain_error("catalog " + g.name + ": generator order mismatch");
  }

  // Degree bookkeeping.
  if (static_cast<int>(g.degrees.size()) != g.rank)
    throw std::domain_error("catalog " + g.name + ": degree count != rank");
  if (g.duality) {
    g.codegrees.resize(g.rank);
    for (int i = 0; i < g.rank; ++i) g.codegrees[i] = g.degrees[0] - g.degrees[i];
  }

  // Named invariants: homogeneous of the right degrees.
  auto check_degrees = [&](const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) {
      const CycPoly& p = g.named(names[i]);
      int deg = 0;
      if (!p.is_homogeneous(&deg) || deg != g.degrees[i])
        throw std::domain_error("catalog " + g.name + ": '" + names[i] +
                                "' has wrong degree");
    }
  };
  if (!g.basic_invariant_names.empty()) check_degrees(g.basic_invariant_names);
  if (!g.good_invariant_names.empty()) check_degrees(g.good_invariant_names);
  validate_invariance(g);

  // Frame: g has order d1, zeta is a primitive d1-th root, and the cataloged
  // eigenvectors satisfy g q = zeta^{1 - d_alpha} q exactly.
  if (g.frame.present) {
    int d1 = g.degrees[0];
    if (g.frame.zeta.multiplicative_order(2 * g.field_order) != d1)
      throw std::domain_error("catalog " + g.name + ": zeta is not a primitive d1-th root");
    if (matrix_order(g.frame.g, d1 + 1) != d1)
      throw std::domain_error("catalog " + g.name + ": frame element order != d1");
    if (static_cast<int>(g.frame.eigenvectors.size()) != g.rank)
      throw std::domain_error("catalog " + g.name + ": eigenvector count != rank");
    for (int a = 0; a < g.rank; ++a) {
      const CycVector& q = g.frame.eigenvectors[a];
      Cyclotomic lam = g.frame.zeta.pow(1 - g.degrees[a]);
      if (!(g.frame.g * q == q * lam))
        throw std::domain_error("catalog " + g.name + ": eigenvector " +
                                std::to_string(a + 1) + " fails its eigen-equation");
      Cyclotomic nsq = hermitian(q, q);
      if (!(nsq.conj() == nsq) || nsq.embed(30).re.sign() <= 0)
        throw std::domain_error("catalog " + g.name + ": eigenvector " +
                                std::to_string(a + 1) + " has non-positive norm");
    }
    ReflectionSet refl = reflections(g, 5000);
    if (g.expected_reflection_lines &&
        refl.distinct_lines != *g.expected_reflection_lines)
      throw std::domain_error("catalog " + g.name + ": reflection line count " +
                              std::to_string(refl.distinct_lines) + " != expected " +
                              std::to_string(*g.expected_reflection_lines));
    if (!is_regular_vector(g.frame.eigenvectors[0], refl))
      throw std::domain_error("catalog " + g.name + ": q_1 lies on a reflection hyperplane");
    // Regular number condition a(d1) = b(d1), when codegrees are known.
    if (auto b = g.b_count(d1)) {
      if (g.a_count(d1) != *b)
        throw std::domain_error("catalog " + g.name + ": a(d1) != b(d1)");
    }
  }

  // Potential data: derive components from the function when present, and
  // check the weighted homogeneity deg G_gamma = d_gamma + d_1.
  if (g.potential_function) {
    if (static_cast<int>(g.potential_pairing.size()) != g.rank)
      throw std::domain_error("catalog " + g.name + ": potential pairing size");
    for (int i = 0; i < g.rank; ++i)
      if (g.potential_pairing[g.potential_pairing[i]] != i)
        throw std::domain_error("catalog " + g.name + ": pairing is not an involution");
    g.potential_components.clear();
    for (int i = 0; i < g.rank; ++i)
      g.potential_components.push_back(g.potential_function->derivative(g.potential_pairing[i]));
  }
  for (size_t i = 0; i < g.potential_components.size(); ++i) {
    if (!g.potential_components[i].is_weighted_homogeneous(
            g.degrees, g.degrees[i] + g.degrees[0]))
      throw std::domain_error("catalog " + g.name + ": potential component " +
                              std::to_string(i + 1) + " not weighted-homogeneous");
  }

  // Reduction edges: structural checks only; the exact scale identities are
  // re-derived when an edge is verified against the loaded child group.
  for (const ReductionEdge& e : g.reductions) {
    if (e.delta <= 1 || g.degrees[0] % e.delta != 0)
      throw std::domain_error("catalog " + g.name + ": reduction delta must divide d1");
    std::vector<int> iset = g.i_set(e.delta);
    if (e.pairs.size() != iset.size())
      throw std::domain_error("catalog " + g.name + ": reduction pair count != |i(delta)|");
    for (size_t k = 0; k < e.pairs.size(); ++k)
      if (e.pairs[k].parent != iset[k])
        throw std::domain_error("catalog " + g.name + ": reduction pairs must follow i(delta)");
  }
}

GroupPtr load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog file " + path);
  Json doc = Json::parse(in);

  auto g = std::make_shared<GroupSpec>();
  g->name = doc.at("name").get<std::string>();
  g->rank = doc.at("rank").get<int>();
  g->field_order = doc.at("field_order").get<int>();
  g->degrees = doc.at("degrees").get<std::vector<int>>();
  g->duality = doc.at("duality").get<bool>();
  int N = g->field_order;
  if (doc.contains("reflection_lines") && !doc.at("reflection_lines").is_null())
    g->expected_reflection_lines = doc.at("reflection_lines").get<int>();

  for (const Json& spec : doc.at("generators")) {
    if (spec.contains("matrix")) {
      const Json& rows = spec.at("matrix");
      CycMatrix m(g->rank, g->rank);
      for (int i = 0; i < g->rank; ++i)
        for (int j = 0; j < g->rank; ++j) m.at(i, j) = expr(rows[i][j], N);
      g->generators.push_back(m);
    } else {
      CycVector root = vec_expr(spec.at("root"), N);
      Cyclotomic lam =
          spec.contains("eigenvalue") ? expr(spec.at("eigenvalue"), N) : Cyclotomic(-1);
      g->generators.push_back(reflection(root, lam));
    }
  }

  if (doc.contains("roots"))
    for (const Json& r : doc.at("roots")) {
      Cyclotomic lam =
          r.contains("eigenvalue") ? expr(r.at("eigenvalue"), N) : Cyclotomic(-1);
      g->roots.push_back({vec_expr(r.at("v"), N), lam});
    }
  g->roots_complete = doc.value("roots_complete", false);

  if (doc.contains("forms"))
    for (const auto& [ref, list] : doc.at("forms").items()) {
      FormList forms;
      for (const Json& f : list) {
        std::vector<Cyclotomic> coeffs;
        for (const Json& c : f) coeffs.push_back(expr(c, N));
        forms.push_back(std::move(coeffs));
      }
      g->forms.emplace(ref, std::move(forms));
    }

  for (const Json& pj : doc.at("polys")) {
    PolyRecipe r;
    std::string name = pj.at("name").get<std::string>();
    if (pj.contains("terms")) {
      r.kind = PolyRecipe::Kind::Explicit;
      r.expanded = terms_expr(pj.at("terms"), g->rank, N);
    } else if (pj.contains("power_sum")) {
      r.kind = PolyRecipe::Kind::PowerSum;
      r.forms_ref = pj.at("power_sum").at("forms").get<std::string>();
      r.power = pj.at("power_sum").at("power").get<int>();
    } else if (pj.contains("esym")) {
      r.kind = PolyRecipe::Kind::ElemSym;
      r.parts = pj.at("esym").at("over").get<std::vector<std::string>>();
      r.esym_k = pj.at("esym").at("k").get<int>();
      r.scale = pj.at("esym").contains("scale") ? expr(pj.at("esym").at("scale"), N)
                                                : Cyclotomic(1);
    } else if (pj.contains("combo")) {
      r.kind = PolyRecipe::Kind::Combo;
      const Json& cj = pj.at("combo");
      r.parts = cj.at("over").get<std::vector<std::string>>();
      r.scale = cj.contains("scale") ? expr(cj.at("scale"), N) : Cyclotomic(1);
      for (const Json& t : cj.at("terms"))
        r.combo_terms.emplace(t.at("e").get<Exp>(), expr(t.at("c"), N));
    } else {
      throw std::invalid_argument("catalog poly '" + name + "': unknown construction");
    }
    if (r.kind != PolyRecipe::Kind::Explicit) r.expanded = expand_recipe(*g, r);
    g->named_polys.emplace_back(name, std::move(r));
  }

  g->basic_invariant_names = doc.at("basic_invariants").get<std::vector<std::string>>();
  g->good_invariant_names = doc.at("good_invariants").get<std::vector<std::string>>();

  if (doc.contains("frame")) {
    const Json& fj = doc.at("frame");
    FrameWord w;
    w.word = fj.at("g").at("word").get<std::vector<int>>();
    w.power = fj.at("g").value("power", 1);
    w.invert = fj.at("g").value("invert", false);
    g->frame.g = element_from_word(*g, w);
    g->frame.zeta = Cyclotomic::root_of_unity(N, fj.at("zeta_exponent").get<int>());
    for (const Json& q : fj.at("eigenvectors"))
      g->frame.eigenvectors.push_back(vec_expr(q, N));
    g->frame.present = true;
  }

  if (doc.contains("potential")) {
    const Json& pj = doc.at("potential");
    if (pj.contains("function") && !pj.at("function").is_null()) {
      g->potential_function = terms_expr(pj.at("function").at("terms"), g->rank, N);
      for (int v : pj.at("pairing")) g->potential_pairing.push_back(v - 1);
    }
    if (pj.contains("components"))
      for (const Json& comp : pj.at("components"))
        g->potential_components.push_back(terms_expr(comp.at("terms"), g->rank, N));
  }

  if (doc.contains("reductions"))
    for (const Json& ej : doc.at("reductions")) {
      ReductionEdge e;
      e.delta = ej.at("delta").get<int>();
      e.target = ej.at("target").get<std::string>();
      for (const Json& pj : ej.at("pairs")) {
        ReductionEdge::Pair pr;
        pr.parent = pj.at("parent").get<int>() - 1;
        pr.child = pj.at("child").get<int>() - 1;
        pr.phase = expr(pj.at("phase"), N);
        pr.rel = expr(pj.at("rel"), N);
        e.pairs.push_back(pr);
      }
      if (ej.contains("rel0") && !ej.at("rel0").is_null())
        e.rel0 = expr(ej.at("rel0"), N);
      for (const Json& wj : ej.at("witnesses")) {
        ReductionWitness w;
        for (const Json& fj : wj.at("parent")) {
          ReductionWitness::Factor f;
          if (fj.contains("g_power")) {
            f.is_g_power = true;
            f.g_power = fj.at("g_power").get<int>();
          } else {
            f.refl.root = vec_expr(fj.at("root"), N);
            f.refl.eigenvalue =
                fj.contains("eigenvalue") ? expr(fj.at("eigenvalue"), N) : Cyclotomic(-1);
          }
          w.parent_word.push_back(std::move(f));
        }
        for (int idx : wj.at("child")) w.child_word.push_back(idx - 1);
        e.witnesses.push_back(std::move(w));
      }
      g->reductions.push_back(std::move(e));
    }

  validate_spec(*g);
  return g;
}

}  // namespace

const std::vector<std::string>& primitive_catalog_names() {
  static const std::vector<std::string> names = {"G35", "G28", "G25", "G8",
                                                 "G5",  "G31", "G9",  "G10"};
  return names;
}

GroupPtr catalog_group(const std::string& name, const std::string& catalog_dir) {
  // mu(d) and the monomial families are constructed, not file-backed.
  if (name.rfind("mu(", 0) == 0 && name.back() == ')')
    return cyclic_group(std::stoi(name.substr(3, name.size() - 4)));
  if (name.rfind("G(", 0) == 0 && name.back() == ')') {
    int m = 0, p = 0, n = 0;
    if (std::sscanf(name.c_str(), "G(%d,%d,%d)", &m, &p, &n) != 3)
      throw std::invalid_argument("unknown group name " + name);
    return monomial_group(m, p, n);
  }

  static std::map<std::string, GroupPtr> cache;
  static std::mutex mu;
  std::string file = name;
  for (char& c : file)
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  std::string path = catalog_dir + "/" + file + ".json";
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(path);
    if (it != cache.end()) return it->second;
  }
  GroupPtr g = load_catalog_file(path);
  if (g->name != name)
    throw std::invalid_argument("catalog file " + path + " holds " + g->name +
                                ", expected " + name);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(path, g).first->second;
}

}  // namespace goodinv
