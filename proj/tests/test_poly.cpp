#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goodinv/cycexpr.hpp"
#include "goodinv/json_io.hpp"
#include "goodinv/poly.hpp"

using namespace goodinv;

namespace {

Cyclotomic C(const char* s) { return parse_cyclotomic(s, 24); }

CycPoly t_octahedral() {
  // u1^12 - 33 u1^8 u2^4 - 33 u1^4 u2^8 + u2^12
  CycPoly p(2);
  p.add_term({12, 0}, Cyclotomic(1));
  p.add_term({8, 4}, Cyclotomic(-33));
  p.add_term({4, 8}, Cyclotomic(-33));
  p.add_term({0, 12}, Cyclotomic(1));
  return p;
}

CycPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int nterms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-6, 6);
  CycPoly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    Exp e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = deg(rng);
    p.add_term(e, Cyclotomic(Rat(num(rng))));
  }
  return p;
}

// Independent oracle: enumerate exponent boxes with nested loops.
std::vector<Exp> weighted_oracle(const std::vector<int>& degrees, int target, int min_total) {
  std::vector<Exp> out;
  int n = static_cast<int>(degrees.size());
  Exp e(n, 0);
  // Odometer enumeration over the box [0, target/deg_i].
  for (;;) {
    long wsum = 0;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      wsum += static_cast<long>(e[i]) * degrees[i];
      total += e[i];
    }
    if (wsum == target && total >= min_total) out.push_back(e);
    int i = 0;
    for (; i < n; ++i) {
      if ((e[i] + 1) * degrees[i] <= target) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

// Naive term-by-term product oracle.
CycPoly naive_product(const CycPoly& a, const CycPoly& b) {
  CycPoly out(a.nvars());
  for (const auto& [e1, c1] : a.terms())
    for (const auto& [e2, c2] : b.terms()) {
      Exp e(a.nvars());
      for (int i = 0; i < a.nvars(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

}  // namespace

TEST_CASE("weighted_monomials spec values") {
  auto s1 = weighted_monomials({12, 8}, 24, 2);
  CHECK(s1.entries == std::vector<Exp>{{2, 0}, {0, 3}});
  auto s2 = weighted_monomials({12, 9, 8, 6, 5, 2}, 2, 2);
  CHECK(s2.entries.empty());
  auto s3 = weighted_monomials({24, 8}, 24, 2);
  CHECK(s3.entries == std::vector<Exp>{{0, 3}});
  CHECK_THROWS(weighted_monomials({0, 2}, 4, 0));
}

TEST_CASE("weighted_monomials agrees with the brute-force oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dcount(1, 6);
  std::uniform_int_distribution<int> dval(1, 13);
  std::uniform_int_distribution<int> tval(0, 40);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<int> degrees(dcount(rng));
    for (int& d : degrees) d = dval(rng);
    int target = tval(rng);
    for (int min_total : {0, 1, 2}) {
      auto got = weighted_monomials(degrees, target, min_total);
      CHECK(got.entries == weighted_oracle(degrees, target, min_total));
    }
  }
}

TEST_CASE("derivative basics") {
  CycPoly p(2);  // u1^2 u2
  p.add_term({2, 1}, Cyclotomic(1));
  CycPoly d = p.derivative(0);
  CycPoly expect(2);
  expect.add_term({1, 1}, Cyclotomic(2));
  CHECK(d == expect);

  CycPoly lin(2);
  lin.add_term({1, 0}, Cyclotomic(5));
  lin.add_term({0, 1}, Cyclotomic(-2));
  CHECK(lin.derivative(0, 2).is_zero());

  // 4th u2-derivative of t_O keeps -33 * 4! * u1^8.
  CycPoly d4 = t_octahedral().derivative(1, 4);
  CHECK(d4.coeff({8, 0}) == Cyclotomic(-33 * 24));
}

TEST_CASE("mixed partials commute") {
  std::mt19937_64 rng(55);
  for (int iter = 0; iter < 500; ++iter) {
    CycPoly p = random_poly(rng, 3, 4, 6);
    CHECK(p.derivative(0).derivative(2) == p.derivative(2).derivative(0));
  }
}

TEST_CASE("evaluate") {
  CycPoly c5 = CycPoly::constant(3, Cyclotomic(5));
  std::vector<Cyclotomic> pt = {C("i"), C("w"), C("sqrt2")};
  CHECK(c5.evaluate(pt) == Cyclotomic(5));

  CycPoly p(2);
  p.add_term({1, 1}, Cyclotomic(1));
  std::vector<Cyclotomic> ii = {C("i"), C("i")};
  CHECK(p.evaluate(ii) == Cyclotomic(-1));
}

TEST_CASE("linear_substitute basics") {
  // Swap of two variables in rank 2.
  CycPoly p = CycPoly::variable(2, 0);
  CycMatrix swap(2, 2);
  swap.at(0, 1) = Cyclotomic(1);
  swap.at(1, 0) = Cyclotomic(1);
  CHECK(linear_substitute(p, swap) == CycPoly::variable(2, 1));

  // u1^2 + u2^2 is invariant under the real orthogonal reflection r3.
  CycPoly s2(2);
  s2.add_term({2, 0}, Cyclotomic(1));
  s2.add_term({0, 2}, Cyclotomic(1));
  CycMatrix r3(2, 2);
  r3.at(0, 0) = C("1/sqrt2");
  r3.at(0, 1) = C("-1/sqrt2");
  r3.at(1, 0) = C("-1/sqrt2");
  r3.at(1, 1) = C("-1/sqrt2");
  CHECK(linear_substitute(s2, r3) == s2);

  // t_O under diag(1, i) is itself.
  CycMatrix d(2, 2);
  d.at(0, 0) = Cyclotomic(1);
  d.at(1, 1) = C("i");
  CHECK(linear_substitute(t_octahedral(), d) == t_octahedral());
}

TEST_CASE("substitution composes and commutes with evaluation") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int iter = 0; iter < 200; ++iter) {
    CycPoly p = random_poly(rng, 3, 3, 5);
    CycMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = Cyclotomic(Rat(num(rng)));
    CycVector z(3);
    for (int i = 0; i < 3; ++i) z.e[i] = Cyclotomic(Rat(num(rng)));
    // evaluate(linear_substitute(p, A), z) == evaluate(p, A z)
    CycVector az = a * z;
    CHECK(linear_substitute(p, a).evaluate(std::span<const Cyclotomic>(z.e)) ==
          p.evaluate(std::span<const Cyclotomic>(az.e)));
    if (iter < 40) {
      CycMatrix b(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b.at(i, j) = Cyclotomic(Rat(num(rng)));
      CHECK(linear_substitute(p, a * b) ==
            linear_substitute(linear_substitute(p, a), b));
    }
  }
}

TEST_CASE("linear_form_power matches repeated multiplication") {
  std::vector<Cyclotomic> coeffs = {C("1"), C("-sqrt2"), C("0"), C("i/2")};
  CycPoly lin(4);
  for (int i = 0; i < 4; ++i) {
    Exp e(4, 0);
    e[i] = 1;
    lin.add_term(e, coeffs[i]);
  }
  for (int m : {0, 1, 2, 5, 8}) {
    CHECK(linear_form_power(coeffs, m) == lin.pow(m));
  }
}

TEST_CASE("compose and decompose invariants") {
  // sigma of the rank-2 monomial group with degrees (4, 2).
  CycPoly s1(2), s2(2);
  s1.add_term({2, 2}, Cyclotomic(1));            // u1^2 u2^2
  s2.add_term({2, 0}, Cyclotomic(1));            // u1^2 + u2^2
  s2.add_term({0, 2}, Cyclotomic(1));
  std::vector<CycPoly> sigma = {s1, s2};

  std::map<Exp, Cyclotomic, GradedLex> coeffs;
  coeffs.emplace(Exp{1, 0}, Cyclotomic(1));
  CHECK(compose_invariants(coeffs, sigma) == s1);

  // u1^2 + u2^2 decomposes as sigma_2 itself.
  auto dec = decompose_in_generators(s2, sigma, {4, 2});
  REQUIRE(dec.size() == 1);
  CHECK(dec.begin()->first == Exp{0, 1});
  CHECK(dec.begin()->second == Cyclotomic(1));

  // Degree-1 non-invariant is rejected.
  CHECK_THROWS_AS(decompose_in_generators(CycPoly::variable(2, 0), sigma, {4, 2}),
                  std::domain_error);

  // Round-trip on random coefficient maps.
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int iter = 0; iter < 25; ++iter) {
    std::map<Exp, Cyclotomic, GradedLex> want;
    // Weighted degree 8 over (4, 2): candidates (2,0), (1,2), (0,4).
    for (const Exp& b : std::vector<Exp>{{2, 0}, {1, 2}, {0, 4}})
      want.emplace(b, Cyclotomic(Rat(num(rng))));
    std::erase_if(want, [](const auto& kv) { return kv.second.is_zero(); });
    CycPoly p = compose_invariants(want, sigma);
    if (p.is_zero()) continue;
    CHECK(decompose_in_generators(p, sigma, {4, 2}) == want);
  }
}

TEST_CASE("products against the naive oracle") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    CycPoly a = random_poly(rng, 3, 3, 5);
    CycPoly b = random_poly(rng, 3, 3, 5);
    CHECK(a * b == naive_product(a, b));
  }
}

TEST_CASE("homogeneity helpers") {
  CycPoly to = t_octahedral();
  int deg = 0;
  CHECK(to.is_homogeneous(&deg));
  CHECK(deg == 12);
  CHECK(to.is_weighted_homogeneous({1, 1}, 12));
  CycPoly mixed(2);
  mixed.add_term({1, 0}, Cyclotomic(1));
  mixed.add_term({2, 0}, Cyclotomic(1));
  CHECK_FALSE(mixed.is_homogeneous());
}

TEST_CASE("poly json round-trip in graded-lex order") {
  CycPoly p(3);
  p.add_term({0, 0, 2}, C("i"));
  p.add_term({1, 1, 0}, C("sqrt3/2"));
  p.add_term({0, 1, 0}, C("-1/3"));
  Json j = to_json(p);
  CHECK(poly_from_json(j) == p);
  // Terms serialize in graded-lex order: degree 1 term first.
  CHECK(j.at("terms")[0].at("exp") == Json::array({0, 1, 0}));
}

TEST_CASE("numeric evaluation path") {
  CycPoly p(2);
  p.add_term({1, 1}, Cyclotomic(1));
  int digits = 40;
  std::vector<BigComplex> pt = {C("i").embed(digits), C("i").embed(digits)};
  BigComplex v = evaluate_embedded(p, pt, digits);
  CHECK((v.re - BigFloat::from_long(-1, digits)).abs().to_double() < 1e-30);
  CHECK(v.im.abs().to_double() < 1e-30);
}
