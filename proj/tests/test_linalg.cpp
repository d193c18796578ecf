#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goodinv/cycexpr.hpp"
#include "goodinv/json_io.hpp"
#include "goodinv/linalg.hpp"

using namespace goodinv;

namespace {

Cyclotomic C(const char* s) { return parse_cyclotomic(s, 24); }

CycVector vec(std::initializer_list<const char*> entries) {
  CycVector v(static_cast<int>(entries.size()));
  int i = 0;
  for (const char* s : entries) v.e[i++] = C(s);
  return v;
}

CycMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows.begin()->size());
  CycMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* s : row) m.at(i, j++) = C(s);
    ++i;
  }
  return m;
}

// Generators of the rank-2 group with degrees 12, 6.
CycMatrix g5_r1() {
  return mat({{"w*(-1-i)/2", "w*(1-i)/2"}, {"w*(-1-i)/2", "w*(-1+i)/2"}});
}
CycMatrix g5_r2p() {
  return mat({{"w*(-1+i)/2", "w*(1-i)/2"}, {"w*(-1-i)/2", "w*(-1-i)/2"}});
}

}  // namespace

TEST_CASE("coordinate reflections") {
  CycMatrix m = reflection(CycVector::unit(3, 0), Cyclotomic(-1));
  CHECK(m == mat({{"-1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));

  // s(e_2, i) in rank 2 is diag(1, i), the r4 generator.
  CycMatrix r4 = reflection(CycVector::unit(2, 1), C("i"));
  CHECK(r4 == mat({{"1", "0"}, {"0", "i"}}));
  CHECK(matrix_order(r4, 10) == 4);

  CHECK_THROWS(reflection(CycVector(2), Cyclotomic(-1)));
  CHECK_THROWS(reflection(CycVector::unit(2, 0), Cyclotomic(1)));
}

TEST_CASE("order-3 reflection from a complex root") {
  CycVector v = vec({"w", "w^2", "1"});
  CycMatrix m = reflection(v, C("w"));
  CHECK(m.pow(3).is_identity());
  CHECK(matrix_order(m, 10) == 3);
  // The root goes to w * root; vectors orthogonal to it are fixed.
  CHECK(m * v == v * C("w"));
  CycVector raw = vec({"1", "-1", "0"});
  Cyclotomic t = hermitian(raw, v) / hermitian(v, v);
  CycVector fixed = raw - v * t;
  CHECK(hermitian(fixed, v).is_zero());
  CHECK(m * fixed == fixed);
}

TEST_CASE("reflection matrix order equals eigenvalue order") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int iter = 0; iter < 25; ++iter) {
    CycVector v(3);
    do {
      for (int i = 0; i < 3; ++i) v.e[i] = Cyclotomic(Rat(pick(rng), 1));
    } while (v.is_zero());
    for (int ord : {2, 3, 4, 6}) {
      Cyclotomic lam = Cyclotomic::root_of_unity(ord, 1);
      CHECK(matrix_order(reflection(v, lam), 10) == ord);
    }
  }
}

TEST_CASE("reflection_data recovers root line and eigenvalue") {
  CycVector v = vec({"1", "1+sqrt2", "0"});
  Cyclotomic lam = C("i");
  auto [root, ev] = reflection_data(reflection(v, lam));
  CHECK(ev == lam);
  CHECK(root == v.line_normal());
  CHECK_THROWS(reflection_data(CycMatrix::identity(3)));
}

TEST_CASE("eigenspace basics") {
  CycMatrix id = CycMatrix::identity(3);
  CHECK(eigenspace(id, Cyclotomic(1)).size() == 3);
  CHECK(eigenspace(id, Cyclotomic(2)).empty());

  // g = (r2' r1)^{-1} has zeta_12-eigenspace spanned by (1, 1).
  CycMatrix g5 = inverse(g5_r2p() * g5_r1());
  auto space = eigenspace(g5, C("z12"));
  REQUIRE(space.size() == 1);
  CHECK(space[0] == vec({"1", "1"}));
  CHECK(g5 * space[0] == space[0] * C("z12"));
  CHECK(matrix_order(g5, 20) == 12);
}

TEST_CASE("hermitian product") {
  CHECK(hermitian(CycVector::unit(2, 0), CycVector::unit(2, 1)).is_zero());
  CycVector v = vec({"1", "i"});
  CHECK(hermitian(v, v) == Cyclotomic(2));
  CHECK(hermitian(v, v).is_real());
  CycVector w = vec({"1+sqrt3", "-1-i"});
  CHECK(hermitian(v, w) == hermitian(w, v).conj());
  // Nonzero pairing against the root e_1 - e_2: a regularity witness.
  CHECK(hermitian(v, vec({"1", "-1"})) == C("1-i"));
  CHECK_THROWS(hermitian(v, CycVector(3)));
}

TEST_CASE("kernel") {
  CHECK(kernel(CycMatrix(2, 2)).size() == 2);
  CHECK(kernel(mat({{"1", "1"}, {"0", "1"}})).empty());
  CycMatrix m = mat({{"1", "2", "3"}, {"2", "4", "6"}, {"1", "1", "1"}});
  auto basis = kernel(m);
  REQUIRE(basis.size() == 1);
  CHECK((m * basis[0]).is_zero());
  // Kernel output is linearly independent: stack as rows, check rank.
  CycMatrix wide(2, 4);
  wide.at(0, 0) = Cyclotomic(1);
  wide.at(1, 0) = Cyclotomic(2);
  auto kz = kernel(wide);
  CycMatrix stack(static_cast<int>(kz.size()), 4);
  for (size_t i = 0; i < kz.size(); ++i) {
    CHECK((wide * kz[i]).is_zero());
    for (int j = 0; j < 4; ++j) stack.at(static_cast<int>(i), j) = kz[i].e[j];
  }
  CHECK(rank(stack) == static_cast<int>(kz.size()));
}

TEST_CASE("inverse and solve") {
  CycMatrix a = mat({{"1", "i"}, {"sqrt2", "3"}});
  CycMatrix ai = inverse(a);
  CHECK((a * ai).is_identity());
  CHECK((ai * a).is_identity());
  CHECK_THROWS_AS(inverse(mat({{"1", "1"}, {"1", "1"}})), std::domain_error);

  CycVector b = vec({"1", "0"});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  CHECK_FALSE(solve(mat({{"1", "1"}, {"1", "1"}}), vec({"0", "1"})).has_value());
}

TEST_CASE("matrix order of group elements") {
  CHECK(matrix_order(CycMatrix::identity(4), 5) == 1);
  CHECK(matrix_order(g5_r1(), 10) == 3);
  CHECK_THROWS_AS(matrix_order(mat({{"2"}}), 50), std::domain_error);
}

TEST_CASE("matrix and vector json round-trip") {
  CycMatrix a = mat({{"1", "i/2"}, {"sqrt2-1", "3"}});
  CHECK(matrix_from_json(to_json(a)) == a);
  CycVector v = vec({"z24^7", "-5/6"});
  CHECK(vector_from_json(to_json(v)) == v);
}
