#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goodinv/cycexpr.hpp"
#include "goodinv/cyclotomic.hpp"
#include "goodinv/json_io.hpp"
#include "goodinv/rationalize.hpp"

using namespace goodinv;

namespace {

Cyclotomic random_cyc(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rat> c(euler_phi(order));
  for (Rat& r : c) {
    r = Rat(num(rng), den(rng));
    r.canonicalize();
  }
  return Cyclotomic(order, std::move(c));
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(24) == 8);
  // Phi_12 = x^4 - x^2 + 1
  const auto& p12 = cyclotomic_polynomial(12);
  CHECK(p12 == std::vector<Int>{1, 0, -1, 0, 1});
  // Phi_24 = x^8 - x^4 + 1
  const auto& p24 = cyclotomic_polynomial(24);
  CHECK(p24.size() == 9);
  CHECK(p24[0] == 1);
  CHECK(p24[4] == -1);
  CHECK(p24[8] == 1);
}

TEST_CASE("primitive root powers: zeta_24^6 = i") {
  Cyclotomic z = Cyclotomic::root_of_unity(24, 1);
  Cyclotomic acc = Cyclotomic::one(24);
  for (int k = 0; k < 6; ++k) acc = acc * z;
  CHECK(acc == Cyclotomic::root_of_unity(4, 1));
}

TEST_CASE("cyclotomic relation: 1 + w + w^2 = 0") {
  Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  CHECK((Cyclotomic(1) + w + w * w).is_zero());
}

TEST_CASE("sqrt(3) inside Q(zeta_12) squares to 3") {
  Cyclotomic s = Cyclotomic::root_of_unity(12, 1) + Cyclotomic::root_of_unity(12, -1);
  CHECK(s * s == Cyclotomic(3));
  CHECK(Cyclotomic::sqrt_int(3) == s);
  CHECK(s.conj() == s);  // real element fixed by conjugation
}

TEST_CASE("root_of_unity basics") {
  CHECK(Cyclotomic::root_of_unity(4, 1) == parse_cyclotomic("i", 4));
  CHECK(Cyclotomic::root_of_unity(12, 12) == Cyclotomic(1));
  for (int n : {3, 4, 6, 8, 12, 24}) {
    Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
    CHECK(z.pow(n) == Cyclotomic(1));
    CHECK(z.multiplicative_order(2 * n) == n);
    // The n-th cyclotomic polynomial vanishes exactly at zeta_n.
    const auto& phi = cyclotomic_polynomial(n);
    Cyclotomic acc;
    for (size_t k = 0; k < phi.size(); ++k)
      acc += z.pow(static_cast<long>(k)) * Rat(phi[k]);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("conjugation") {
  Cyclotomic z12 = Cyclotomic::root_of_unity(12, 1);
  CHECK(z12.conj() == z12.pow(11));
  Cyclotomic r(Rat(7, 3));
  CHECK(r.conj() == r);
  Cyclotomic any = parse_cyclotomic("2/3 + i*sqrt2 - z24^5", 24);
  CHECK(any.conj().conj() == any);
  CHECK((any.conj() * any).is_real());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int order : {4, 8, 12, 24}) {
    for (int iter = 0; iter < 1000; ++iter) {
      Cyclotomic a = random_cyc(rng, order);
      Cyclotomic b = random_cyc(rng, order);
      Cyclotomic c = random_cyc(rng, order);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("field division") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    Cyclotomic a = random_cyc(rng, 24);
    Cyclotomic b = random_cyc(rng, 24);
    if (b.is_zero()) continue;
    CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), std::domain_error);
}

TEST_CASE("mixed-order arithmetic promotes through the lcm") {
  Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic prod = w * i;  // zeta_12^7 up to identification
  CHECK(prod.order() == 12);
  CHECK(prod == Cyclotomic::root_of_unity(12, 7));
  CHECK(w.to_order(24) == w);
}

TEST_CASE("embedding accuracy") {
  int digits = 60;
  BigFloat tol = BigFloat::pow10(-50, digits);
  // 1 -> 1 exactly, zeta_4 -> i exactly.
  BigComplex one = Cyclotomic(1).embed(digits);
  CHECK(one.re.cmp(BigFloat::from_long(1, digits)) == 0);
  CHECK(one.im.is_zero());
  BigComplex ii = Cyclotomic::root_of_unity(4, 1).embed(digits);
  CHECK((ii.re.abs().cmp(tol) < 0));
  CHECK(((ii.im - BigFloat::from_long(1, digits)).abs().cmp(tol) < 0));
  // sqrt(2) as zeta_8 + zeta_8^{-1}: compare against Newton's iteration.
  BigComplex s2 = Cyclotomic::sqrt_int(2).embed(digits);
  BigFloat x = BigFloat::from_rat(Rat(3, 2), digits);
  for (int k = 0; k < 12; ++k) {
    BigFloat two = BigFloat::from_long(2, digits);
    x = (x + two / x) / two;
  }
  CHECK((s2.re - x).abs().cmp(tol) < 0);
  // zeta_24 at 30+ digits: 0.96593 + 0.25882i.
  BigComplex z24 = Cyclotomic::root_of_unity(24, 1).embed(digits);
  CHECK((z24.re - BigFloat::from_rat(Rat(96593, 100000), digits)).abs().to_double() < 1e-5);
  CHECK((z24.im - BigFloat::from_rat(Rat(25882, 100000), digits)).abs().to_double() < 1e-5);
}

TEST_CASE("embed is approximately multiplicative and additive") {
  std::mt19937_64 rng(4247);
  int digits = 40;
  BigFloat bound = BigFloat::pow10(5 - digits, digits);
  for (int iter = 0; iter < 50; ++iter) {
    Cyclotomic a = random_cyc(rng, 24);
    Cyclotomic b = random_cyc(rng, 24);
    BigComplex res_mul = (a * b).embed(digits) - a.embed(digits) * b.embed(digits);
    BigComplex res_add = (a + b).embed(digits) - (a.embed(digits) + b.embed(digits));
    CHECK(res_mul.abs().cmp(bound) < 0);
    CHECK(res_add.abs().cmp(bound) < 0);
  }
}

TEST_CASE("expression parser") {
  CHECK(parse_cyclotomic("3/4", 24) == Cyclotomic(Rat(3, 4)));
  CHECK(parse_cyclotomic("sqrt2*sqrt3", 24) == Cyclotomic::sqrt_int(6));
  CHECK(parse_cyclotomic("z8^5", 24) == Cyclotomic::root_of_unity(8, 5));
  CHECK(parse_cyclotomic("(1+i)/sqrt2", 24) == Cyclotomic::root_of_unity(8, 1));
  CHECK(parse_cyclotomic("-sqrt6/9", 24) == Cyclotomic::sqrt_int(6) * Rat(-1, 9));
  CHECK(parse_cyclotomic("w^2", 24) == Cyclotomic::root_of_unity(3, 2));
  CHECK_THROWS(parse_cyclotomic("3 +", 24));
}

TEST_CASE("sqrt_int general values") {
  for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 12L, 18L}) {
    Cyclotomic s = Cyclotomic::sqrt_int(n);
    CHECK(s * s == Cyclotomic(n));
    CHECK(s.embed(30).re.sign() > 0);
  }
}

TEST_CASE("serialization round-trip") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    Cyclotomic a = random_cyc(rng, 24);
    Json j = to_json(a);
    CHECK(cyclotomic_from_json(j) == a);
    CHECK(static_cast<int>(j.at("coeffs").size()) == euler_phi(24));
  }
}

TEST_CASE("rationalize recovers small-basis constants") {
  RationalizeOptions opt;
  opt.field_order = 24;
  opt.digits = 60;
  for (const char* text : {"3/4", "-sqrt2/6", "11/16*sqrt3", "-i/12", "sqrt6/9",
                           "z8^5", "-7/(2*sqrt2)", "0"}) {
    Cyclotomic expect = parse_cyclotomic(text, 24);
    auto got = rationalize_complex(expect.embed(opt.digits), opt);
    REQUIRE(got.has_value());
    CHECK(*got == expect);
  }
  // Values outside the (p/q) * zeta^k * sqrt-radical shape are rejected, not
  // guessed; callers fall back to numeric verdicts.
  Cyclotomic mixed = parse_cyclotomic("2*z8^5*(sqrt3-1)", 24);
  CHECK_FALSE(rationalize_complex(mixed.embed(opt.digits), opt).has_value());
}
