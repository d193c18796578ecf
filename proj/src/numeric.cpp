#include "goodinv/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace goodinv {

namespace {
constexpr long kMinBits = 64;
}

BigFloat::BigFloat() { mpfr_init2(v_, kMinBits); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(long prec_bits) {
  mpfr_init2(v_, prec_bits < kMinBits ? kMinBits : prec_bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, kMinBits);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

long BigFloat::bits_for_digits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873626)) + 32;
}

BigFloat BigFloat::from_long(long x, int digits) {
  BigFloat r(bits_for_digits(digits));
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_rat(const Rat& q, int digits) {
  BigFloat r(bits_for_digits(digits));
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(int digits) {
  BigFloat r(bits_for_digits(digits));
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long e, int digits) {
  BigFloat r(bits_for_digits(digits));
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

namespace {
long join_prec(const BigFloat& a, const BigFloat& b) {
  return a.prec_bits() > b.prec_bits() ? a.prec_bits() : b.prec_bits();
}
}  // namespace

BigFloat BigFloat::operator+(const BigFloat& o) const {
  BigFloat r(join_prec(*this, o));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
  BigFloat r(join_prec(*this, o));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
  BigFloat r(join_prec(*this, o));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
  BigFloat r(join_prec(*this, o));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec_bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("BigFloat::sqrt of negative value");
  BigFloat r(prec_bits());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec_bits());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_si(long e) const {
  BigFloat r(prec_bits());
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::cos() const {
  BigFloat r(prec_bits());
  mpfr_cos(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sin() const {
  BigFloat r(prec_bits());
  mpfr_sin(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::floor() const {
  BigFloat r(prec_bits());
  mpfr_floor(r.v_, v_);
  return r;
}

Int BigFloat::to_int_floor() const {
  mpz_class z;
  mpfr_t f;
  mpfr_init2(f, prec_bits());
  mpfr_floor(f, v_);
  mpfr_get_z(z.get_mpz_t(), f, MPFR_RNDZ);
  mpfr_clear(f);
  return z;
}

std::string BigFloat::to_string(int digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigComplex::BigComplex(long x) : re(), im() {
  mpfr_set_si(re.raw(), x, MPFR_RNDN);
}

BigComplex BigComplex::from_rat(const Rat& r, int digits) {
  return {BigFloat::from_rat(r, digits), BigFloat::from_long(0, digits)};
}

BigComplex BigComplex::zero(int digits) {
  return {BigFloat::from_long(0, digits), BigFloat::from_long(0, digits)};
}

BigComplex BigComplex::one(int digits) {
  return {BigFloat::from_long(1, digits), BigFloat::from_long(0, digits)};
}

BigComplex BigComplex::operator+(const BigComplex& o) const {
  return {re + o.re, im + o.im};
}

BigComplex BigComplex::operator-(const BigComplex& o) const {
  return {re - o.re, im - o.im};
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
  BigFloat d = o.norm();
  if (d.is_zero()) throw std::domain_error("BigComplex division by zero");
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigComplex BigComplex::operator-() const { return {-re, -im}; }

BigComplex BigComplex::conj() const { return {re, -im}; }

BigComplex BigComplex::pow_si(long e) const {
  long prec = re.prec_bits();
  BigComplex base = *this;
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigComplex acc{BigFloat(prec), BigFloat(prec)};
  mpfr_set_si(acc.re.raw(), 1, MPFR_RNDN);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  if (inv) {
    BigComplex one_{BigFloat(prec), BigFloat(prec)};
    mpfr_set_si(one_.re.raw(), 1, MPFR_RNDN);
    acc = one_ / acc;
  }
  return acc;
}

BigFloat BigComplex::norm() const { return re * re + im * im; }

BigFloat BigComplex::abs() const { return norm().sqrt(); }

std::string BigComplex::to_string(int digits) const {
  return re.to_string(digits) + (im.sign() < 0 ? " - " : " + ") +
         im.abs().to_string(digits) + "i";
}

std::optional<Rat> rational_reconstruct(const BigFloat& x, const Int& max_den,
                                        const BigFloat& eps) {
  // Convergents p_k/q_k of the continued fraction of x.
  BigFloat rem = x;
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 200; ++iter) {
    Int a = rem.to_int_floor();
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > max_den) return std::nullopt;
    Rat cand(p2, q2);
    cand.canonicalize();
    BigFloat err = (x - BigFloat::from_rat(cand, 5 + static_cast<int>(x.prec_bits() / 3))).abs();
    if (err.cmp(eps) < 0) return cand;
    BigFloat frac = rem - rem.floor();
    if (frac.is_zero()) return std::nullopt;
    BigFloat one = BigFloat::from_long(1, 10);
    rem = one / frac;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return std::nullopt;
}

}  // namespace goodinv
