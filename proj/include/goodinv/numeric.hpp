#ifndef GOODINV_NUMERIC_HPP
#define GOODINV_NUMERIC_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

namespace goodinv {

using Rat = mpq_class;
using Int = mpz_class;

/// Arbitrary-precision real backed by MPFR. Precision is tracked per value;
/// binary operations carry the larger operand precision.
class BigFloat {
  mpfr_t v_;

public:
  BigFloat();
  explicit BigFloat(long prec_bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static long bits_for_digits(int digits);
  static BigFloat from_long(long x, int digits);
  static BigFloat from_rat(const Rat& r, int digits);
  static BigFloat pi(int digits);
  static BigFloat pow10(long e, int digits);  // 10^e

  long prec_bits() const { return mpfr_get_prec(v_); }
  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw() { return v_; }

  BigFloat operator+(const BigFloat& o) const;
  BigFloat operator-(const BigFloat& o) const;
  BigFloat operator*(const BigFloat& o) const;
  BigFloat operator/(const BigFloat& o) const;
  BigFloat operator-() const;

  BigFloat sqrt() const;  // requires nonnegative value
  BigFloat abs() const;
  BigFloat pow_si(long e) const;
  BigFloat cos() const;
  BigFloat sin() const;
  BigFloat floor() const;
  Int to_int_floor() const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;
};

/// Complex number over BigFloat.
class BigComplex {
public:
  BigFloat re, im;

  BigComplex() = default;
  explicit BigComplex(long x);
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  static BigComplex from_rat(const Rat& r, int digits);
  static BigComplex zero(int digits);
  static BigComplex one(int digits);

  BigComplex operator+(const BigComplex& o) const;
  BigComplex operator-(const BigComplex& o) const;
  BigComplex operator*(const BigComplex& o) const;
  BigComplex operator/(const BigComplex& o) const;
  BigComplex operator-() const;
  BigComplex conj() const;
  BigComplex pow_si(long e) const;

  BigFloat norm() const;  // re^2 + im^2
  BigFloat abs() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool operator==(const BigComplex& o) const {
    return re.cmp(o.re) == 0 && im.cmp(o.im) == 0;
  }
  std::string to_string(int digits = 20) const;
};

/// Nearest rational p/q to x with q <= max_den and |x - p/q| < eps,
/// via continued fractions. Returns nothing when no convergent qualifies.
std::optional<Rat> rational_reconstruct(const BigFloat& x, const Int& max_den,
                                        const BigFloat& eps);

}  // namespace goodinv

#endif
