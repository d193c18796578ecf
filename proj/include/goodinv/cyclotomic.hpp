#ifndef GOODINV_CYCLOTOMIC_HPP
#define GOODINV_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "goodinv/numeric.hpp"

namespace goodinv {

int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic.
const std::vector<Int>& cyclotomic_polynomial(int n);

/// Exact element of Q(zeta_N), stored on the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th cyclotomic
/// polynomial. Mixed-order arithmetic promotes both operands to the lcm
/// of their orders.
class Cyclotomic {
  int order_ = 1;
  std::vector<Rat> c_;

public:
  Cyclotomic() : c_(1, Rat(0)) {}
  explicit Cyclotomic(const Rat& r) : c_(1, r) {}
  explicit Cyclotomic(long n) : c_(1, Rat(n)) {}
  Cyclotomic(int order, std::vector<Rat> coeffs);

  static Cyclotomic zero(int order = 1);
  static Cyclotomic one(int order = 1);
  /// zeta_n^k as an element of Q(zeta_n).
  static Cyclotomic root_of_unity(int n, long k = 1);
  /// sqrt of a positive integer, exact, in the smallest convenient
  /// cyclotomic field (via Gauss sums).
  static Cyclotomic sqrt_int(long n);

  int order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws when not rational
  bool is_real() const { return conj() == *this; }

  /// Same value viewed in Q(zeta_N); requires order() | N.
  Cyclotomic to_order(int n) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic operator*(const Rat& r) const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;
  Cyclotomic conj() const;  // complex conjugation, zeta -> zeta^{-1}

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Least k <= cap with value^k = 1, when the element is a root of unity.
  std::optional<int> multiplicative_order(int cap) const;

  BigComplex embed(int digits) const;
  std::string to_string() const;
  /// Canonical key "N|c0|c1|..." for hashing; stable per order.
  std::string key() const;
};

inline Cyclotomic operator*(const Rat& r, const Cyclotomic& c) { return c * r; }

}  // namespace goodinv

#endif
