#ifndef GOODINV_RATIONALIZE_HPP
#define GOODINV_RATIONALIZE_HPP

#include <optional>

#include "goodinv/cyclotomic.hpp"

namespace goodinv {

struct RationalizeOptions {
  int field_order = 24;   // rationalize into Q(zeta_lcm(field_order, 24))
  int digits = 60;
  long max_den = 1000000;
};

/// Reconstruct an exact cyclotomic value from its numeric embedding.
/// Searches coefficients of the form (p/q) * zeta^k * s with
/// s in {1, sqrt2, sqrt3, sqrt6} and |q| <= max_den, then certifies the
/// candidate by re-embedding. Returns nothing on failure.
std::optional<Cyclotomic> rationalize_complex(const BigComplex& v,
                                              const RationalizeOptions& opt);

}  // namespace goodinv

#endif
