#ifndef GOODINV_CYCEXPR_HPP
#define GOODINV_CYCEXPR_HPP

#include <string>

#include "goodinv/cyclotomic.hpp"

namespace goodinv {

/// Parse a constant expression over cyclotomic atoms. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' int)?
///   atom   := integer | 'i' | 'w' | 'z' [int] | 'sqrt' int | '(' expr ')'
/// 'i' is a primitive 4th root, 'w' a primitive cube root, 'zK' is
/// zeta_K = e^{2 pi i / K}, bare 'z' uses default_order, and 'sqrtK' is the
/// positive square root of the integer K.
Cyclotomic parse_cyclotomic(const std::string& text, int default_order);

}  // namespace goodinv

#endif
