#ifndef GOODINV_JSON_IO_HPP
#define GOODINV_JSON_IO_HPP

#include <json.hpp>

#include "goodinv/poly.hpp"

namespace goodinv {

using Json = nlohmann::ordered_json;

// Canonical wire formats:
//   Cyclotomic   {"order": N, "coeffs": ["p/q", ...]}   (phi(N) entries)
//   CycVector    [cyc, ...]
//   CycMatrix    [[cyc, ...], ...]
//   CycPoly      {"nvars": n, "terms": [{"exp": [...], "coeff": cyc}, ...]}
// Polynomial terms are emitted in graded-lex order.

Json to_json(const Cyclotomic& c);
Json to_json(const CycVector& v);
Json to_json(const CycMatrix& m);
Json to_json(const CycPoly& p);

Cyclotomic cyclotomic_from_json(const Json& j);
CycVector vector_from_json(const Json& j);
CycMatrix matrix_from_json(const Json& j);
CycPoly poly_from_json(const Json& j);

}  // namespace goodinv

#endif
