#include "goodinv/json_io.hpp"

#include <stdexcept>

namespace goodinv {

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const Rat& r : c.coeffs()) coeffs.push_back(r.get_str());
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Json to_json(const CycVector& v) {
  Json arr = Json::array();
  for (const Cyclotomic& c : v.e) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const CycMatrix& m) {
  Json arr = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(to_json(m.at(i, j)));
    arr.push_back(row);
  }
  return arr;
}

Json to_json(const CycPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  int order = j.at("order").get<int>();
  std::vector<Rat> coeffs;
  for (const Json& s : j.at("coeffs")) {
    Rat r(s.get<std::string>());
    r.canonicalize();
    coeffs.push_back(r);
  }
  if (static_cast<int>(coeffs.size()) != euler_phi(order))
    throw std::invalid_argument("cyclotomic json: coefficient count != phi(order)");
  return Cyclotomic(order, std::move(coeffs));
}

CycVector vector_from_json(const Json& j) {
  CycVector v(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v.e[i] = cyclotomic_from_json(j[i]);
  return v;
}

CycMatrix matrix_from_json(const Json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  CycMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix json: ragged rows");
    for (int k = 0; k < cols; ++k) m.at(i, k) = cyclotomic_from_json(j[i][k]);
  }
  return m;
}

CycPoly poly_from_json(const Json& j) {
  CycPoly p(j.at("nvars").get<int>());
  for (const Json& t : j.at("terms")) {
    Exp e = t.at("exp").get<Exp>();
    p.add_term(e, cyclotomic_from_json(t.at("coeff")));
  }
  return p;
}

}  // namespace goodinv
