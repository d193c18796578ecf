#include "goodinv/rationalize.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <vector>

namespace goodinv {

namespace {

struct BasisElem {
  Cyclotomic value;
  BigComplex embedded;
};

const std::vector<BasisElem>& basis_for(int order, int digits) {
  static std::map<std::pair<int, int>, std::vector<BasisElem>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(order, digits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<BasisElem> basis;
  std::vector<Cyclotomic> radicals = {
      Cyclotomic(1), Cyclotomic::sqrt_int(2), Cyclotomic::sqrt_int(3),
      Cyclotomic::sqrt_int(6)};
  for (const Cyclotomic& s : radicals)
    for (int k = 0; k < order; ++k) {
      Cyclotomic b = (Cyclotomic::root_of_unity(order, k) * s).to_order(order);
      basis.push_back({b, b.embed(digits)});
    }
  return cache.emplace(key, std::move(basis)).first->second;
}

}  // namespace

std::optional<Cyclotomic> rationalize_complex(const BigComplex& v,
                                              const RationalizeOptions& opt) {
  int order = std::lcm(opt.field_order, 24);
  int digits = opt.digits;
  BigFloat tol = BigFloat::pow10(-(digits - 12), digits);
  BigFloat accept = BigFloat::pow10(-(digits - 8), digits);
  if (v.abs().cmp(tol) < 0) return Cyclotomic::zero(order);

  Int max_den(opt.max_den);
  for (const BasisElem& b : basis_for(order, digits)) {
    BigComplex t = v / b.embedded;
    if (t.im.abs().cmp(tol) >= 0) continue;
    std::optional<Rat> q = rational_reconstruct(t.re, max_den, tol);
    if (!q) continue;
    Cyclotomic cand = b.value * *q;
    BigComplex residual = v - cand.embed(digits);
    if (residual.abs().cmp(accept) < 0) return cand;
  }
  return std::nullopt;
}

}  // namespace goodinv
