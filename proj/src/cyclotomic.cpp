#include "goodinv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace goodinv {

int euler_phi(int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: order must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials, quotient only; used to build
// Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
std::vector<Int> zpoly_divexact(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r = a;
  std::vector<Int> q(a.size() - b.size() + 1, Int(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    Int coef = r[i] / b.back();
    int shift = i - static_cast<int>(b.size()) + 1;
    q[shift] = coef;
    for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= coef * b[j];
  }
  return q;
}

struct CycContext {
  int order = 1;
  int phi = 1;
  std::vector<Rat> minpoly;                 // monic Phi_n, ascending
  std::vector<std::vector<Rat>> powers;     // zeta^k on the power basis, k < table size
};

const CycContext& context(int order) {
  static std::map<int, CycContext> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  CycContext ctx;
  ctx.order = order;
  ctx.phi = euler_phi(order);
  const std::vector<Int>& mp = cyclotomic_polynomial(order);
  ctx.minpoly.reserve(mp.size());
  for (const Int& z : mp) ctx.minpoly.emplace_back(z);

  int table = std::max(order, 2 * ctx.phi) + 1;
  ctx.powers.resize(table);
  for (int k = 0; k < table; ++k) {
    std::vector<Rat> v(ctx.phi, Rat(0));
    if (k < ctx.phi) {
      v[k] = 1;
    } else {
      // x^k = x * x^{k-1} reduced by the monic minimal polynomial.
      const std::vector<Rat>& prev = ctx.powers[k - 1];
      std::vector<Rat> shifted(ctx.phi + 1, Rat(0));
      for (int j = 0; j < ctx.phi; ++j) shifted[j + 1] = prev[j];
      Rat top = shifted[ctx.phi];
      for (int j = 0; j < ctx.phi; ++j) v[j] = shifted[j] - top * ctx.minpoly[j];
    }
    ctx.powers[k] = std::move(v);
  }
  return cache.emplace(order, std::move(ctx)).first->second;
}

void reduce_into(const CycContext& ctx, const std::vector<Rat>& raw, std::vector<Rat>& out) {
  out.assign(ctx.phi, Rat(0));
  for (size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    if (static_cast<int>(k) < ctx.phi) {
      out[k] += raw[k];
    } else {
      const std::vector<Rat>& pw = ctx.powers[k];
      for (int j = 0; j < ctx.phi; ++j)
        if (pw[j] != 0) out[j] += raw[k] * pw[j];
    }
  }
}

int poly_deg(const std::vector<Rat>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Remainder-producing division over Q[x].
void qpoly_divmod(std::vector<Rat> a, const std::vector<Rat>& b,
                  std::vector<Rat>& quo, std::vector<Rat>& rem) {
  int db = poly_deg(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  int da = poly_deg(a);
  quo.assign(std::max(0, da - db + 1), Rat(0));
  while (da >= db) {
    Rat c = a[da] / b[db];
    quo[da - db] = c;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    da = poly_deg(a);
  }
  rem = std::move(a);
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [](auto&& self, int m) -> const std::vector<Int>& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    std::vector<Int> acc = num;  // x^m - 1, progressively divided
    for (int d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      acc = zpoly_divexact(acc, self(self, d));
    }
    return cache.emplace(m, std::move(acc)).first->second;
  };
  return compute(compute, n);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rat> coeffs) : order_(order) {
  const CycContext& ctx = context(order);
  if (static_cast<int>(coeffs.size()) == ctx.phi) {
    c_ = std::move(coeffs);
    for (Rat& r : c_) r.canonicalize();
  } else {
    for (Rat& r : coeffs) r.canonicalize();
    reduce_into(ctx, coeffs, c_);
  }
}

Cyclotomic Cyclotomic::zero(int order) {
  return Cyclotomic(order, std::vector<Rat>(context(order).phi, Rat(0)));
}

Cyclotomic Cyclotomic::one(int order) {
  std::vector<Rat> v(context(order).phi, Rat(0));
  v[0] = 1;
  return Cyclotomic(order, std::move(v));
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
  const CycContext& ctx = context(n);
  long e = k % n;
  if (e < 0) e += n;
  std::vector<Rat> v = ctx.powers[static_cast<size_t>(e)];
  return Cyclotomic(n, std::move(v));
}

bool Cyclotomic::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::to_order(int n) const {
  if (n == order_) return *this;
  if (n % order_ != 0)
    throw std::invalid_argument("to_order: target not a multiple of current order");
  const CycContext& ctx = context(n);
  int step = n / order_;
  std::vector<Rat> out(ctx.phi, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Rat>& pw = ctx.powers[(k * step) % n];
    for (int j = 0; j < ctx.phi; ++j)
      if (pw[j] != 0) out[j] += c_[k] * pw[j];
  }
  return Cyclotomic(n, std::move(out));
}

namespace {
int join_order(int a, int b) { return std::lcm(a, b); }
}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    int n = join_order(order_, o.order_);
    return to_order(n) + o.to_order(n);
  }
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] + o.c_[i];
  return Cyclotomic(order_, std::move(v));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    int n = join_order(order_, o.order_);
    return to_order(n) - o.to_order(n);
  }
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] - o.c_[i];
  return Cyclotomic(order_, std::move(v));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    int n = join_order(order_, o.order_);
    return to_order(n) * o.to_order(n);
  }
  const CycContext& ctx = context(order_);
  std::vector<Rat> conv(2 * ctx.phi - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rat> out;
  reduce_into(ctx, conv, out);
  return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * r;
  return Cyclotomic(order_, std::move(v));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Cyclotomic(order_, std::move(v));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (is_rational()) return Cyclotomic(order_, {Rat(1) / c_[0]});
  const CycContext& ctx = context(order_);
  // Extended Euclid in Q[x] against the minimal polynomial:
  // s * value + t * Phi_N = gcd = nonzero rational.
  std::vector<Rat> r0 = ctx.minpoly, r1 = c_;
  r1.resize(ctx.phi + 1, Rat(0));
  std::vector<Rat> s0(1, Rat(0)), s1(1, Rat(1));
  while (poly_deg(r1) > 0) {
    std::vector<Rat> quo, rem;
    qpoly_divmod(r0, r1, quo, rem);
    // s2 = s0 - quo * s1
    std::vector<Rat> s2(std::max(s0.size(), quo.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < quo.size(); ++i) {
      if (quo[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quo[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (poly_deg(r1) != 0)
    throw std::domain_error("cyclotomic inverse: element not invertible");
  Rat g = r1[poly_deg(r1)];
  std::vector<Rat> inv(s1.size());
  for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / g;
  std::vector<Rat> out;
  reduce_into(ctx, inv, out);
  return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    int n = join_order(order_, o.order_);
    return to_order(n) / o.to_order(n);
  }
  return *this * o.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic acc = Cyclotomic::one(order_);
  Cyclotomic base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::conj() const {
  const CycContext& ctx = context(order_);
  std::vector<Rat> out(ctx.phi, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    size_t e = (order_ - static_cast<int>(k)) % order_;
    const std::vector<Rat>& pw = ctx.powers[e];
    for (int j = 0; j < ctx.phi; ++j)
      if (pw[j] != 0) out[j] += c_[k] * pw[j];
  }
  return Cyclotomic(order_, std::move(out));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (order_ == o.order_) return c_ == o.c_;
  int n = join_order(order_, o.order_);
  return to_order(n).c_ == o.to_order(n).c_;
}

std::optional<int> Cyclotomic::multiplicative_order(int cap) const {
  if (is_zero()) return std::nullopt;
  Cyclotomic acc = *this;
  Cyclotomic unit = Cyclotomic::one(order_);
  for (int k = 1; k <= cap; ++k) {
    if (acc == unit) return k;
    acc = acc * *this;
  }
  return std::nullopt;
}

Cyclotomic Cyclotomic::sqrt_int(long n) {
  if (n < 0) throw std::invalid_argument("sqrt_int: negative argument");
  if (n == 0) return Cyclotomic(Rat(0));
  long square = 1, rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
  }
  Cyclotomic result{Rat(square)};
  long s = rest;
  if (s % 2 == 0) {
    // sqrt(2) = zeta_8 + zeta_8^{-1}
    result = result * (Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, -1));
    s /= 2;
  }
  for (long p = 3; p <= s; p += 2) {
    if (s % p != 0) continue;
    s /= p;
    // Quadratic Gauss sum: g = sum legendre(k|p) zeta_p^k, g^2 = (-1)^{(p-1)/2} p.
    Cyclotomic g = Cyclotomic::zero(static_cast<int>(p));
    for (long k = 1; k < p; ++k) {
      long ls = 1, base = k % p, e = (p - 1) / 2;
      while (e) {  // legendre symbol via Euler's criterion
        if (e & 1) ls = (ls * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
      Cyclotomic term = Cyclotomic::root_of_unity(static_cast<int>(p), k);
      g = (ls == 1) ? g + term : g - term;
    }
    if (p % 4 == 1) {
      result = result * g;
    } else {
      // g^2 = -p, so sqrt(p) = -i * g  (sign fixed below for the product)
      result = result * g * Cyclotomic::root_of_unity(4, -1);
    }
  }
  // Gauss-sum signs are positive for the standard embedding, but fix the
  // overall sign numerically in case of composite products.
  if (result.embed(30).re.sign() < 0) result = -result;
  return result;
}

BigComplex Cyclotomic::embed(int digits) const {
  BigFloat two_pi = BigFloat::pi(digits) * BigFloat::from_long(2, digits);
  BigComplex acc = BigComplex::zero(digits);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    BigFloat angle = two_pi * BigFloat::from_rat(Rat(static_cast<long>(k), order_), digits);
    BigComplex zk{angle.cos(), angle.sin()};
    BigFloat coef = BigFloat::from_rat(c_[k], digits);
    acc = acc + BigComplex{zk.re * coef, zk.im * coef};
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    std::string term = c_[k].get_str();
    if (k > 0) {
      term += "*z" + std::to_string(order_);
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::string Cyclotomic::key() const {
  std::string out = std::to_string(order_);
  for (const Rat& r : c_) {
    out += '|';
    out += r.get_str();
  }
  return out;
}

}  // namespace goodinv
