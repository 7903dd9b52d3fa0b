#include "growth/exactalg.hpp"

#include <stdexcept>
#include <utility>

namespace growth {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, unsigned degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_t_power(unsigned k) {
  if (k == 0) return {};
  std::vector<BigInt> v(k + 1);
  v[0] = 1;
  v[k] = -1;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::q_integer(unsigned k) { return IntPoly(std::vector<BigInt>(k, BigInt(1))); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return int(i);
  return -1;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  return divided_exact(c);
}

IntPoly IntPoly::shifted(unsigned d) const {
  if (is_zero() || d == 0) return *this;
  std::vector<BigInt> v(d);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  IntPoly out;
  out.coeffs_ = std::move(v);
  return out;
}

IntPoly IntPoly::unshifted(unsigned d) const {
  if (d == 0 || is_zero()) return *this;
  if (valuation() < int(d)) throw std::domain_error("IntPoly::unshifted: not divisible by t^d");
  IntPoly out;
  out.coeffs_.assign(coeffs_.begin() + d, coeffs_.end());
  return out;
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  if (c == 0) return {};
  IntPoly out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

IntPoly IntPoly::divided_exact(const BigInt& c) const {
  if (c == 0) throw std::domain_error("IntPoly::divided_exact: division by zero");
  if (c == 1) return *this;
  IntPoly out = *this;
  for (auto& x : out.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out = a;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(v));
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  std::vector<BigInt> q(std::size_t(a.degree() - db + 1));
  const BigInt& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    BigInt& top = rem[std::size_t(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[std::size_t(k + j)].get_mpz_t(), c.get_mpz_t(), b.coeffs()[std::size_t(j)].get_mpz_t());
    q[std::size_t(k)] = std::move(c);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int steps = a.degree() - db + 1;
  int dr = a.degree();
  while (dr >= db) {
    BigInt lead = r[std::size_t(dr)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[std::size_t(dr - db + j)].get_mpz_t(), lead.get_mpz_t(), b.coeffs()[std::size_t(j)].get_mpz_t());
    --steps;
    while (dr >= 0 && r[std::size_t(dr)] == 0) --dr;
    r.resize(std::size_t(dr + 1));
  }
  IntPoly out(std::move(r));
  if (steps > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), unsigned(steps));
    out = out.scaled(f);
  }
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPoly::constant(1);
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(IntPoly num) : num_(std::move(num)), den_(IntPoly::constant(1)) { normalize(); }

RatFun::RatFun(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = *exact_quotient(num_, g);
      den_ = *exact_quotient(den_, g);
    }
  }
  BigInt c = num_.content();
  BigInt cd = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (den_.coefficient(std::size_t(den_.valuation())) < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided_exact(c);
    den_ = den_.divided_exact(c);
  }
}

std::optional<IntPoly> RatFun::as_polynomial() const {
  if (den_.degree() != 0) return std::nullopt;
  const BigInt& d = den_.leading();
  for (const auto& c : num_.coeffs())
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
  return num_.divided_exact(d);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_, RatFun::Unchecked{}); }

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFun arith(const RatFun& a, const RatFun& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("arith: unknown operation");
}

std::vector<BigInt> expand(const RatFun& r, unsigned n) {
  const IntPoly& den = r.den();
  const BigInt d0 = den.coefficient(0);
  if (d0 == 0) throw std::domain_error("expand: not a power series at 0");
  std::vector<BigInt> c(n + 1);
  const int dd = den.degree();
  BigInt acc;
  for (unsigned k = 0; k <= n; ++k) {
    acc = r.num().coefficient(k);
    const int top = std::min<int>(int(k), dd);
    for (int j = 1; j <= top; ++j) {
      const BigInt& dj = den.coeffs()[std::size_t(j)];
      if (dj != 0) mpz_submul(acc.get_mpz_t(), dj.get_mpz_t(), c[k - unsigned(j)].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
      throw std::domain_error("expand: expansion has a non-integral coefficient");
    mpz_divexact(c[k].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return c;
}

RatFun monomial_shift(const RatFun& r, int d) {
  if (d == 0 || r.is_zero()) return r;
  if (d > 0) return RatFun(r.num().shifted(unsigned(d)), r.den());
  return RatFun(r.num(), r.den().shifted(unsigned(-d)));
}

std::vector<BigInt> truncated_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b, unsigned n) {
  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

std::vector<BigInt> poly_coefficients(const IntPoly& p, unsigned n) {
  std::vector<BigInt> out(n + 1);
  for (unsigned i = 0; i <= n; ++i) out[i] = p.coefficient(i);
  return out;
}

}  // namespace growth
