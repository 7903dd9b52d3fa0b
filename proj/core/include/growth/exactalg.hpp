#pragma once

// Exact univariate arithmetic over Z: polynomials in t and normalized
// rational functions, with truncated power-series expansion.

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace growth {

using BigInt = mpz_class;

/// Dense integer polynomial in t. The zero polynomial has no coefficients;
/// otherwise the last stored coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, unsigned degree);
  /// t^d
  static IntPoly t_power(unsigned degree) { return monomial(1, degree); }
  /// 1 - t^k
  static IntPoly one_minus_t_power(unsigned k);
  /// 1 + t + ... + t^(k-1), i.e. the q-integer [k]_t
  static IntPoly q_integer(unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return int(coeffs_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  IntPoly primitive_part() const;
  /// Multiply by t^d.
  IntPoly shifted(unsigned d) const;
  /// Divide by t^d; requires valuation() >= d.
  IntPoly unshifted(unsigned d) const;
  IntPoly scaled(const BigInt& c) const;
  /// Exact division of every coefficient by c.
  IntPoly divided_exact(const BigInt& c) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Quotient over Z when b divides a exactly in Z[t]; nullopt otherwise.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Rational function num/den in canonical form: coprime over Q, jointly
/// content-reduced, and the lowest nonzero coefficient of den positive.
class RatFun {
 public:
  RatFun() : den_(IntPoly::constant(1)) {}
  RatFun(IntPoly num);  // NOLINT(google-explicit-constructor)
  RatFun(IntPoly num, IntPoly den);
  static RatFun constant(long c) { return RatFun(IntPoly::constant(c)); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// den(0) != 0, so the function has a power-series expansion at t = 0.
  bool is_power_series() const { return den_.coefficient(0) != 0; }
  /// Polynomial when den is a nonzero constant dividing all of num.
  std::optional<IntPoly> as_polynomial() const;

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  /// Cross-multiplication test; canonical form makes this agree with member-wise equality.
  friend bool operator==(const RatFun& a, const RatFun& b);

 private:
  struct Unchecked {};
  RatFun(IntPoly num, IntPoly den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  IntPoly num_;
  IntPoly den_;
};

enum class ArithOp { add, sub, mul, div };

RatFun arith(const RatFun& a, const RatFun& b, ArithOp op);

/// Coefficients c_0..c_N of the power series of r, via the recurrence given by den.
/// Throws std::domain_error if den(0) = 0 or a coefficient is not integral.
std::vector<BigInt> expand(const RatFun& r, unsigned n);

/// r * t^d; negative d multiplies the denominator by t^-d.
RatFun monomial_shift(const RatFun& r, int d);

/// Cauchy product truncated at degree n (used to compare truncated series).
std::vector<BigInt> truncated_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b, unsigned n);

std::vector<BigInt> poly_coefficients(const IntPoly& p, unsigned n);

}  // namespace growth
