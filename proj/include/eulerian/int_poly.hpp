#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace eulerian {

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored low-to-high with no trailing zeros; the zero
/// polynomial is the empty vector and reports degree() == -1. Equality is
/// structural, which is why normalization is maintained as an invariant.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(mpz_class constant);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly monomial(mpz_class c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 marks the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Coefficient of z^i; reads as 0 beyond the degree.
  const mpz_class& coeff(std::size_t i) const;
  /// Leading coefficient; requires a nonzero polynomial.
  const mpz_class& leading() const;

  /// Multiply by z^k.
  IntPoly shifted(std::size_t k) const;
  IntPoly derivative() const;

  mpq_class eval(const mpq_class& x) const;
  /// Sign of f(x), computed with integer arithmetic only.
  int sign_at(const mpq_class& x) const;
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend IntPoly operator*(const mpz_class& c, IntPoly a) { return a *= c; }

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

  /// Human-readable rendering, e.g. "1 + 7z + 7z^2 + z^3".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exp);

/// gcd of all coefficients, nonnegative; content of 0 is 0.
mpz_class content(const IntPoly& f);
/// f divided by its content, sign-adjusted to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);
/// Quotient a / b; throws std::domain_error unless b divides a exactly.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
/// Primitive polynomial gcd with positive leading coefficient; gcd(f, 0) is
/// the primitive part of f and gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

mpz_class binomial(unsigned long n, unsigned long k);

inline IntPoly one_plus_z() { return IntPoly{1, 1}; }

}  // namespace eulerian
