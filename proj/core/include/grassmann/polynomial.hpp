#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grassmann {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial over Z, coefficients low degree first with no trailing
/// zeros. The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  /// x^k - 1
  static IntPolynomial power_minus_one(std::size_t k);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "q^4 + q^3 + 2q^2 + q + 1"
  std::string to_string(std::string_view var = "x") const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

struct DivRem {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// f = g * quotient + remainder with deg remainder < deg g. The divisor's
/// leading coefficient must be +-1 so the division stays inside Z[x].
DivRem divrem(const IntPolynomial& f, const IntPolynomial& g);

/// f / g, throwing kInternal if the remainder is nonzero.
IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace grassmann
