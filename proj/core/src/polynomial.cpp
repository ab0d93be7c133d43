#include "grassmann/polynomial.hpp"

#include <algorithm>

#include "grassmann/error.hpp"

namespace grassmann {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::power_minus_one(std::size_t k) {
  std::vector<BigInt> coeffs(k + 1, 0);
  coeffs[k] += 1;
  coeffs[0] -= 1;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

std::string IntPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result{1};
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

DivRem divrem(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw_invalid("division by the zero polynomial");
  const BigInt& lead = g.leading();
  if (lead != 1 && lead != -1) throw_invalid("divisor must have leading coefficient +-1");
  std::vector<BigInt> rem = f.coeffs();
  const std::size_t dg = g.coeffs().size() - 1;
  if (rem.size() <= dg) return DivRem{IntPolynomial{}, f};
  std::vector<BigInt> quot(rem.size() - dg, 0);
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k] == 0) continue;
    const BigInt factor = rem[k] * lead;  // lead = +-1 is its own inverse
    quot[k - dg] = factor;
    for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= factor * g.coeffs()[i];
  }
  rem.resize(dg);
  return DivRem{IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
  DivRem qr = divrem(f, g);
  if (!qr.remainder.is_zero()) throw_internal("inexact polynomial division");
  return qr.quotient;
}

}  // namespace grassmann
