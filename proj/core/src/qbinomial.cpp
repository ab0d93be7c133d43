#include "grassmann/qbinomial.hpp"

#include <mutex>
#include <numeric>

#include "grassmann/error.hpp"
#include "grassmann/field.hpp"

namespace grassmann {
namespace {

void require_shape(int n, int m) {
  if (m < 0 || m > n) throw_invalid("need 0 <= m <= n");
}

void require_h_shape(int n, int m) {
  if (!(4 <= 2 * m && 2 * m <= n)) throw_invalid("need 4 <= 2m <= n");
}

int floor_sum(int n, int m, int k, int i) { return n / i - m / i - k / i; }

}  // namespace

IntPolynomial cyclotomic(int t) {
  if (t < 1) throw_invalid("cyclotomic index must be >= 1");
  static std::mutex mutex;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  IntPolynomial divisor{1};
  for (int d = 1; d < t; ++d) {
    if (t % d == 0) divisor *= cyclotomic(d);
  }
  IntPolynomial phi = exact_divide(IntPolynomial::power_minus_one(static_cast<std::size_t>(t)), divisor);
  std::lock_guard lock(mutex);
  cache.emplace(t, phi);
  return phi;
}

IntPolynomial gaussian_binomial_poly(int n, int m) {
  require_shape(n, m);
  IntPolynomial num{1};
  IntPolynomial den{1};
  for (int i = 1; i <= m; ++i) {
    num *= IntPolynomial::power_minus_one(static_cast<std::size_t>(n + 1 - i));
    den *= IntPolynomial::power_minus_one(static_cast<std::size_t>(i));
  }
  return exact_divide(num, den);
}

BigInt gaussian_binomial_value(int n, int m, const BigInt& q) {
  require_shape(n, m);
  BigInt value = 1;
  for (int i = 1; i <= m; ++i) {
    value *= boost::multiprecision::pow(q, static_cast<unsigned>(n + 1 - i)) - 1;
    value /= boost::multiprecision::pow(q, static_cast<unsigned>(i)) - 1;  // exact: value is [n choose i]_q
  }
  return value;
}

IntPolynomial CycloFactorization::numerator() const {
  IntPolynomial out{1};
  for (auto [t, e] : exponents) {
    if (e > 0) out *= pow(cyclotomic(t), static_cast<unsigned>(e));
  }
  return out;
}

IntPolynomial CycloFactorization::denominator() const {
  IntPolynomial out{1};
  for (auto [t, e] : exponents) {
    if (e < 0) out *= pow(cyclotomic(t), static_cast<unsigned>(-e));
  }
  return out;
}

CycloFactorization knuth_wilf_exponents(int n, int m) {
  require_shape(n, m);
  CycloFactorization out;
  for (int i = 1; i <= n; ++i) {
    if (int e = floor_sum(n, m, n - m, i); e != 0) out.exponents[i] = e;
  }
  return out;
}

IntPolynomial omega_poly(int n, int m) {
  if (m < 1 || m >= n) throw_invalid("need 1 <= m < n");
  return n >= 2 * m ? gaussian_binomial_poly(n - m + 1, 1) : gaussian_binomial_poly(m + 1, 1);
}

HReport h_report(int n, int m) {
  require_h_shape(n, m);
  HReport report;
  report.n = n;
  report.m = m;
  report.gcd_value = std::gcd(m, n - m + 1);
  report.applicable = report.gcd_value >= 2;
  for (int j = 2; j <= n - m + 1; ++j) {
    if (int e = floor_sum(n, m, n - m + 1, j); e != 0) report.exponents.exponents[j] = e;
  }
  for (int j = n - m + 2; j <= n; ++j) {
    if (int e = floor_sum(n, m, n - m, j); e != 0) report.exponents.exponents[j] = e;
  }
  report.exponents_in_range = true;
  for (auto [t, e] : report.exponents.exponents) {
    if (e < -1 || e > 1) report.exponents_in_range = false;
  }
  report.f = report.exponents.numerator();
  report.g = report.exponents.denominator();
  DivRem qr = divrem(report.f, report.g);
  report.f1 = std::move(qr.quotient);
  report.r = std::move(qr.remainder);
  report.remainder_nonzero = !report.r.is_zero();
  report.gcd_exponent = report.exponents.exponent(report.gcd_value);
  report.consistent = report.f * omega_poly(n, m) == gaussian_binomial_poly(n, m) * report.g;
  return report;
}

Fraction h_integrality(int n, int m, std::uint64_t q) {
  require_h_shape(n, m);
  if (!prime_power(q)) throw_invalid("q is not a prime power: " + std::to_string(q));
  const BigInt base(q);
  BigInt num = gaussian_binomial_value(n, m, base);
  BigInt den = gaussian_binomial_value(n - m + 1, 1, base);
  const BigInt common = boost::multiprecision::gcd(num, den);
  return Fraction{num / common, den / common};
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (prime_power(q)) out.push_back(q);
  }
  return out;
}

ScanReport scan_core_threshold(int n, int m, std::uint64_t q_max) {
  require_h_shape(n, m);
  ScanReport report;
  report.n = n;
  report.m = m;
  report.q_max = q_max;
  report.applicable = std::gcd(m, n - m + 1) >= 2;
  for (std::uint64_t q : prime_powers_up_to(q_max)) {
    Fraction value = h_integrality(n, m, q);
    if (value.is_integer()) report.largest_integer_q = q;
    report.entries.push_back(ScanEntry{q, std::move(value)});
  }
  return report;
}

}  // namespace grassmann
