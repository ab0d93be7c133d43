#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grassmann/polynomial.hpp"

namespace grassmann {

/// Phi_t, built from x^t - 1 = prod_{d | t} Phi_d by exact division.
/// Memoized; safe to call concurrently.
IntPolynomial cyclotomic(int t);

/// [n choose m] as a polynomial in q: prod_{i=1..m} (q^(n+1-i) - 1)/(q^i - 1).
IntPolynomial gaussian_binomial_poly(int n, int m);

/// [n choose m]_q as an exact integer.
BigInt gaussian_binomial_value(int n, int m, const BigInt& q);

/// Exponents of cyclotomic factors; zero exponents are not stored.
struct CycloFactorization {
  std::map<int, int> exponents;

  int exponent(int t) const {
    auto it = exponents.find(t);
    return it == exponents.end() ? 0 : it->second;
  }
  /// prod Phi_t^e over e > 0, and prod Phi_t^(-e) over e < 0.
  IntPolynomial numerator() const;
  IntPolynomial denominator() const;
};

/// Exponent of Phi_i in [n choose m] is floor(n/i) - floor(m/i) - floor((n-m)/i).
CycloFactorization knuth_wilf_exponents(int n, int m);

/// Clique-number polynomial: [n-m+1 choose 1] when n >= 2m, else [m+1 choose 1].
IntPolynomial omega_poly(int n, int m);

/// h(q) = [n choose m] / omega, split as f / g with f, g monic products of
/// cyclotomic polynomials, and f = g f1 + r.
struct HReport {
  int n = 0;
  int m = 0;
  int gcd_value = 0;            // gcd(m, n - m + 1)
  CycloFactorization exponents;  // exponents of h, each in {-1, 0, 1}
  IntPolynomial f;               // numerator
  IntPolynomial g;               // denominator
  IntPolynomial f1;              // quotient of f by g
  IntPolynomial r;               // remainder
  bool applicable = false;       // gcd_value >= 2
  int gcd_exponent = 0;          // exponent of Phi_gcd in h
  bool remainder_nonzero = false;
  bool exponents_in_range = false;  // all exponents in {-1, 0, 1}
  bool consistent = false;          // f * omega == [n choose m] * g

  /// When applicable: the exponent at the gcd is -1 and r != 0.
  bool criterion_holds() const {
    return !applicable || (gcd_exponent == -1 && remainder_nonzero);
  }
};

/// Requires 4 <= 2m <= n.
HReport h_report(int n, int m);

/// Reduced fraction num/den with den > 0.
struct Fraction {
  BigInt num;
  BigInt den;

  bool is_integer() const { return den == 1; }
  std::string str() const { return is_integer() ? num.str() : num.str() + "/" + den.str(); }
};

/// |V(J_q(n,m))| / omega(J_q(n,m)) evaluated exactly. Requires q a prime
/// power and 4 <= 2m <= n.
Fraction h_integrality(int n, int m, std::uint64_t q);

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

struct ScanEntry {
  std::uint64_t q = 0;
  Fraction value;
};

struct ScanReport {
  int n = 0;
  int m = 0;
  std::uint64_t q_max = 0;
  bool applicable = false;
  std::vector<ScanEntry> entries;  // ascending q
  std::optional<std::uint64_t> largest_integer_q;

  bool all_non_integer() const { return !largest_integer_q.has_value(); }
};

/// Evaluates h at every prime power q <= q_max. Evidence only: nothing here
/// bounds the threshold beyond the scanned range.
ScanReport scan_core_threshold(int n, int m, std::uint64_t q_max);

}  // namespace grassmann
