#include "grassmann/field.hpp"

#include <algorithm>
#include <string>

#include "grassmann/error.hpp"

namespace grassmann {
namespace {

using Poly = std::vector<std::uint32_t>;  // over Z_p, low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t k = p - 2;
  while (k > 0) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g (g nonzero, any leading coefficient).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), g, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& g, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), g, p);
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base, g, p);
    base = poly_mulmod(base, base, g, p);
    k >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f monic of degree e: irreducible iff gcd(f, x^(p^k) - x) = 1 for
// k = 1..e/2, i.e. f has no factor of degree <= e/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e <= 0) return false;
  if (e == 1) return true;
  Poly x_power{0, 1};
  for (int k = 1; k <= e / 2; ++k) {
    x_power = poly_powmod(x_power, p, f, p);
    Poly diff = x_power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // x^(p^k) = x mod f: f | x^(p^k) - x
    Poly d = poly_gcd(f, diff, p);
    if (d.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> digits(Elem a, const FieldSpec& spec) {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(spec.e), 0);
  for (auto& d : out) {
    d = a % spec.p;
    a /= spec.p;
  }
  return out;
}

Elem pack(const std::vector<std::uint32_t>& coeffs, const FieldSpec& spec) {
  Elem value = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) value = value * spec.p + coeffs[i];
  return value;
}

void require_element(const FieldSpec& spec, const FieldElement& a) {
  if (!is_valid_element(spec, a)) throw_invalid("element does not belong to F_" + std::to_string(spec.q));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::pair{q, 1};
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, e};
}

FieldSpec make_field(std::uint64_t p, int e, std::uint64_t max_order) {
  if (e < 1) throw_invalid("extension degree must be >= 1");
  if (!is_prime(p)) throw_invalid("not prime: " + std::to_string(p));
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > max_order / p) throw_bound("field too large: " + std::to_string(p) + "^" + std::to_string(e));
    q *= p;
  }
  if (q > max_order) throw_bound("field too large: " + std::to_string(p) + "^" + std::to_string(e));

  FieldSpec spec;
  spec.p = static_cast<std::uint32_t>(p);
  spec.e = e;
  spec.q = static_cast<std::uint32_t>(q);
  if (e == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  // Candidates c_0..c_{e-1} in lexicographic order, c_0 most significant.
  const std::uint64_t count = q;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(static_cast<std::size_t>(e) + 1, 0);
    std::uint64_t rest = code;
    for (int i = e - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[static_cast<std::size_t>(e)] = 1;
    if (f[0] == 0) continue;  // divisible by x
    if (is_irreducible(f, spec.p)) {
      spec.modulus = std::move(f);
      return spec;
    }
  }
  throw_internal("no irreducible polynomial found");
}

FieldElement zero_element(const FieldSpec& spec) {
  return FieldElement{std::vector<std::uint32_t>(static_cast<std::size_t>(spec.e), 0)};
}

FieldElement one_element(const FieldSpec& spec) {
  FieldElement one = zero_element(spec);
  one.coeffs[0] = 1;
  return one;
}

bool is_valid_element(const FieldSpec& spec, const FieldElement& a) {
  if (a.coeffs.size() != static_cast<std::size_t>(spec.e)) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(),
                     [&](std::uint32_t c) { return c < spec.p; });
}

FieldElement add(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
  require_element(spec, a);
  require_element(spec, b);
  FieldElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % spec.p;
  }
  return out;
}

FieldElement neg(const FieldSpec& spec, const FieldElement& a) {
  require_element(spec, a);
  FieldElement out = a;
  for (auto& c : out.coeffs) c = (spec.p - c) % spec.p;
  return out;
}

FieldElement mul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
  require_element(spec, a);
  require_element(spec, b);
  Poly prod = poly_mulmod(a.coeffs, b.coeffs, spec.modulus, spec.p);
  prod.resize(static_cast<std::size_t>(spec.e), 0);
  return FieldElement{std::move(prod)};
}

FieldElement inv(const FieldSpec& spec, const FieldElement& a) {
  require_element(spec, a);
  if (a == zero_element(spec)) throw_invalid("zero has no inverse");
  // a^(q-2) by square and multiply
  FieldElement result = one_element(spec);
  FieldElement base = a;
  std::uint64_t k = spec.q - 2;
  while (k > 0) {
    if (k & 1) result = mul(spec, result, base);
    base = mul(spec, base, base);
    k >>= 1;
  }
  return result;
}

FieldElement field_arithmetic(const FieldSpec& spec, FieldOp op, const FieldElement& a,
                              const std::optional<FieldElement>& b) {
  switch (op) {
    case FieldOp::kAdd:
    case FieldOp::kMul:
      if (!b) throw_invalid("binary field operation needs a second operand");
      return op == FieldOp::kAdd ? add(spec, a, *b) : mul(spec, a, *b);
    case FieldOp::kNeg:
      return neg(spec, a);
    case FieldOp::kInv:
      return inv(spec, a);
  }
  throw_internal("unknown field operation");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint32_t q = spec_.q;
  if (q > 256) return;
  add_table_.resize(std::size_t{q} * q);
  mul_table_.resize(std::size_t{q} * q);
  neg_table_.resize(q);
  inv_table_.assign(q, 0);
  for (Elem a = 0; a < q; ++a) {
    neg_table_[a] = neg_slow(a);
    for (Elem b = 0; b < q; ++b) {
      add_table_[std::size_t{a} * q + b] = add_slow(a, b);
      mul_table_[std::size_t{a} * q + b] = mul_slow(a, b);
    }
  }
  for (Elem a = 1; a < q; ++a) {
    for (Elem b = 1; b < q; ++b) {
      if (mul_table_[std::size_t{a} * q + b] == 1) {
        inv_table_[a] = b;
        break;
      }
    }
  }
  tabled_ = true;
}

Elem Field::add_slow(Elem a, Elem b) const {
  if (spec_.e == 1) return static_cast<Elem>((std::uint64_t{a} + b) % spec_.p);
  auto da = digits(a, spec_);
  auto db = digits(b, spec_);
  for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % spec_.p;
  return pack(da, spec_);
}

Elem Field::neg_slow(Elem a) const {
  if (spec_.e == 1) return (spec_.p - a) % spec_.p;
  auto da = digits(a, spec_);
  for (auto& d : da) d = (spec_.p - d) % spec_.p;
  return pack(da, spec_);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (spec_.e == 1) return static_cast<Elem>(std::uint64_t{a} * b % spec_.p);
  Poly prod = poly_mulmod(digits(a, spec_), digits(b, spec_), spec_.modulus, spec_.p);
  prod.resize(static_cast<std::size_t>(spec_.e), 0);
  return pack(prod, spec_);
}

Elem Field::add(Elem a, Elem b) const {
  return tabled_ ? add_table_[std::size_t{a} * spec_.q + b] : add_slow(a, b);
}

Elem Field::neg(Elem a) const { return tabled_ ? neg_table_[a] : neg_slow(a); }

Elem Field::mul(Elem a, Elem b) const {
  return tabled_ ? mul_table_[std::size_t{a} * spec_.q + b] : mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw_invalid("zero has no inverse");
  if (tabled_) return inv_table_[a];
  if (spec_.e == 1) return inv_mod(a, spec_.p);
  return pow(a, std::uint64_t{spec_.q} - 2);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem result = one();
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem Field::encode(const FieldElement& a) const {
  require_element(spec_, a);
  return pack(a.coeffs, spec_);
}

FieldElement Field::decode(Elem a) const {
  if (a >= spec_.q) throw_invalid("packed element out of range");
  return FieldElement{digits(a, spec_)};
}

std::uint32_t Field::rank_of(Elem a) const {
  if (spec_.e == 1) return a;
  std::uint32_t r = 0;
  for (int i = 0; i < spec_.e; ++i) {
    r = r * spec_.p + a % spec_.p;
    a /= spec_.p;
  }
  return r;
}

Elem Field::element_at_rank(std::uint32_t r) const {
  // digit reversal is an involution
  return rank_of(r);
}

}  // namespace grassmann
