#include "codewig/finite_field.hpp"

#include <bit>
#include <string>

#include "codewig/errors.hpp"

namespace codewig {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (std::uint32_t{1} << 31) || !is_prime(q)) {
    throw ParameterError("alphabet size " + std::to_string(q) + " is not a prime below 2^31");
  }
}

PrimeFieldElement PrimeField::element(std::int64_t value) const { return {reduce(value), q_}; }

std::uint32_t PrimeField::reduce(std::int64_t value) const {
  auto r = value % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>((std::uint64_t{a} + b) % q_);
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>((std::uint64_t{a} + q_ - b) % q_);
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % q_);
}

std::uint32_t PrimeField::neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t result = 1 % q_;
  std::uint64_t base = a % q_;
  while (e > 0) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % q_ == 0) throw ParameterError("zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

int poly_degree(std::uint64_t poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

namespace {

// Carry-less product of two reduced operands, reduced by `modulus` of degree m.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, unsigned m) {
  const std::uint64_t top = std::uint64_t{1} << m;
  std::uint64_t result = 0;
  while (b != 0) {
    if (b & 1) result ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return result;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t modulus, unsigned m) {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, modulus, m);
    a = mulmod(a, a, modulus, m);
    e >>= 1;
  }
  return result;
}

void require_same_field(const ExtFieldElement& a, const ExtFieldElement& b) {
  if (a.m != b.m || a.modulus != b.modulus) {
    throw ParameterError("GF(2^m) operands belong to different fields");
  }
}

}  // namespace

ExtFieldElement operator+(const ExtFieldElement& a, const ExtFieldElement& b) {
  require_same_field(a, b);
  return {a.bits ^ b.bits, a.m, a.modulus};
}

ExtFieldElement operator*(const ExtFieldElement& a, const ExtFieldElement& b) {
  require_same_field(a, b);
  return {mulmod(a.bits, b.bits, a.modulus, a.m), a.m, a.modulus};
}

ExtFieldElement pow(const ExtFieldElement& a, std::uint64_t e) {
  return {powmod(a.bits, e, a.modulus, a.m), a.m, a.modulus};
}

PrimeFieldElement trace(const ExtFieldElement& a) {
  std::uint64_t sum = 0;
  std::uint64_t term = a.bits;
  for (unsigned i = 0; i < a.m; ++i) {
    sum ^= term;
    term = mulmod(term, term, a.modulus, a.m);
  }
  // The trace lies in the prime subfield {0, 1}.
  return {static_cast<std::uint32_t>(sum & 1), 2};
}

bool is_primitive_poly(std::uint64_t modulus, unsigned m) {
  if (m < 2 || m > 31 || poly_degree(modulus) != static_cast<int>(m)) {
    throw ParameterError("modulus degree does not match m = " + std::to_string(m));
  }
  if ((modulus & 1) == 0) return false;  // x divides the modulus
  const std::uint64_t group_order = (std::uint64_t{1} << m) - 1;
  if (powmod(2, group_order, modulus, m) != 1) return false;
  for (auto r : prime_factors(group_order)) {
    if (powmod(2, group_order / r, modulus, m) == 1) return false;
  }
  return true;
}

std::uint64_t default_primitive_modulus(unsigned m) {
  switch (m) {
    case 5: return 0b100101;                   // x^5 + x^2 + 1
    case 7: return 0b10000011;                 // x^7 + x + 1
    case 9: return 0b1000010001;               // x^9 + x^4 + 1
    case 11: return 0b100000000101;            // x^11 + x^2 + 1
    default:
      throw ParameterError("no shipped primitive modulus for m = " + std::to_string(m));
  }
}

BinaryExtensionField::BinaryExtensionField(unsigned m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
  if (!is_primitive_poly(modulus, m)) {
    throw ParameterError("modulus is not primitive for m = " + std::to_string(m));
  }
}

BinaryExtensionField BinaryExtensionField::with_default_modulus(unsigned m) {
  return BinaryExtensionField(m, default_primitive_modulus(m));
}

ExtFieldElement BinaryExtensionField::element(std::uint64_t bits) const {
  if (bits >= size()) throw ParameterError("element does not fit in GF(2^m)");
  return {bits, m_, modulus_};
}

}  // namespace codewig
