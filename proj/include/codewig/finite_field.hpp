#ifndef CODEWIG_FINITE_FIELD_HPP
#define CODEWIG_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace codewig {

bool is_prime(std::uint64_t q);

struct PrimeFieldElement {
  std::uint32_t value = 0;
  std::uint32_t q = 2;

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
};

/// Arithmetic in F_q for a prime q < 2^31. Values are reduced representatives in [0, q).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  PrimeFieldElement element(std::int64_t value) const;

  std::uint32_t reduce(std::int64_t value) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  /// Throws ParameterError for a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

 private:
  std::uint32_t q_;
};

/// Element of GF(2^m) in polynomial basis. Carries its field parameters so that
/// mixing elements of different fields is detected.
struct ExtFieldElement {
  std::uint64_t bits = 0;
  unsigned m = 0;
  std::uint64_t modulus = 0;

  friend bool operator==(const ExtFieldElement&, const ExtFieldElement&) = default;
};

ExtFieldElement operator+(const ExtFieldElement& a, const ExtFieldElement& b);
/// Carry-less product reduced by the modulus. Throws ParameterError on mismatched fields.
ExtFieldElement operator*(const ExtFieldElement& a, const ExtFieldElement& b);
ExtFieldElement pow(const ExtFieldElement& a, std::uint64_t e);

/// Absolute trace GF(2^m) -> F_2: a + a^2 + a^4 + ... + a^(2^(m-1)).
PrimeFieldElement trace(const ExtFieldElement& a);

/// True iff x has multiplicative order 2^m - 1 in F_2[x]/(modulus).
/// `modulus` holds the coefficients of x^0..x^m as bits; its degree must equal m.
bool is_primitive_poly(std::uint64_t modulus, unsigned m);

/// Degree of a nonzero polynomial over F_2 stored as bits; -1 for zero.
int poly_degree(std::uint64_t poly);

/// GF(2^m) built on a primitive modulus, validated at construction. 2 <= m <= 31.
class BinaryExtensionField {
 public:
  BinaryExtensionField(unsigned m, std::uint64_t modulus);

  /// Uses the shipped primitive modulus for m in {5, 7, 9, 11}.
  static BinaryExtensionField with_default_modulus(unsigned m);

  unsigned degree() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << m_; }

  ExtFieldElement element(std::uint64_t bits) const;
  ExtFieldElement zero() const { return element(0); }
  ExtFieldElement one() const { return element(1); }
  /// The class of x, a primitive element.
  ExtFieldElement primitive() const { return element(2); }

 private:
  unsigned m_;
  std::uint64_t modulus_;
};

/// Shipped primitive moduli: x^5+x^2+1, x^7+x+1, x^9+x^4+1, x^11+x^2+1.
std::uint64_t default_primitive_modulus(unsigned m);

/// Distinct prime factors of v, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace codewig

#endif  // CODEWIG_FINITE_FIELD_HPP
