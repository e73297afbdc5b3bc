#include <doctest.h>

#include <set>

#include "codewig/errors.hpp"
#include "codewig/finite_field.hpp"

using namespace codewig;

TEST_CASE("prime field axioms hold for q = 7 and q = 13") {
  for (std::uint32_t q : {7u, 13u}) {
    PrimeField f(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q) == a);  // Fermat
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == (a + b) % q);
        CHECK(f.mul(a, b) == (a * b) % q);
        CHECK(f.sub(f.add(a, b), b) == a);
      }
    }
    CHECK(f.reduce(-1) == q - 1);
  }
}

TEST_CASE("prime field rejects bad orders and zero inverse") {
  CHECK_THROWS_AS(PrimeField(6), ParameterError);
  CHECK_THROWS_AS(PrimeField(1), ParameterError);
  CHECK_THROWS_AS(PrimeField(7).inv(0), ParameterError);
}

TEST_CASE("GF(2^5) multiplication is associative, distributive and has inverses") {
  const auto field = BinaryExtensionField::with_default_modulus(5);
  for (std::uint64_t a = 0; a < 32; ++a) {
    const auto ea = field.element(a);
    if (a != 0) CHECK(pow(ea, 31) == field.one());
    for (std::uint64_t b = 0; b < 32; b += 3) {
      const auto eb = field.element(b);
      CHECK(ea * eb == eb * ea);
      for (std::uint64_t c = 0; c < 32; c += 5) {
        const auto ec = field.element(c);
        CHECK((ea * eb) * ec == ea * (eb * ec));
        CHECK(ea * (eb + ec) == ea * eb + ea * ec);
      }
    }
  }
}

TEST_CASE("primitive element generates every nonzero element of GF(2^7)") {
  const auto field = BinaryExtensionField::with_default_modulus(7);
  std::set<std::uint64_t> seen;
  auto x = field.one();
  for (int i = 0; i < 127; ++i) {
    seen.insert(x.bits);
    x = x * field.primitive();
  }
  CHECK(seen.size() == 127);
  CHECK(x == field.one());
}

TEST_CASE("trace is F_2-linear and balanced") {
  for (unsigned m : {5u, 7u, 9u}) {
    const auto field = BinaryExtensionField::with_default_modulus(m);
    std::uint64_t ones = 0;
    for (std::uint64_t a = 0; a < field.size(); ++a) {
      const auto t = trace(field.element(a));
      CHECK(t.value <= 1);
      ones += t.value;
      const auto b = field.element((a * 7 + 3) % field.size());
      CHECK(trace(field.element(a) + b).value == (t.value ^ trace(b).value));
    }
    CHECK(ones == field.size() / 2);
  }
}

TEST_CASE("primitive polynomial recognition") {
  CHECK(is_primitive_poly(0b111, 2));          // x^2+x+1
  CHECK(is_primitive_poly(0b1011, 3));         // x^3+x+1
  CHECK(is_primitive_poly(0b10011, 4));        // x^4+x+1
  CHECK_FALSE(is_primitive_poly(0b11111, 4));  // x^4+x^3+x^2+x+1 is irreducible, order 5
  CHECK_FALSE(is_primitive_poly(0b10101, 4));  // (x^2+x+1)^2
  for (unsigned m : {5u, 7u, 9u, 11u}) CHECK(is_primitive_poly(default_primitive_modulus(m), m));
  CHECK_THROWS_AS(is_primitive_poly(0b1011, 4), ParameterError);
  CHECK_THROWS_AS(BinaryExtensionField(4, 0b11111), ParameterError);
  CHECK_THROWS_AS(default_primitive_modulus(6), ParameterError);
}

TEST_CASE("mixing elements of different fields is an error") {
  const auto f5 = BinaryExtensionField::with_default_modulus(5);
  const auto f7 = BinaryExtensionField::with_default_modulus(7);
  CHECK_THROWS_AS(f5.one() * f7.one(), ParameterError);
  CHECK_THROWS_AS(f5.one() + f7.one(), ParameterError);
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2047));  // 23 * 89
  CHECK(prime_factors(2047) == std::vector<std::uint64_t>{23, 89});
  CHECK(prime_factors(511) == std::vector<std::uint64_t>{7, 73});
  CHECK(poly_degree(0) == -1);
  CHECK(poly_degree(0b100101) == 5);
}
