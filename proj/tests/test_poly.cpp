#include <random>

#include "doctest.h"
#include "qwallach/poly.hpp"

using qwallach::BigInt;
using qwallach::Poly;
using qwallach::q_int;

namespace {

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-1, 6);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("add") {
  const Poly q = Poly::q();
  CHECK((Poly(1) + q) + q == Poly({1, 2}));
  CHECK(Poly({3, 0, 5}) + Poly() == Poly({3, 0, 5}));
  CHECK((q - Poly(1)) + Poly(1) == q);
  CHECK(((q - Poly(1)) + Poly(1)).degree() == 1);
  CHECK((q - q).is_zero());
}

TEST_CASE("mul") {
  const Poly q = Poly::q();
  CHECK((q - Poly(1)) * (q + Poly(1)) == Poly({-1, 0, 1}));
  CHECK((Poly({1, 2, 3}) * Poly()).is_zero());
  // schoolbook: (1 + q)(1 + q) = 1 + 2q + q^2
  CHECK(q_int(2) * q_int(2) == Poly({1, 2, 1}));
  CHECK((Poly({1, 1}) * Poly({1, -1, 1})).degree() == 3);
}

TEST_CASE("q_int") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == Poly(1));
  CHECK(q_int(3) == Poly({1, 1, 1}));
  for (unsigned k = 0; k <= 20; ++k) CHECK(q_int(k).eval(1) == BigInt(k));
}

TEST_CASE("eval") {
  CHECK(q_int(3).eval(2) == 7);
  CHECK(Poly().eval(12345) == 0);
  CHECK(q_int(7).eval(1) == 7);
  CHECK(Poly({-1, 0, 1}).eval(-3) == 8);
}

TEST_CASE("degree and normalization") {
  CHECK(Poly().degree() == -1);
  CHECK(Poly(std::vector<BigInt>{1, 0, 0}).coeffs().size() == 1);
  CHECK(Poly(std::vector<BigInt>{0, 0}) == Poly());
  CHECK(Poly::monomial(0, 4).is_zero());
  CHECK(Poly::monomial(5, 3).coeff(3) == 5);
  CHECK(Poly::monomial(5, 3).coeff(10) == 0);
}

TEST_CASE("rendering") {
  CHECK(Poly().to_string() == "0");
  CHECK(q_int(3).to_string() == "1 + 1*q + 1*q^2");
  CHECK(Poly({0, -2, 0, 4}).to_string() == "-2*q + 4*q^3");
}

TEST_CASE("coefficients do not overflow") {
  Poly p = q_int(2);
  Poly acc(1);
  for (int i = 0; i < 200; ++i) acc *= p;
  // (1+q)^200 at q = 1 is 2^200.
  BigInt expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, 200);
  CHECK(acc.eval(1) == expected);
  CHECK(acc.coeff(100) > BigInt("1000000000000000000000000000000"));
}

TEST_CASE("ring axioms and evaluation homomorphism on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> point(-50, 50);
  for (int trial = 0; trial < 300; ++trial) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    const BigInt x = point(rng);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
  }
}
