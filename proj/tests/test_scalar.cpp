#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torsor/element.hpp"  // ParseError
#include "torsor/scalar.hpp"

using namespace torsor;

namespace {

// Independent oracle for the balanced q-integer: [n]_d expands to the
// geometric sum q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)} for n >= 0.
Scalar q_integer_oracle(long n, int d) {
  if (n < 0) return -q_integer_oracle(-n, d);
  Scalar sum(0);
  for (long k = 0; k < n; ++k) sum += Scalar::q_power(static_cast<int>(d * (n - 1 - 2 * k)));
  return sum;
}

// L'Hopital oracle on the unreduced ratio (q^{2dn} - 1) / (q^{d(n+1)} - q^{d(n-1)}),
// the positive-power form of (q_d^n - q_d^-n)/(q_d - q_d^-1), at q = 1.
Rational q_integer_limit_oracle(long n, int d) {
  auto derivative_at_one = [](const ZPoly& p) {
    Int s = 0;
    const auto& c = p.coeffs();
    for (size_t i = 1; i < c.size(); ++i) s += Int(i) * c[i];
    return s;
  };
  ZPoly num = ZPoly::monomial(Int(1), static_cast<int>(2 * d * n)) - ZPoly::one();
  ZPoly den = ZPoly::monomial(Int(1), static_cast<int>(d * (n + 1))) -
              ZPoly::monomial(Int(1), static_cast<int>(d * (n - 1)));
  REQUIRE(num.eval_one() == 0);
  REQUIRE(den.eval_one() == 0);
  Int dn = derivative_at_one(num), dd = derivative_at_one(den);
  REQUIRE(dd != 0);
  return Rational(dn, dd);
}

Scalar substitute_q_inverse(const Scalar& s) {
  auto eval = [](const ZPoly& p) {
    Scalar acc(0);
    const Scalar qinv = Scalar::q_power(-1);
    for (int i = p.degree(); i >= 0; --i) acc = acc * qinv + Scalar(p.coeffs()[i]);
    return acc;
  };
  return eval(s.num()) / eval(s.den());
}

std::mt19937_64 rng(42);

Scalar random_scalar() {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3);
  auto poly = [&]() {
    std::vector<Int> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return ZPoly(std::move(c));
  };
  ZPoly num = poly();
  ZPoly den;
  while (den.is_zero()) den = poly();
  return Scalar(num, den);
}

}  // namespace

TEST_CASE("q-integers match the stated values") {
  CHECK(q_integer(1, 3).is_one());
  CHECK(q_integer(0, 1).is_zero());
  CHECK(q_integer(2, 1) == q_integer_oracle(2, 1));
  CHECK(q_integer(2, 1).str() == "(q^2+1)/(q)");
  for (long n = -6; n <= 6; ++n)
    for (int d = 1; d <= 3; ++d) CHECK(q_integer(n, d) == q_integer_oracle(n, d));
}

TEST_CASE("q-factorials are products of q-integers") {
  CHECK(q_factorial(0, 2).is_one());
  CHECK(q_factorial(2, 1) == q_integer_oracle(2, 1));
  CHECK(q_factorial(3, 1) == q_integer_oracle(2, 1) * q_integer_oracle(3, 1));
  CHECK_THROWS_AS(q_factorial(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(q_integer(1, 0), std::invalid_argument);
}

TEST_CASE("specialization at q = 1") {
  CHECK(q_integer(2, 1).specialize_q1() == 2);
  CHECK_THROWS_AS(Scalar(ZPoly::one(), ZPoly::monomial(Int(1), 1) - ZPoly::one())
                      .specialize_q1(),
                  PoleError);
  for (long n = 1; n <= 5; ++n) {
    CHECK(q_integer(n, 1).specialize_q1() == q_integer_limit_oracle(n, 1));
    CHECK(q_integer(n, 1).specialize_q1() == Rational(n));
  }
  for (long n = 0; n <= 20; ++n)
    for (int d = 1; d <= 4; ++d) CHECK(q_integer(n, d).specialize_q1() == Rational(n));
}

TEST_CASE("q-integer symmetries") {
  for (long n = 0; n <= 8; ++n) {
    for (int d = 1; d <= 3; ++d) {
      CHECK(q_integer(-n, d) == -q_integer(n, d));
      if (n >= 1) CHECK(substitute_q_inverse(q_integer(n, d)) == q_integer(n, d));
    }
  }
}

TEST_CASE("field axioms under randomized testing") {
  for (int trial = 0; trial < 1000; ++trial) {
    Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("canonical form is reduced with a positive-leading denominator") {
  for (int trial = 0; trial < 300; ++trial) {
    Scalar a = random_scalar();
    if (a.is_zero()) {
      CHECK(a.den().is_one());
      continue;
    }
    CHECK(a.den().leading() > 0);
    CHECK(ZPoly::gcd(a.num(), a.den()).degree() == 0);
    // no shared integer content either
    using boost::multiprecision::gcd;
    CHECK(gcd(a.num().content(), a.den().content()) == 1);
  }
}

TEST_CASE("parsing the rendering grammar") {
  CHECK(Scalar::parse("(q^2+1)/(q)") == q_integer(2, 1));
  CHECK(Scalar::parse("q + q^-1") == q_integer(2, 1));
  CHECK(Scalar::parse("-2q^3").str() == "-2q^3");
  CHECK(Scalar::parse("0").is_zero());
  CHECK(Scalar::parse("5") == Scalar(5));
  CHECK(Scalar::parse("1/2") == Scalar(Rational(1, 2)));
  CHECK(Scalar::parse("q^-2") == Scalar::q_power(-2));
  CHECK(Scalar::parse("(q-1)/(q+1)") ==
        Scalar(ZPoly::monomial(Int(1), 1) - ZPoly::one(),
               ZPoly::monomial(Int(1), 1) + ZPoly::one()));
  CHECK_THROWS_AS(Scalar::parse("q +"), ParseError);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_scalar();
    CHECK(Scalar::parse(a.str()) == a);
  }
}
