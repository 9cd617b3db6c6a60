#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spmet/padics.hpp"

using namespace spmet;

TEST_CASE("prime context validation") {
  CHECK_NOTHROW(PrimeContext(3, 2));
  CHECK_NOTHROW(PrimeContext(7, 4));
  CHECK_THROWS_AS(PrimeContext(2, 2), std::invalid_argument);  // even
  CHECK_THROWS_AS(PrimeContext(9, 2), std::invalid_argument);  // composite
  CHECK_THROWS_AS(PrimeContext(5, 1), std::invalid_argument);  // rank too small
  CHECK(PrimeContext(3, 2).d == 10);
  CHECK(PrimeContext(3, 3).d == 21);
}

TEST_CASE("valuation basics") {
  PrimeContext ctx(3, 2);
  CHECK(valuation(Rational(0), ctx).is_infinite());
  CHECK(valuation(Rational(9, 2), ctx) == ExtInt::finite(2));
  Rational r(27, 6);
  r.canonicalize();
  CHECK(valuation(r, ctx) == ExtInt::finite(2));
  CHECK(valuation(Rational(1, 3), ctx) == ExtInt::finite(-1));
  CHECK(valuation(Rational(5), ctx) == ExtInt::finite(0));
}

TEST_CASE("valuation is multiplicative and ultrametric") {
  PrimeContext ctx(3, 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-200, 200), den(1, 60);
  for (int t = 0; t < 300; ++t) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a == 0 || b == 0) continue;
    CHECK(valuation(a * b, ctx) == valuation(a, ctx) + valuation(b, ctx));
    ExtInt va = valuation(a, ctx), vb = valuation(b, ctx);
    ExtInt vs = valuation(Rational(a + b), ctx);
    CHECK(vs >= min(va, vb).value());
    if (!(va == vb)) CHECK(vs == min(va, vb));
  }
}

TEST_CASE("factorial valuation by digit formula") {
  PrimeContext p3(3, 2), p5(5, 2);
  CHECK(factorial_valuation(0, p3) == 0);
  // 6! = 720 = 2^4 * 3^2 * 5
  CHECK(factorial_valuation(6, p3) == 2);
  // multiples of 3 and 9 in 1..9: 3 + 1
  CHECK(factorial_valuation(9, p3) == 4);

  for (const PrimeContext* ctx : {&p3, &p5})
    for (unsigned long k = 0; k <= 10000; k += (k < 200 ? 1 : 97)) {
      long direct = 0;
      for (unsigned long q = ctx->p; q <= k; q *= ctx->p) {
        direct += static_cast<long>(k / q);
        if (q > k / ctx->p) break;  // avoid overflow in q *= p
      }
      CHECK(factorial_valuation(k, *ctx) == direct);
    }
}

TEST_CASE("truncation order") {
  PrimeContext p3(3, 2), p5(5, 2);
  CHECK(truncation_order(1, p3) == 1);
  CHECK(truncation_order(3, p3) == 4);
  CHECK(truncation_order(2, p5) == 2);
  CHECK_THROWS_AS(truncation_order(0, p3), std::invalid_argument);

  for (const PrimeContext* ctx : {&p3, &p5})
    for (long N = 1; N <= 12; ++N) {
      int K = truncation_order(N, *ctx);
      // postcondition: every k >= K is discardable, K-1 (if any) is not
      for (long k = K; k <= K + 4 * N + 20; ++k)
        CHECK(k - factorial_valuation(k, *ctx) >= N);
      if (K > 1) CHECK((K - 1) - factorial_valuation(K - 1, *ctx) < N);
      CHECK(PrecisionBudget(N, *ctx).K_trunc == K);
    }
}

TEST_CASE("rational text form") {
  CHECK(rational_str(Rational(0)) == "0");
  CHECK(rational_str(Rational(-9, 2)) == "-9/2");
  CHECK(rational_str(Rational(7)) == "7");
  CHECK(rational_from_str("-9/2") == Rational(-9, 2));
  CHECK(rational_from_str("42") == Rational(42));
  Rational big = rational_from_str("123456789012345678901234567891/7");
  CHECK(big.get_den() == 7);
  CHECK(big.get_num() == Int("123456789012345678901234567891"));
  CHECK_THROWS(rational_from_str("1/x"));
}

TEST_CASE("arbitrary size arithmetic does not overflow") {
  PrimeContext ctx(3, 2);
  Rational r(1);
  for (int i = 0; i < 200; ++i) r *= Rational(3);
  CHECK(valuation(r, ctx) == ExtInt::finite(200));
  CHECK(valuation(1 / r, ctx) == ExtInt::finite(-200));
}
