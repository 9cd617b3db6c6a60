#include "spmet/padics.hpp"

namespace spmet {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

PrimeContext::PrimeContext(long p_, int n_) : p(p_), n(n_), d(2 * n_ * n_ + n_) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("PrimeContext: p must be an odd prime, got " +
                                std::to_string(p));
  if (n < 2)
    throw std::invalid_argument("PrimeContext: n must be >= 2, got " +
                                std::to_string(n));
}

long int_valuation(const Int& z, long p) {
  if (z == 0) throw std::logic_error("int_valuation of 0");
  Int reduced;
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), z.get_mpz_t(), Int(p).get_mpz_t()));
}

ExtInt valuation(const Rational& r, const PrimeContext& ctx) {
  if (r == 0) return ExtInt::infinity();
  return ExtInt::finite(int_valuation(r.get_num(), ctx.p) -
                        int_valuation(r.get_den(), ctx.p));
}

long factorial_valuation(unsigned long k, const PrimeContext& ctx) {
  unsigned long digit_sum = 0;
  for (unsigned long m = k; m > 0; m /= ctx.p) digit_sum += m % ctx.p;
  return static_cast<long>((k - digit_sum) / (ctx.p - 1));
}

int truncation_order(long N, const PrimeContext& ctx) {
  if (N < 1) throw std::invalid_argument("truncation_order: N must be >= 1");
  // Beyond this ceiling k - v_p(k!) >= N holds unconditionally, since
  // v_p(k!) <= (k-1)/(p-1).
  long ceiling = (N * (ctx.p - 1) + ctx.p - 3) / (ctx.p - 2) + 1;
  long last_bad = 0;
  for (long k = 1; k <= ceiling; ++k)
    if (k - factorial_valuation(k, ctx) < N) last_bad = k;
  return static_cast<int>(last_bad + 1);
}

PrecisionBudget::PrecisionBudget(long N_, const PrimeContext& ctx)
    : N(N_), K_trunc(truncation_order(N_, ctx)) {}

Rational rational_pow(const Rational& base, unsigned long e) {
  Rational acc(1), sq(base);
  while (e) {
    if (e & 1) acc *= sq;
    sq *= sq;
    e >>= 1;
  }
  acc.canonicalize();
  return acc;
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_str(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() <= 0)
    throw std::invalid_argument("bad rational literal (denominator): " + s);
  r.canonicalize();
  return r;
}

}  // namespace spmet
