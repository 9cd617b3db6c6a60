// Exact rational arithmetic with p-adic valuations and truncation bookkeeping.
#ifndef SPMET_PADICS_HPP
#define SPMET_PADICS_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace spmet {

using Int = mpz_class;
using Rational = mpq_class;  // canonical: gcd(num,den)=1, den>0, 0 = 0/1

// Parameters fixed for a whole computation: an odd prime p and the rank n
// of sp_2n, with d = 2n^2 + n the dimension of the Lie algebra.
struct PrimeContext {
  long p;
  int n;
  int d;

  PrimeContext(long p_, int n_);
};

// Integer extended with +infinity, the valuation of 0.
class ExtInt {
 public:
  static ExtInt infinity() { return ExtInt(true, 0); }
  static ExtInt finite(long v) { return ExtInt(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw std::logic_error("ExtInt: value() of +inf");
    return v_;
  }

  ExtInt operator+(const ExtInt& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return finite(v_ + o.v_);
  }
  ExtInt operator+(long k) const { return infinite_ ? *this : finite(v_ + k); }

  friend ExtInt min(const ExtInt& a, const ExtInt& b) { return a <= b ? a : b; }

  bool operator==(const ExtInt& o) const {
    return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
  }
  std::strong_ordering operator<=>(const ExtInt& o) const {
    if (infinite_ && o.infinite_) return std::strong_ordering::equal;
    if (infinite_) return std::strong_ordering::greater;
    if (o.infinite_) return std::strong_ordering::less;
    return v_ <=> o.v_;
  }
  bool operator>=(long k) const { return infinite_ || v_ >= k; }

  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

 private:
  ExtInt(bool inf, long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long v_;
};

// v_p of a nonzero integer.
long int_valuation(const Int& z, long p);

// v_p(r) = v_p(num) - v_p(den); +inf iff r = 0.
ExtInt valuation(const Rational& r, const PrimeContext& ctx);

// v_p(k!) by the Legendre digit formula (k - s_p(k)) / (p - 1).
long factorial_valuation(unsigned long k, const PrimeContext& ctx);

// Smallest K such that k - v_p(k!) >= N for every k >= K; the postcondition
// is verified by scanning up to the ceiling N(p-1)/(p-2) + 1.
int truncation_order(long N, const PrimeContext& ctx);

// A certified truncation scale: every discarded series term of exp(p g)
// has valuation >= N once the series is cut at K_trunc.
struct PrecisionBudget {
  long N;
  int K_trunc;

  PrecisionBudget(long N_, const PrimeContext& ctx);
};

Rational rational_pow(const Rational& base, unsigned long e);

// Text form "num/den", "/den" omitted when den = 1.
std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

}  // namespace spmet

#endif
