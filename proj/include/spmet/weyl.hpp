// Normal-ordered arithmetic in the Weyl algebra A_n over exact rationals.
#ifndef SPMET_WEYL_HPP
#define SPMET_WEYL_HPP

#include <map>
#include <optional>
#include <vector>

#include "spmet/padics.hpp"

namespace spmet {

// Element sum c_{alpha,beta} x^alpha d^beta, stored as a sparse map keyed by
// the concatenated exponent vector [alpha | beta] of length 2n. Normal order
// (all x before all d) is implicit in the representation; no stored zeros.
class WeylElement {
 public:
  explicit WeylElement(int n) : n_(n) {}

  static WeylElement zero(int n) { return WeylElement(n); }
  static WeylElement scalar(int n, const Rational& c);
  static WeylElement one(int n) { return scalar(n, 1); }
  // x_i resp. d_i, 1-based
  static WeylElement x(int i, int n);
  static WeylElement d(int i, int n);
  static WeylElement monomial(int n, const std::vector<int>& alpha,
                              const std::vector<int>& beta, const Rational& c);

  int vars() const { return n_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const std::vector<int>& key) const;

  void add_term(const std::vector<int>& key, const Rational& c);

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator*(const Rational& c) const;
  WeylElement operator-() const { return *this * Rational(-1); }
  bool operator==(const WeylElement& o) const = default;

  // max over terms of |alpha| + |beta|; -1 for the zero element
  int total_degree() const;
  // common |alpha| - |beta| when the element is homogeneous as an operator
  std::optional<int> operator_degree() const;

 private:
  int n_;
  std::map<std::vector<int>, Rational> terms_;
};

// Product by the closed-form convolution
//   (x^a d^b)(x^g d^e) = sum_k C(b,k) C(g,k) k! x^{a+g-k} d^{b+e-k}.
// OpenMP-parallel over the left operand's terms; exact coefficients make the
// result independent of the schedule.
WeylElement weyl_multiply(const WeylElement& u, const WeylElement& v);

// Single-threaded reference implementation of the same product.
WeylElement weyl_multiply_serial(const WeylElement& u, const WeylElement& v);

// uv - vu
WeylElement weyl_commutator(const WeylElement& u, const WeylElement& v);

// min coefficient valuation; +inf for 0
ExtInt weyl_valuation(const WeylElement& w, const PrimeContext& ctx);

// Fourier automorphism tau_i: x_i -> d_i, d_i -> -x_i, fixing the others;
// each monomial is substituted as an ordered word and renormalized.
WeylElement tau(int i, const WeylElement& w);

// tau_1 o ... o tau_n
WeylElement tau_total(const WeylElement& w);

// A Weyl element known only up to a tail of certified valuation: the true
// object is body + t with weyl_valuation(t) >= tail_floor. Arithmetic
// propagates floors by the ultrametric rules.
struct TruncatedWeyl {
  WeylElement body;
  ExtInt tail_floor;

  static TruncatedWeyl exact(WeylElement b) {
    return {std::move(b), ExtInt::infinity()};
  }
};

TruncatedWeyl tw_add(const TruncatedWeyl& u, const TruncatedWeyl& v,
                     const PrimeContext& ctx);
TruncatedWeyl tw_multiply(const TruncatedWeyl& u, const TruncatedWeyl& v,
                          const PrimeContext& ctx);
TruncatedWeyl tw_scale(const TruncatedWeyl& u, const Rational& c,
                       const PrimeContext& ctx);

}  // namespace spmet

#endif
