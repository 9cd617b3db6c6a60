// PBW arithmetic in U(sp_2n), truncated exponentials e^{pg}, and finite
// Iwasawa-algebra elements sum lambda_alpha (G-1)^alpha with certified
// precision floors.
#ifndef SPMET_ENVELOPE_HPP
#define SPMET_ENVELOPE_HPP

#include <map>
#include <vector>

#include "spmet/metaplectic.hpp"
#include "spmet/symplectic.hpp"
#include "spmet/weyl.hpp"

namespace spmet {

// Element of U(g) in PBW order: sparse map from exponent vectors over the
// fixed sp basis order (length d) to coefficients.
class PBWElement {
 public:
  explicit PBWElement(int d) : d_(d) {}

  static PBWElement zero(int d) { return PBWElement(d); }
  static PBWElement scalar(int d, const Rational& c);
  static PBWElement one(int d) { return scalar(d, 1); }
  static PBWElement generator(BasisIndex idx, const PrimeContext& ctx);
  static PBWElement from_sp(const SpElement& x, const PrimeContext& ctx);

  int dim() const { return d_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const std::vector<int>& key) const;

  void add_term(const std::vector<int>& key, const Rational& c);

  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator*(const Rational& c) const;
  bool operator==(const PBWElement& o) const = default;

  int total_degree() const;  // max |alpha|; -1 for 0
  ExtInt valuation(const PrimeContext& ctx) const;

 private:
  int d_;
  std::map<std::vector<int>, Rational> terms_;
};

// Product in U(g): straightening by g_j g_i -> g_i g_j + [g_j, g_i], with
// the bracket taken from the structure constants. Terminates because the
// correction term has strictly smaller filtration degree.
PBWElement pbw_multiply(const PBWElement& u, const PBWElement& v,
                        const PrimeContext& ctx);

// Multiplicative extension of rho along PBW monomials.
WeylElement rho_hat(const PBWElement& u, const PrimeContext& ctx);

// Finite body plus a certified floor for everything discarded.
struct TruncatedEnvelope {
  PBWElement body;
  ExtInt tail_floor;
};

TruncatedEnvelope te_multiply(const TruncatedEnvelope& u,
                              const TruncatedEnvelope& v,
                              const PrimeContext& ctx);
TruncatedEnvelope te_sub(const TruncatedEnvelope& u, const TruncatedEnvelope& v,
                         const PrimeContext& ctx);

// e^{pg} cut at K_trunc = truncation_order(N): sum_{k < K_trunc} p^k g^k / k!
// with tail_floor >= N. Requires valuation(g) >= 0.
TruncatedEnvelope exp_p(const SpElement& g, long N, const PrimeContext& ctx);

// exp_p(g, N) - 1; the body has valuation >= 1.
TruncatedEnvelope group_minus_one(const SpElement& g, long N,
                                  const PrimeContext& ctx);

// Finite combination sum lambda_alpha (G-1)^alpha over an ordered generator
// list; exponents keyed by position in that list.
struct IwasawaElement {
  std::vector<SpElement> generators;
  std::map<std::vector<int>, Rational> terms;

  static IwasawaElement from_generators(std::vector<SpElement> gens) {
    return {std::move(gens), {}};
  }
  // full sp basis in the fixed order
  static IwasawaElement full_basis(const PrimeContext& ctx);

  void add_term(const std::vector<int>& alpha, const Rational& c);
};

// Image of zeta in the Weyl algebra at certified precision:
//   sum_alpha lambda_alpha prod_i rho_hat(group_minus_one(g_i, N').body)^{alpha_i},
// with the internal precision chosen so the certified floor is >= N.
// Throws if the floor cannot be certified.
TruncatedWeyl iwasawa_to_weyl(const IwasawaElement& zeta, long N,
                              const PrimeContext& ctx);

}  // namespace spmet

#endif
