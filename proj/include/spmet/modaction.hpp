// Polynomial and Laurent modules at finite truncation, the Weyl action on
// them, and the exact linear-algebra machinery built from action images.
#ifndef SPMET_MODACTION_HPP
#define SPMET_MODACTION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spmet/linalg.hpp"
#include "spmet/weyl.hpp"

namespace spmet {

// Sparse element of K[X_1..X_n] or its Laurent extension; the laurent flag
// decides whether negative exponents are admitted.
class Poly {
 public:
  static Poly poly(int n) { return Poly(n, false); }
  static Poly laurent(int n) { return Poly(n, true); }
  static Poly monomial(int n, const std::vector<int>& exp, const Rational& c,
                       bool laurent = false);
  static Poly one(int n, bool laurent = false);

  int vars() const { return n_; }
  bool is_laurent() const { return laurent_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const std::vector<int>& exp) const;

  void add_term(const std::vector<int>& exp, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const = default;

 private:
  Poly(int n, bool laurent) : n_(n), laurent_(laurent) {}
  int n_;
  bool laurent_;
  std::map<std::vector<int>, Rational> terms_;
};

using LaurentPoly = Poly;

// Convolution product; the result is Laurent when either factor is.
Poly poly_multiply(const Poly& a, const Poly& b);

// x^alpha d^beta . X^gamma = prod_i gamma_i (gamma_i - 1) ... (gamma_i -
// beta_i + 1) X^{gamma - beta + alpha}; the falling factorial vanishes when
// 0 <= gamma_i < beta_i and stays valid for negative gamma_i.
Poly act(const WeylElement& w, const Poly& f);

// min coefficient valuation; +inf for 0
ExtInt module_valuation(const Poly& f, const PrimeContext& ctx);

// max |gamma| over the support (|.| sums absolute values); -1 for 0
int total_degree(const Poly& f);

// Monomial window: degree cap plus optional per-coordinate bounds.
struct Window {
  int degree_cap;
  bool laurent = false;                          // negative exponents allowed
  std::optional<std::pair<int, int>> coord_box;  // inclusive bounds per coord

  bool contains(const std::vector<int>& exp) const;
  bool contains(const Poly& f) const;
  // all monomial exponents inside the window, in lexicographic order
  std::vector<std::vector<int>> enumerate(int n) const;
};

struct WindowEscape : std::runtime_error {
  WindowEscape(const std::string& op, const std::string& monomial)
      : std::runtime_error("window escape: operator " + op + " applied to " +
                           monomial + " leaves the codomain window"),
        op_label(op),
        monomial_label(monomial) {}
  std::string op_label, monomial_label;
};

// Matrix of action images: one column per (operator, domain monomial) pair,
// rows indexed by the codomain monomials that actually occur.
struct ActionMatrix {
  std::vector<std::vector<int>> row_monomials;
  std::vector<std::string> col_labels;
  RatMatrix entries;

  std::string to_matrix_market() const;
};

enum class WindowPolicy {
  strict,   // any image outside the window throws WindowEscape
  project,  // images are projected onto the window (sound for full-rank
            // conclusions only; a projected column that stays independent
            // certifies independence of the original)
};

// Column (op, m) holds the coefficient vector of act(op, m). Assembly is
// OpenMP-parallel per column; the serial variant is the reference.
ActionMatrix action_matrix(const std::vector<WeylElement>& ops,
                           const std::vector<Poly>& domain,
                           const Window& codomain_window,
                           WindowPolicy policy = WindowPolicy::strict);
ActionMatrix action_matrix_serial(const std::vector<WeylElement>& ops,
                                  const std::vector<Poly>& domain,
                                  const Window& codomain_window,
                                  WindowPolicy policy = WindowPolicy::strict);

std::size_t exact_rank(const ActionMatrix& m);

struct IndependenceResult {
  bool independent;
  std::vector<Rational> kernel_witness;  // nonempty iff dependent
};

// True iff no nonzero rational combination of ops annihilates every probe:
// the stacked action matrix (rows: probe x codomain monomial, columns: ops)
// has full column rank.
IndependenceResult independence_check(const std::vector<WeylElement>& ops,
                                      const std::vector<Poly>& probes,
                                      const Window& window,
                                      WindowPolicy policy = WindowPolicy::strict);

// Optional row filter for the stacked matrix (entry dropped => treated as 0);
// the faithfulness experiments use it to keep only certified coefficients.
IndependenceResult independence_check_filtered(
    const std::vector<WeylElement>& ops, const std::vector<Poly>& probes,
    const Window& window, WindowPolicy policy,
    const std::function<bool(const Rational&)>& keep_entry);

struct RecoveryBounds {
  int beta_degree_cap;   // reconstruct lambda_{alpha,beta} for |beta| <= cap
  int alpha_degree_cap;  // admissible |alpha| in the reconstructed element
};

// Rebuilds the unique Weyl element with the given probe images by the
// lexicographic staircase; images must contain every X^gamma with
// |gamma| <= beta_degree_cap. Throws when no element within the bounds fits.
WeylElement coefficient_recovery(
    const std::map<std::vector<int>, Poly>& images, const RecoveryBounds& bounds,
    int n);

}  // namespace spmet

#endif
