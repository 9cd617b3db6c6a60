// The Lie algebra sp_2n over exact rationals: basis, brackets, subalgebras.
#ifndef SPMET_SYMPLECTIC_HPP
#define SPMET_SYMPLECTIC_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "spmet/linalg.hpp"
#include "spmet/padics.hpp"

namespace spmet {

enum class Family : int { A = 0, B = 1, C = 2 };

// Basis symbol a_ij / b_ij / c_ij with 1-based indices. b and c are
// symmetric symbols, so their indices are normalized to i <= j on
// construction. The ordering (family, i, j) is the fixed PBW basis order:
// all a_ij lexicographic, then b_ij (i <= j), then c_ij (i <= j).
struct BasisIndex {
  Family family;
  int i, j;

  BasisIndex(Family f, int i_, int j_);

  static BasisIndex a(int i, int j) { return {Family::A, i, j}; }
  static BasisIndex b(int i, int j) { return {Family::B, i, j}; }
  static BasisIndex c(int i, int j) { return {Family::C, i, j}; }

  auto operator<=>(const BasisIndex&) const = default;

  std::string str() const;
};

// Finite rational combination of basis symbols; no stored zeros.
class SpElement {
 public:
  SpElement() = default;

  static SpElement basis(BasisIndex idx) {
    SpElement e;
    e.coeffs_[idx] = 1;
    return e;
  }

  const std::map<BasisIndex, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(BasisIndex idx) const;

  void add_term(BasisIndex idx, const Rational& c);

  SpElement operator+(const SpElement& o) const;
  SpElement operator-(const SpElement& o) const;
  SpElement operator*(const Rational& c) const;
  SpElement operator-() const { return *this * Rational(-1); }
  bool operator==(const SpElement& o) const = default;

  // min coefficient valuation; +inf for 0
  ExtInt valuation(const PrimeContext& ctx) const;

  // coordinates in the fixed basis order, length d
  std::vector<Rational> coordinates(const PrimeContext& ctx) const;

 private:
  std::map<BasisIndex, Rational> coeffs_;
};

using MatrixForm = RatMatrix;  // 2n x 2n, blocks [[A, B], [C, -A^T]]

// The complete basis in the fixed PBW order; size d = 2n^2 + n.
std::vector<BasisIndex> sp_basis(const PrimeContext& ctx);

// Position of idx in sp_basis order.
int basis_position(BasisIndex idx, const PrimeContext& ctx);

// a_ij -> e_ij - e_{j+n,i+n}; b_ij -> e_{i,j+n} + e_{j,i+n};
// c_ij -> e_{i+n,j} + e_{j+n,i}.
MatrixForm basis_matrix(BasisIndex idx, const PrimeContext& ctx);

MatrixForm sp_to_matrix(const SpElement& x, const PrimeContext& ctx);

// Inverse of sp_to_matrix; throws if m does not have the sp block structure.
SpElement matrix_to_sp(const MatrixForm& m, const PrimeContext& ctx);

// Bracket by the closed-form structure constants.
SpElement bracket_structure(const SpElement& x, const SpElement& y);

// Bracket by matrix commutator and decomposition; a decomposition failure
// means the commutator left sp and is reported by throwing.
SpElement bracket_matrix(const SpElement& x, const SpElement& y,
                         const PrimeContext& ctx);

// Catalogued subalgebra generator lists. Accepted names:
//   a  b  c  a0  s  t
//   c^K  c~^K  c+^K  c-^K  c~+^K  c~-^K     (K = 1..n)
//   a+^K  a-^K                              (K = 2..n)
//   a_K  b_K  c_K  a-_K  a+_K  apm_K        (K = 1..n; b_K, c_K need K >= 2)
// where K is spelled as a decimal integer, e.g. "c~+^2".
std::vector<BasisIndex> subalgebra(const std::string& name,
                                   const PrimeContext& ctx);

// All catalogued names valid at this n (for closure sweeps).
std::vector<std::string> subalgebra_catalog(const PrimeContext& ctx);

}  // namespace spmet

#endif
