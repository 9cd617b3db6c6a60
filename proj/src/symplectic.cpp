#include "spmet/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

namespace spmet {

BasisIndex::BasisIndex(Family f, int i_, int j_) : family(f), i(i_), j(j_) {
  if (i < 1 || j < 1)
    throw std::out_of_range("BasisIndex: indices are 1-based, got (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
  // b_ij = b_ji and c_ij = c_ji are one symbol; store with i <= j
  if (family != Family::A && i > j) std::swap(i, j);
}

std::string BasisIndex::str() const {
  static const char* names[] = {"a", "b", "c"};
  return std::string(names[static_cast<int>(family)]) + "(" +
         std::to_string(i) + "," + std::to_string(j) + ")";
}

Rational SpElement::coeff(BasisIndex idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SpElement::add_term(BasisIndex idx, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = coeffs_.emplace(idx, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SpElement SpElement::operator+(const SpElement& o) const {
  SpElement r = *this;
  for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
  return r;
}

SpElement SpElement::operator-(const SpElement& o) const {
  SpElement r = *this;
  for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, -c);
  return r;
}

SpElement SpElement::operator*(const Rational& c) const {
  SpElement r;
  if (c == 0) return r;
  for (const auto& [idx, v] : coeffs_) r.coeffs_[idx] = v * c;
  return r;
}

ExtInt SpElement::valuation(const PrimeContext& ctx) const {
  ExtInt v = ExtInt::infinity();
  for (const auto& [idx, c] : coeffs_) v = min(v, spmet::valuation(c, ctx));
  return v;
}

std::vector<Rational> SpElement::coordinates(const PrimeContext& ctx) const {
  std::vector<Rational> v(ctx.d, Rational(0));
  for (const auto& [idx, c] : coeffs_) v[basis_position(idx, ctx)] = c;
  return v;
}

std::vector<BasisIndex> sp_basis(const PrimeContext& ctx) {
  std::vector<BasisIndex> out;
  out.reserve(ctx.d);
  for (int i = 1; i <= ctx.n; ++i)
    for (int j = 1; j <= ctx.n; ++j) out.push_back(BasisIndex::a(i, j));
  for (int i = 1; i <= ctx.n; ++i)
    for (int j = i; j <= ctx.n; ++j) out.push_back(BasisIndex::b(i, j));
  for (int i = 1; i <= ctx.n; ++i)
    for (int j = i; j <= ctx.n; ++j) out.push_back(BasisIndex::c(i, j));
  return out;
}

int basis_position(BasisIndex idx, const PrimeContext& ctx) {
  const int n = ctx.n;
  if (idx.i > n || idx.j > n)
    throw std::out_of_range("basis index out of range for n=" +
                            std::to_string(n) + ": " + idx.str());
  auto sym_pos = [n](int i, int j) {  // position of (i,j), i<=j, in row-major
    return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
  };
  switch (idx.family) {
    case Family::A:
      return (idx.i - 1) * n + (idx.j - 1);
    case Family::B:
      return n * n + sym_pos(idx.i, idx.j);
    case Family::C:
      return n * n + n * (n + 1) / 2 + sym_pos(idx.i, idx.j);
  }
  throw std::logic_error("unreachable");
}

MatrixForm basis_matrix(BasisIndex idx, const PrimeContext& ctx) {
  const int n = ctx.n;
  if (idx.i > n || idx.j > n)
    throw std::out_of_range("basis index out of range for n=" +
                            std::to_string(n) + ": " + idx.str());
  MatrixForm m(2 * n, 2 * n);
  const int i = idx.i - 1, j = idx.j - 1;
  switch (idx.family) {
    case Family::A:  // e_ij - e_{j+n,i+n}
      m.at(i, j) += 1;
      m.at(j + n, i + n) -= 1;
      break;
    case Family::B:  // e_{i,j+n} + e_{j,i+n}
      m.at(i, j + n) += 1;
      m.at(j, i + n) += 1;
      break;
    case Family::C:  // e_{i+n,j} + e_{j+n,i}
      m.at(i + n, j) += 1;
      m.at(j + n, i) += 1;
      break;
  }
  return m;
}

MatrixForm sp_to_matrix(const SpElement& x, const PrimeContext& ctx) {
  MatrixForm m(2 * ctx.n, 2 * ctx.n);
  for (const auto& [idx, c] : x.coeffs()) {
    MatrixForm b = basis_matrix(idx, ctx);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t q = 0; q < m.cols(); ++q) m.at(r, q) += c * b.at(r, q);
  }
  return m;
}

SpElement matrix_to_sp(const MatrixForm& m, const PrimeContext& ctx) {
  const int n = ctx.n;
  if (m.rows() != static_cast<std::size_t>(2 * n) || m.cols() != m.rows())
    throw std::invalid_argument("matrix_to_sp: wrong dimensions");
  SpElement x;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) x.add_term(BasisIndex::a(i, j), m.at(i - 1, j - 1));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      x.add_term(BasisIndex::b(i, j),
                 i == j ? m.at(i - 1, j + n - 1) / 2 : m.at(i - 1, j + n - 1));
      x.add_term(BasisIndex::c(i, j),
                 i == j ? m.at(i + n - 1, j - 1) / 2 : m.at(i + n - 1, j - 1));
    }
  // decomposition must reproduce m exactly, else the input was not in sp
  if (!(sp_to_matrix(x, ctx) == m))
    throw std::domain_error("matrix_to_sp: matrix is not in sp_2n");
  return x;
}

namespace {

// bracket of two basis symbols by the closed-form relations
SpElement basis_bracket(BasisIndex u, BasisIndex v) {
  auto d = [](int a, int b) { return a == b ? 1 : 0; };
  SpElement r;
  if (u.family > v.family) return SpElement() - basis_bracket(v, u);
  const int i = u.i, j = u.j, k = v.i, l = v.j;
  if (u.family == Family::A && v.family == Family::A) {
    // [a_ij, a_kl] = d_jk a_il - d_il a_kj
    if (d(j, k)) r.add_term(BasisIndex::a(i, l), 1);
    if (d(i, l)) r.add_term(BasisIndex::a(k, j), -1);
  } else if (u.family == Family::A && v.family == Family::B) {
    // [a_ij, b_kl] = d_jk b_il + d_jl b_ik
    if (d(j, k)) r.add_term(BasisIndex::b(i, l), 1);
    if (d(j, l)) r.add_term(BasisIndex::b(i, k), 1);
  } else if (u.family == Family::A && v.family == Family::C) {
    // [a_ij, c_kl] = -d_il c_jk - d_ik c_jl
    if (d(i, l)) r.add_term(BasisIndex::c(j, k), -1);
    if (d(i, k)) r.add_term(BasisIndex::c(j, l), -1);
  } else if (u.family == Family::B && v.family == Family::C) {
    // [b_ij, c_kl] = d_jk a_il + d_jl a_ik + d_ik a_jl + d_il a_jk
    if (d(j, k)) r.add_term(BasisIndex::a(i, l), 1);
    if (d(j, l)) r.add_term(BasisIndex::a(i, k), 1);
    if (d(i, k)) r.add_term(BasisIndex::a(j, l), 1);
    if (d(i, l)) r.add_term(BasisIndex::a(j, k), 1);
  }
  // [b,b] = [c,c] = 0
  return r;
}

}  // namespace

SpElement bracket_structure(const SpElement& x, const SpElement& y) {
  SpElement r;
  for (const auto& [u, cu] : x.coeffs())
    for (const auto& [v, cv] : y.coeffs()) {
      SpElement b = basis_bracket(u, v);
      for (const auto& [idx, c] : b.coeffs()) r.add_term(idx, cu * cv * c);
    }
  return r;
}

SpElement bracket_matrix(const SpElement& x, const SpElement& y,
                         const PrimeContext& ctx) {
  MatrixForm mx = sp_to_matrix(x, ctx), my = sp_to_matrix(y, ctx);
  const std::size_t d2 = mx.rows();
  MatrixForm comm(d2, d2);
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t c = 0; c < d2; ++c) {
      Rational s(0);
      for (std::size_t t = 0; t < d2; ++t)
        s += mx.at(r, t) * my.at(t, c) - my.at(r, t) * mx.at(t, c);
      comm.at(r, c) = s;
    }
  return matrix_to_sp(comm, ctx);
}

namespace {

void require(bool ok, const std::string& name) {
  if (!ok) throw std::out_of_range("subalgebra: bad k in spec '" + name + "'");
}

using IdxList = std::vector<BasisIndex>;

IdxList family_list(Family f, int n) {
  IdxList out;
  if (f == Family::A) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.emplace_back(f, i, j);
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) out.emplace_back(f, i, j);
  }
  return out;
}

void append(IdxList& dst, const IdxList& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

IdxList sup_c(int k, int n) {  // c^k
  IdxList out;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) out.push_back(BasisIndex::c(i, j));
  for (int j = k + 1; j <= n; ++j) out.push_back(BasisIndex::c(1, j));
  return out;
}

IdxList sup_ct(int k, int n) {  // c~^k
  IdxList out;
  for (int i = 1; i <= k; ++i) out.push_back(BasisIndex::c(i, k));
  for (int j = k + 1; j <= n; ++j) out.push_back(BasisIndex::c(1, j));
  return out;
}

IdxList sup_c_plus(int k, int n, bool tilde) {  // c+^k / c~+^k
  IdxList out;
  if (k == 1) {
    for (int i = 1; i <= n; ++i) out.push_back(BasisIndex::b(1, i));
    return out;
  }
  if (!tilde)
    for (int i = 1; i <= k - 1; ++i)
      for (int j = i; j <= k - 1; ++j) out.push_back(BasisIndex::c(i, j));
  for (int i = 1; i <= k - 1; ++i) out.push_back(BasisIndex::a(k, i));
  for (int i = k + 1; i <= n; ++i) out.push_back(BasisIndex::a(i, 1));
  out.push_back(BasisIndex::b(k, k));
  return out;
}

IdxList sup_c_minus(int k, int n, bool tilde) {  // c-^k / c~-^k
  IdxList out;
  if (k == 1) {
    for (int i = 1; i <= n; ++i) out.push_back(BasisIndex::c(1, i));
    return out;
  }
  if (!tilde)
    for (int i = 1; i <= k - 1; ++i)
      for (int j = i; j <= k - 1; ++j) out.push_back(BasisIndex::b(i, j));
  for (int i = 1; i <= k - 1; ++i) out.push_back(BasisIndex::a(i, k));
  for (int i = k + 1; i <= n; ++i) out.push_back(BasisIndex::a(1, i));
  out.push_back(BasisIndex::c(k, k));
  return out;
}

IdxList sub_a(int k, int n) {  // a_k
  IdxList out;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) out.push_back(BasisIndex::a(i, j));
  for (int i = k + 1; i <= n; ++i) out.push_back(BasisIndex::a(i, i));
  return out;
}

IdxList sub_bc(Family f, int k) {  // b_k / c_k: {*_ik : i < k}
  IdxList out;
  for (int i = 1; i <= k - 1; ++i) out.emplace_back(f, i, k);
  return out;
}

}  // namespace

std::vector<BasisIndex> subalgebra(const std::string& name,
                                   const PrimeContext& ctx) {
  const int n = ctx.n;
  if (name == "a") return family_list(Family::A, n);
  if (name == "b") return family_list(Family::B, n);
  if (name == "c") return family_list(Family::C, n);
  if (name == "a0") {
    IdxList out;
    for (int i = 1; i <= n; ++i) out.push_back(BasisIndex::a(i, i));
    return out;
  }
  if (name == "s" || name == "t") {
    IdxList out = family_list(Family::A, n);
    append(out, family_list(name == "s" ? Family::C : Family::B, n));
    return out;
  }

  auto sep = name.find_last_of("^_");
  if (sep == std::string::npos || sep + 1 == name.size())
    throw std::invalid_argument("subalgebra: unknown spec '" + name + "'");
  const std::string head = name.substr(0, sep);
  const char kind = name[sep];
  int k;
  try {
    std::size_t used;
    k = std::stoi(name.substr(sep + 1), &used);
    if (sep + 1 + used != name.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("subalgebra: bad k in spec '" + name + "'");
  }

  if (kind == '^') {
    require(k >= 1 && k <= n, name);
    if (head == "c") return sup_c(k, n);
    if (head == "c~") return sup_ct(k, n);
    if (head == "c+") return sup_c_plus(k, n, false);
    if (head == "c~+") return sup_c_plus(k, n, true);
    if (head == "c-") return sup_c_minus(k, n, false);
    if (head == "c~-") return sup_c_minus(k, n, true);
    if (head == "a+" || head == "a-") {
      require(k >= 2, name);
      IdxList out;
      if (head == "a+") {
        for (int i = 1; i <= k - 1; ++i) out.push_back(BasisIndex::a(k, i));
        for (int i = k + 1; i <= n; ++i) out.push_back(BasisIndex::a(i, 1));
      } else {
        for (int i = 1; i <= k - 1; ++i) out.push_back(BasisIndex::a(i, k));
        for (int i = k + 1; i <= n; ++i) out.push_back(BasisIndex::a(1, i));
      }
      return out;
    }
  } else {  // '_'
    require(k >= 1 && k <= n, name);
    if (head == "a") return sub_a(k, n);
    if (head == "b") return sub_bc(Family::B, k);
    if (head == "c") return sub_bc(Family::C, k);
    if (head == "a-" || head == "a+" || head == "apm") {
      IdxList out = sub_a(k - 1, n);
      if (head != "a-") append(out, sub_bc(Family::B, k));
      if (head != "a+") append(out, sub_bc(Family::C, k));
      return out;
    }
  }
  throw std::invalid_argument("subalgebra: unknown spec '" + name + "'");
}

std::vector<std::string> subalgebra_catalog(const PrimeContext& ctx) {
  std::vector<std::string> out = {"a", "b", "c", "a0", "s", "t"};
  for (int k = 1; k <= ctx.n; ++k) {
    for (const char* fmt : {"c^", "c~^", "c+^", "c-^", "c~+^", "c~-^"})
      out.push_back(fmt + std::to_string(k));
    for (const char* fmt : {"a_", "b_", "c_", "a-_", "a+_", "apm_"})
      out.push_back(fmt + std::to_string(k));
    if (k >= 2)
      for (const char* fmt : {"a+^", "a-^"}) out.push_back(fmt + std::to_string(k));
  }
  return out;
}

}  // namespace spmet
