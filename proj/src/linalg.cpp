#include "spmet/linalg.hpp"

#include <algorithm>

namespace spmet {

RatMatrix RatMatrix::identity(std::size_t d) {
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
  RatMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(sel, c), a.at(row, c));
    Rational inv = 1 / a.at(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      Rational f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= f * a.at(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = piv;
  return a;
}

std::size_t exact_rank(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<Rational> kernel_vector(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  RatMatrix r = rref(m, &piv);
  if (piv.size() == m.cols()) return {};
  // first free column
  std::size_t free_col = 0;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  while (free_col < m.cols() && is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(m.cols(), Rational(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (piv[i] < free_col) v[piv[i]] = -r.at(i, free_col);
  return v;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  RatMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k.at(free_cols[f], f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      k.at(piv[i], f) = -r.at(i, free_cols[f]);
  }
  return k;
}

RatMatrix mat_product(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_product: shape");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

bool same_column_span(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) return false;
  RatMatrix joint(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) joint.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      joint.at(r, a.cols() + c) = b.at(r, c);
  }
  std::size_t rj = exact_rank(joint);
  return rj == exact_rank(a) && rj == exact_rank(b);
}

void SpanBasis::reduce(std::vector<Rational>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& f = v[lead_[i]];
    if (f == 0) continue;
    Rational fac = f;  // rows are normalized to leading 1
    for (std::size_t c = lead_[i]; c < dim_; ++c) v[c] -= fac * rows_[i][c];
  }
}

bool SpanBasis::insert(std::vector<Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: bad dimension");
  reduce(v);
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  if (lead == dim_) return false;
  Rational inv = 1 / v[lead];
  for (std::size_t c = lead; c < dim_; ++c) v[c] *= inv;
  // keep rows ordered by pivot so reduce() stays a single sweep
  std::size_t pos = 0;
  while (pos < lead_.size() && lead_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  lead_.insert(lead_.begin() + pos, lead);
  return true;
}

bool SpanBasis::contains(std::vector<Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: bad dimension");
  reduce(v);
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x == 0; });
}

}  // namespace spmet
