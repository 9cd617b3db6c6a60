#include "spmet/metaplectic.hpp"

#include <stdexcept>

#include "spmet/expr.hpp"

namespace spmet {

WeylElement rho_basis(BasisIndex idx, const PrimeContext& ctx) {
  const int n = ctx.n;
  if (idx.i > n || idx.j > n)
    throw std::out_of_range("rho: basis index out of range: " + idx.str());
  WeylElement w(n);
  std::vector<int> alpha(n, 0), beta(n, 0);
  switch (idx.family) {
    case Family::A:  // -1/2 delta_ij - x_j d_i
      alpha[idx.j - 1] = 1;
      beta[idx.i - 1] = 1;
      w = WeylElement::monomial(n, alpha, beta, -1);
      if (idx.i == idx.j) w = w + WeylElement::scalar(n, Rational(-1, 2));
      break;
    case Family::B:  // d_i d_j
      beta[idx.i - 1] += 1;
      beta[idx.j - 1] += 1;
      w = WeylElement::monomial(n, alpha, beta, 1);
      break;
    case Family::C:  // -x_i x_j
      alpha[idx.i - 1] += 1;
      alpha[idx.j - 1] += 1;
      w = WeylElement::monomial(n, alpha, beta, -1);
      break;
  }
  return w;
}

WeylElement rho(const SpElement& x, const PrimeContext& ctx) {
  WeylElement w(ctx.n);
  for (const auto& [idx, c] : x.coeffs()) w = w + rho_basis(idx, ctx) * c;
  return w;
}

SpElement rho_preimage(const WeylElement& w, const PrimeContext& ctx) {
  const int n = ctx.n;
  if (w.vars() != n) throw std::invalid_argument("rho_preimage: wrong n");
  SpElement y;
  Rational constant(0);
  for (const auto& [key, c] : w.terms()) {
    int xdeg = 0, ddeg = 0;
    for (int i = 0; i < n; ++i) {
      xdeg += key[i];
      ddeg += key[n + i];
    }
    auto single = [&](int from, int count) {  // indices of nonzero entries
      std::vector<int> out;
      for (int i = 0; i < n; ++i)
        for (int rep = 0; rep < key[from + i]; ++rep) out.push_back(i + 1);
      (void)count;
      return out;
    };
    if (xdeg == 0 && ddeg == 0) {
      constant = c;
    } else if (xdeg == 1 && ddeg == 1) {
      const int j = single(0, 1)[0], i = single(n, 1)[0];
      y.add_term(BasisIndex::a(i, j), -c);
    } else if (xdeg == 0 && ddeg == 2) {
      auto ij = single(n, 2);
      y.add_term(BasisIndex::b(ij[0], ij[1]), c);
    } else if (xdeg == 2 && ddeg == 0) {
      auto ij = single(0, 2);
      y.add_term(BasisIndex::c(ij[0], ij[1]), -c);
    } else {
      throw std::domain_error("rho_preimage: element is not in rho(sp)");
    }
  }
  // the scalar part is pinned by the a_ii coefficients
  Rational expected(0);
  for (int i = 1; i <= n; ++i)
    expected += y.coeff(BasisIndex::a(i, i)) * Rational(-1, 2);
  if (constant != expected)
    throw std::domain_error("rho_preimage: scalar term inconsistent");
  return y;
}

namespace {

SpElement sigma_basis(int i, BasisIndex u) {
  const int j = u.i, k = u.j;
  auto one = [](BasisIndex idx, int sign = 1) {
    return SpElement::basis(idx) * Rational(sign);
  };
  switch (u.family) {
    case Family::A:
      if (j == i && k == i) return one(BasisIndex::a(i, i), -1);
      if (j == i) return one(BasisIndex::c(i, k), -1);
      if (k == i) return one(BasisIndex::b(j, i), -1);
      return one(u);
    case Family::B:
      if (j == i && k == i) return one(BasisIndex::c(i, i), -1);
      if (j == i) return one(BasisIndex::a(k, i));
      if (k == i) return one(BasisIndex::a(j, i));
      return one(u);
    case Family::C:
      if (j == i && k == i) return one(BasisIndex::b(i, i), -1);
      if (j == i) return one(BasisIndex::a(i, k));
      if (k == i) return one(BasisIndex::a(i, j));
      return one(u);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SpElement sigma(int i, const SpElement& x) {
  if (i < 1) throw std::out_of_range("sigma: index out of range");
  SpElement r;
  for (const auto& [idx, c] : x.coeffs()) r = r + sigma_basis(i, idx) * c;
  return r;
}

SpElement sigma_via_pullback(int i, const SpElement& x, const PrimeContext& ctx) {
  return rho_preimage(tau(i, rho(x, ctx)), ctx);
}

SpElement sigma_total(const SpElement& x) {
  // all indices touched by x bound the needed chain; sigma_i fixes symbols
  // with both indices different from i, so applying beyond max index is id
  int hi = 0;
  for (const auto& [idx, c] : x.coeffs()) hi = std::max({hi, idx.i, idx.j});
  return sigma_chain(1, hi, x);
}

SpElement sigma_chain(int first, int last, const SpElement& x) {
  SpElement r = x;
  for (int i = last; i >= first; --i) r = sigma(i, r);
  return r;
}

std::vector<WeylElement> image_generators(const std::string& spec,
                                          const PrimeContext& ctx) {
  std::vector<WeylElement> out;
  for (BasisIndex g : subalgebra(spec, ctx)) out.push_back(rho_basis(g, ctx));
  return out;
}

CheckReport verify_homomorphism(const PrimeContext& ctx) {
  const auto basis = sp_basis(ctx);
  std::vector<std::string> bad;
  for (BasisIndex u : basis)
    for (BasisIndex v : basis) {
      WeylElement lhs =
          weyl_commutator(rho_basis(u, ctx), rho_basis(v, ctx));
      WeylElement rhs = rho(
          bracket_structure(SpElement::basis(u), SpElement::basis(v)), ctx);
      if (!(lhs == rhs))
        bad.push_back("[" + u.str() + "," + v.str() + "]: [rho,rho] = " +
                      format_weyl(lhs) + " but rho([,]) = " + format_weyl(rhs));
    }
  const std::string name = "homomorphism";
  const std::string details =
      std::to_string(basis.size() * basis.size()) + " pairs";
  return bad.empty() ? CheckReport::passed(name, details)
                     : CheckReport::failed(name, bad, details);
}

namespace {

RatMatrix span_matrix(const std::vector<SpElement>& xs, const PrimeContext& ctx) {
  RatMatrix m(ctx.d, xs.size());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    auto coords = xs[c].coordinates(ctx);
    for (int r = 0; r < ctx.d; ++r) m.at(r, c) = coords[r];
  }
  return m;
}

std::vector<SpElement> as_elements(const std::vector<BasisIndex>& idxs) {
  std::vector<SpElement> out;
  for (BasisIndex g : idxs) out.push_back(SpElement::basis(g));
  return out;
}

}  // namespace

CheckReport verify_automorphic_images(const PrimeContext& ctx) {
  std::vector<std::string> bad;
  int cases = 0;
  for (int k = 1; k <= ctx.n; ++k) {
    struct Row {
      std::string src, dst;
      int first, last;
    };
    const Row rows[] = {
        {"c^" + std::to_string(k), "c+^" + std::to_string(k), k, ctx.n},
        {"c~^" + std::to_string(k), "c~+^" + std::to_string(k), k, ctx.n},
        {"c^" + std::to_string(k), "c-^" + std::to_string(k), 1, k - 1},
        {"c~^" + std::to_string(k), "c~-^" + std::to_string(k), 1, k - 1},
    };
    for (const Row& row : rows) {
      std::vector<SpElement> chained;
      for (BasisIndex g : subalgebra(row.src, ctx))
        chained.push_back(sigma_chain(row.first, row.last, SpElement::basis(g)));
      RatMatrix lhs = span_matrix(chained, ctx);
      RatMatrix rhs = span_matrix(as_elements(subalgebra(row.dst, ctx)), ctx);
      ++cases;
      if (!same_column_span(lhs, rhs))
        bad.push_back("span(sigma-chain " + row.src + ") != span(" + row.dst +
                      ")");
    }
  }
  const std::string name = "automorphic-images";
  const std::string details = std::to_string(cases) + " span comparisons";
  return bad.empty() ? CheckReport::passed(name, details)
                     : CheckReport::failed(name, bad, details);
}

}  // namespace spmet
