#include "spmet/modaction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace spmet {

Poly Poly::monomial(int n, const std::vector<int>& exp, const Rational& c,
                    bool laurent) {
  Poly f(n, laurent);
  f.add_term(exp, c);
  return f;
}

Poly Poly::one(int n, bool laurent) {
  return monomial(n, std::vector<int>(n, 0), 1, laurent);
}

Rational Poly::coeff(const std::vector<int>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const std::vector<int>& exp, const Rational& c) {
  if (c == 0) return;
  if (exp.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("Poly::add_term: bad exponent arity");
  if (!laurent_)
    for (int e : exp)
      if (e < 0)
        throw std::invalid_argument("Poly: negative exponent outside Laurent");
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(n_, laurent_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

Poly poly_multiply(const Poly& a, const Poly& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("poly_multiply: mismatched n");
  Poly out = a.is_laurent() || b.is_laurent() ? Poly::laurent(a.vars())
                                              : Poly::poly(a.vars());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      std::vector<int> k(ka);
      for (std::size_t t = 0; t < k.size(); ++t) k[t] += kb[t];
      out.add_term(k, ca * cb);
    }
  return out;
}

namespace {

// gamma (gamma-1) ... (gamma-beta+1); exact for any integer gamma
Rational falling_factorial(long gamma, int beta) {
  Rational f(1);
  for (int s = 0; s < beta; ++s) f *= Rational(gamma - s);
  return f;
}

}  // namespace

Poly act(const WeylElement& w, const Poly& f) {
  const int n = w.vars();
  if (f.vars() != n) throw std::invalid_argument("act: mismatched n");
  Poly out = f.is_laurent() ? Poly::laurent(n) : Poly::poly(n);
  for (const auto& [gamma, fc] : f.terms())
    for (const auto& [key, wc] : w.terms()) {
      Rational factor = wc * fc;
      for (int i = 0; i < n && factor != 0; ++i)
        factor *= falling_factorial(gamma[i], key[n + i]);
      if (factor == 0) continue;
      std::vector<int> exp(n);
      for (int i = 0; i < n; ++i) exp[i] = gamma[i] - key[n + i] + key[i];
      out.add_term(exp, factor);
    }
  return out;
}

ExtInt module_valuation(const Poly& f, const PrimeContext& ctx) {
  ExtInt v = ExtInt::infinity();
  for (const auto& [k, c] : f.terms()) v = min(v, valuation(c, ctx));
  return v;
}

int total_degree(const Poly& f) {
  int deg = -1;
  for (const auto& [k, c] : f.terms()) {
    int s = 0;
    for (int e : k) s += std::abs(e);
    deg = std::max(deg, s);
  }
  return deg;
}

bool Window::contains(const std::vector<int>& exp) const {
  int s = 0;
  for (int e : exp) {
    if (!laurent && e < 0) return false;
    if (coord_box && (e < coord_box->first || e > coord_box->second))
      return false;
    s += std::abs(e);
  }
  return s <= degree_cap;
}

bool Window::contains(const Poly& f) const {
  for (const auto& [k, c] : f.terms())
    if (!contains(k)) return false;
  return true;
}

std::vector<std::vector<int>> Window::enumerate(int n) const {
  int lo = laurent ? -degree_cap : 0, hi = degree_cap;
  if (coord_box) {
    lo = std::max(lo, coord_box->first);
    hi = std::min(hi, coord_box->second);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, lo);
  for (;;) {
    if (contains(cur)) out.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[pos] == hi) cur[pos--] = lo;
    if (pos < 0) break;
    ++cur[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string exp_label(const std::vector<int>& exp) {
  std::string s = "X^(";
  for (std::size_t i = 0; i < exp.size(); ++i)
    s += (i ? "," : "") + std::to_string(exp[i]);
  return s + ")";
}

ActionMatrix assemble(const std::vector<WeylElement>& ops,
                      const std::vector<Poly>& domain, const Window& window,
                      WindowPolicy policy, bool parallel) {
  const std::size_t ncols = ops.size() * domain.size();
  std::vector<Poly> images(ncols, Poly::laurent(0));

  auto column = [&](std::size_t c) {
    const std::size_t oi = c / domain.size(), mi = c % domain.size();
    Poly img = act(ops[oi], domain[mi]);
    if (policy == WindowPolicy::strict) {
      if (!window.contains(img))
        throw WindowEscape("#" + std::to_string(oi),
                           domain[mi].terms().empty()
                               ? "0"
                               : exp_label(domain[mi].terms().begin()->first));
    } else {
      Poly cut = img.is_laurent() ? Poly::laurent(img.vars())
                                  : Poly::poly(img.vars());
      for (const auto& [k, v] : img.terms())
        if (window.contains(k)) cut.add_term(k, v);
      img = cut;
    }
    images[c] = img;
  };

  if (parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < static_cast<long>(ncols); ++c) {
      try {
        column(c);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t c = 0; c < ncols; ++c) column(c);
  }

  ActionMatrix m;
  std::map<std::vector<int>, std::size_t> row_of;
  for (const Poly& img : images)
    for (const auto& [k, v] : img.terms()) row_of.emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, idx] : row_of) {
    idx = r++;
    m.row_monomials.push_back(k);
  }
  m.entries = RatMatrix(row_of.size(), ncols);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long c = 0; c < static_cast<long>(ncols); ++c)
      for (const auto& [k, v] : images[c].terms())
        m.entries.at(row_of.at(k), c) = v;
  } else {
    for (std::size_t c = 0; c < ncols; ++c)
      for (const auto& [k, v] : images[c].terms())
        m.entries.at(row_of.at(k), c) = v;
  }
  for (std::size_t oi = 0; oi < ops.size(); ++oi)
    for (std::size_t mi = 0; mi < domain.size(); ++mi)
      m.col_labels.push_back("op" + std::to_string(oi) + "*" +
                             exp_label(domain[mi].terms().empty()
                                           ? std::vector<int>(0)
                                           : domain[mi].terms().begin()->first));
  return m;
}

}  // namespace

ActionMatrix action_matrix(const std::vector<WeylElement>& ops,
                           const std::vector<Poly>& domain,
                           const Window& codomain_window, WindowPolicy policy) {
  return assemble(ops, domain, codomain_window, policy, true);
}

ActionMatrix action_matrix_serial(const std::vector<WeylElement>& ops,
                                  const std::vector<Poly>& domain,
                                  const Window& codomain_window,
                                  WindowPolicy policy) {
  return assemble(ops, domain, codomain_window, policy, false);
}

std::size_t exact_rank(const ActionMatrix& m) { return exact_rank(m.entries); }

std::string ActionMatrix::to_matrix_market() const {
  std::ostringstream os;
  std::size_t nnz = 0;
  for (std::size_t r = 0; r < entries.rows(); ++r)
    for (std::size_t c = 0; c < entries.cols(); ++c)
      if (entries.at(r, c) != 0) ++nnz;
  os << "%%MatrixMarket matrix coordinate rational general\n";
  os << entries.rows() << " " << entries.cols() << " " << nnz << "\n";
  for (std::size_t r = 0; r < entries.rows(); ++r)
    for (std::size_t c = 0; c < entries.cols(); ++c)
      if (entries.at(r, c) != 0)
        os << r + 1 << " " << c + 1 << " " << rational_str(entries.at(r, c))
           << "\n";
  return os.str();
}

IndependenceResult independence_check_filtered(
    const std::vector<WeylElement>& ops, const std::vector<Poly>& probes,
    const Window& window, WindowPolicy policy,
    const std::function<bool(const Rational&)>& keep_entry) {
  const std::size_t m = ops.size();
  if (m == 0) return {true, {}};
  // Track the kernel of the growing stacked system probe by probe: K spans
  // the combinations of ops not yet separated. Once K is empty the family
  // is independent and the remaining probes cannot change that.
  RatMatrix kernel = RatMatrix::identity(m);
  for (const Poly& probe : probes) {
    if (kernel.cols() == 0) return {true, {}};
    std::vector<Poly> images;
    images.reserve(m);
    for (std::size_t oi = 0; oi < m; ++oi) {
      Poly img = act(ops[oi], probe);
      if (policy == WindowPolicy::strict) {
        if (!window.contains(img))
          throw WindowEscape("#" + std::to_string(oi),
                             probe.terms().empty()
                                 ? "0"
                                 : exp_label(probe.terms().begin()->first));
        images.push_back(std::move(img));
      } else {
        Poly cut = img.is_laurent() ? Poly::laurent(img.vars())
                                    : Poly::poly(img.vars());
        for (const auto& [k, v] : img.terms())
          if (window.contains(k) && (!keep_entry || keep_entry(v)))
            cut.add_term(k, v);
        images.push_back(std::move(cut));
      }
    }
    std::map<std::vector<int>, std::size_t> row_of;
    for (const Poly& img : images)
      for (const auto& [k, v] : img.terms()) row_of.emplace(k, 0);
    if (row_of.empty()) continue;
    std::size_t r = 0;
    for (auto& [k, idx] : row_of) idx = r++;
    RatMatrix block(row_of.size(), m);
    for (std::size_t oi = 0; oi < m; ++oi)
      for (const auto& [k, v] : images[oi].terms())
        if (!keep_entry || keep_entry(v)) block.at(row_of[k], oi) = v;
    kernel = mat_product(kernel, kernel_basis(mat_product(block, kernel)));
  }
  if (kernel.cols() == 0) return {true, {}};
  std::vector<Rational> witness(m);
  for (std::size_t i = 0; i < m; ++i) witness[i] = kernel.at(i, 0);
  return {false, witness};
}

IndependenceResult independence_check(const std::vector<WeylElement>& ops,
                                      const std::vector<Poly>& probes,
                                      const Window& window,
                                      WindowPolicy policy) {
  return independence_check_filtered(ops, probes, window, policy, nullptr);
}

WeylElement coefficient_recovery(const std::map<std::vector<int>, Poly>& images,
                                 const RecoveryBounds& bounds, int n) {
  WeylElement zeta(n);
  // gammas with |gamma| <= cap in increasing lexicographic order; std::map
  // iteration over the enumerated window provides exactly that
  Window beta_window{bounds.beta_degree_cap, false, std::nullopt};
  for (const std::vector<int>& gamma : beta_window.enumerate(n)) {
    auto it = images.find(gamma);
    if (it == images.end())
      throw std::invalid_argument("coefficient_recovery: missing probe image " +
                                  exp_label(gamma));
    Poly residual = it->second - act(zeta, Poly::monomial(n, gamma, 1));
    if (residual.is_zero()) continue;
    Rational gamma_fact(1);
    for (int g : gamma) gamma_fact *= falling_factorial(g, g);
    for (const auto& [alpha, c] : residual.terms()) {
      int adeg = 0;
      for (int e : alpha) adeg += e;
      if (adeg > bounds.alpha_degree_cap)
        throw std::domain_error(
            "coefficient_recovery: inconsistent images (alpha " +
            exp_label(alpha) + " out of bounds)");
      zeta.add_term([&] {
        std::vector<int> key(alpha);
        key.insert(key.end(), gamma.begin(), gamma.end());
        return key;
      }(), c / gamma_fact);
    }
  }
  // every supplied image must now be reproduced exactly
  for (const auto& [gamma, img] : images)
    if (!(act(zeta, Poly::monomial(n, gamma, 1)) == img))
      throw std::domain_error(
          "coefficient_recovery: no Weyl element within bounds fits image at " +
          exp_label(gamma));
  return zeta;
}

}  // namespace spmet
