#include "spmet/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spmet {

WeylElement WeylElement::scalar(int n, const Rational& c) {
  WeylElement w(n);
  w.add_term(std::vector<int>(2 * n, 0), c);
  return w;
}

WeylElement WeylElement::x(int i, int n) {
  std::vector<int> key(2 * n, 0);
  key.at(i - 1) = 1;
  WeylElement w(n);
  w.add_term(key, 1);
  return w;
}

WeylElement WeylElement::d(int i, int n) {
  std::vector<int> key(2 * n, 0);
  key.at(n + i - 1) = 1;
  WeylElement w(n);
  w.add_term(key, 1);
  return w;
}

WeylElement WeylElement::monomial(int n, const std::vector<int>& alpha,
                                  const std::vector<int>& beta,
                                  const Rational& c) {
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
    throw std::invalid_argument("WeylElement::monomial: bad exponent arity");
  std::vector<int> key(alpha);
  key.insert(key.end(), beta.begin(), beta.end());
  WeylElement w(n);
  w.add_term(key, c);
  return w;
}

Rational WeylElement::coeff(const std::vector<int>& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const std::vector<int>& key, const Rational& c) {
  if (c == 0) return;
  if (key.size() != static_cast<std::size_t>(2 * n_))
    throw std::invalid_argument("WeylElement::add_term: bad key arity");
  for (int e : key)
    if (e < 0) throw std::invalid_argument("WeylElement: negative exponent");
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  WeylElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  WeylElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

WeylElement WeylElement::operator*(const Rational& c) const {
  WeylElement r(n_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

int WeylElement::total_degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int e : k) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

std::optional<int> WeylElement::operator_degree() const {
  std::optional<int> deg;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += k[i] - k[n_ + i];
    if (deg && *deg != s) return std::nullopt;
    deg = s;
  }
  return deg;
}

namespace {

using Terms = std::map<std::vector<int>, Rational>;

void accumulate(Terms& into, const std::vector<int>& key, const Rational& c) {
  auto [it, fresh] = into.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

// contribution of one term pair to the normal-ordered product
void convolve_pair(Terms& into, int n, const std::vector<int>& ukey,
                   const Rational& uc, const std::vector<int>& vkey,
                   const Rational& vc) {
  // k ranges over the box 0 <= k_i <= min(beta_i, gamma_i)
  std::vector<int> kmax(n), k(n, 0);
  for (int i = 0; i < n; ++i) kmax[i] = std::min(ukey[n + i], vkey[i]);
  const Rational cc = uc * vc;
  for (;;) {
    Rational factor = cc;
    for (int i = 0; i < n; ++i) {
      if (k[i] == 0) continue;
      Int f(1);
      // C(beta_i, k_i) * C(gamma_i, k_i) * k_i!
      mpz_bin_uiui(f.get_mpz_t(), ukey[n + i], k[i]);
      Int g;
      mpz_bin_uiui(g.get_mpz_t(), vkey[i], k[i]);
      f *= g;
      mpz_fac_ui(g.get_mpz_t(), k[i]);
      f *= g;
      factor *= f;
    }
    std::vector<int> key(2 * n);
    for (int i = 0; i < n; ++i) {
      key[i] = ukey[i] + vkey[i] - k[i];
      key[n + i] = ukey[n + i] + vkey[n + i] - k[i];
    }
    accumulate(into, key, factor);
    // advance k through the box
    int pos = 0;
    while (pos < n && k[pos] == kmax[pos]) k[pos++] = 0;
    if (pos == n) break;
    ++k[pos];
  }
}

void merge_into(Terms& into, const Terms& part) {
  for (const auto& [k, c] : part) accumulate(into, k, c);
}

WeylElement from_terms(int n, Terms&& t) {
  WeylElement w(n);
  for (auto& [k, c] : t) w.add_term(k, c);
  return w;
}

void check_arity(const WeylElement& u, const WeylElement& v) {
  if (u.vars() != v.vars())
    throw std::invalid_argument("Weyl arithmetic on mismatched n");
}

}  // namespace

WeylElement weyl_multiply_serial(const WeylElement& u, const WeylElement& v) {
  check_arity(u, v);
  const int n = u.vars();
  Terms out;
  for (const auto& [uk, uc] : u.terms())
    for (const auto& [vk, vc] : v.terms()) convolve_pair(out, n, uk, uc, vk, vc);
  return from_terms(n, std::move(out));
}

WeylElement weyl_multiply(const WeylElement& u, const WeylElement& v) {
  check_arity(u, v);
  const int n = u.vars();
  const std::size_t nu = u.terms().size(), nv = v.terms().size();
  // below this the fork/merge overhead outweighs the convolution work
  if (nu * nv < 16384) return weyl_multiply_serial(u, v);

  std::vector<const std::pair<const std::vector<int>, Rational>*> uterms;
  uterms.reserve(nu);
  for (const auto& t : u.terms()) uterms.push_back(&t);

  Terms out;
#pragma omp parallel
  {
    Terms local;
#pragma omp for schedule(static) nowait
    for (long idx = 0; idx < static_cast<long>(uterms.size()); ++idx)
      for (const auto& [vk, vc] : v.terms())
        convolve_pair(local, n, uterms[idx]->first, uterms[idx]->second, vk, vc);
#pragma omp critical
    merge_into(out, local);
  }
  return from_terms(n, std::move(out));
}

WeylElement weyl_commutator(const WeylElement& u, const WeylElement& v) {
  return weyl_multiply(u, v) - weyl_multiply(v, u);
}

ExtInt weyl_valuation(const WeylElement& w, const PrimeContext& ctx) {
  ExtInt v = ExtInt::infinity();
  for (const auto& [k, c] : w.terms()) v = min(v, valuation(c, ctx));
  return v;
}

WeylElement tau(int i, const WeylElement& w) {
  const int n = w.vars();
  if (i < 1 || i > n) throw std::out_of_range("tau: index out of range");
  WeylElement out(n);
  for (const auto& [key, c] : w.terms()) {
    // substitute in the ordered word x_1^a1 .. x_n^an d_1^b1 .. d_n^bn and
    // renormalize left to right
    WeylElement acc = WeylElement::scalar(n, c);
    for (int pos = 0; pos < 2 * n; ++pos) {
      const int e = key[pos];
      if (e == 0) continue;
      const int var = pos % n + 1;
      WeylElement gen(n);
      Rational sign(1);
      if (pos < n)
        gen = (var == i) ? WeylElement::d(var, n) : WeylElement::x(var, n);
      else if (var == i) {
        gen = WeylElement::x(var, n);
        sign = -1;
      } else {
        gen = WeylElement::d(var, n);
      }
      for (int rep = 0; rep < e; ++rep) acc = weyl_multiply(acc, gen);
      if (sign != 1 && e % 2 == 1) acc = acc * sign;
    }
    out = out + acc;
  }
  return out;
}

WeylElement tau_total(const WeylElement& w) {
  WeylElement out = w;
  for (int i = w.vars(); i >= 1; --i) out = tau(i, out);
  return out;
}

TruncatedWeyl tw_add(const TruncatedWeyl& u, const TruncatedWeyl& v,
                     const PrimeContext&) {
  return {u.body + v.body, min(u.tail_floor, v.tail_floor)};
}

TruncatedWeyl tw_multiply(const TruncatedWeyl& u, const TruncatedWeyl& v,
                          const PrimeContext& ctx) {
  // (A+s)(B+t) = AB + At + sB + st with val(s) >= fl(u), val(t) >= fl(v)
  ExtInt fl = min(weyl_valuation(u.body, ctx) + v.tail_floor,
                  min(u.tail_floor + weyl_valuation(v.body, ctx),
                      u.tail_floor + v.tail_floor));
  return {weyl_multiply(u.body, v.body), fl};
}

TruncatedWeyl tw_scale(const TruncatedWeyl& u, const Rational& c,
                       const PrimeContext& ctx) {
  return {u.body * c, u.tail_floor + valuation(c, ctx)};
}

}  // namespace spmet
