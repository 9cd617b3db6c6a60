#include "spmet/envelope.hpp"

#include <algorithm>
#include <stdexcept>

namespace spmet {

PBWElement PBWElement::scalar(int d, const Rational& c) {
  PBWElement e(d);
  e.add_term(std::vector<int>(d, 0), c);
  return e;
}

PBWElement PBWElement::generator(BasisIndex idx, const PrimeContext& ctx) {
  PBWElement e(ctx.d);
  std::vector<int> key(ctx.d, 0);
  key[basis_position(idx, ctx)] = 1;
  e.add_term(key, 1);
  return e;
}

PBWElement PBWElement::from_sp(const SpElement& x, const PrimeContext& ctx) {
  PBWElement e(ctx.d);
  for (const auto& [idx, c] : x.coeffs()) {
    std::vector<int> key(ctx.d, 0);
    key[basis_position(idx, ctx)] = 1;
    e.add_term(key, c);
  }
  return e;
}

Rational PBWElement::coeff(const std::vector<int>& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PBWElement::add_term(const std::vector<int>& key, const Rational& c) {
  if (c == 0) return;
  if (key.size() != static_cast<std::size_t>(d_))
    throw std::invalid_argument("PBWElement::add_term: bad key arity");
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

PBWElement PBWElement::operator*(const Rational& c) const {
  PBWElement r(d_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

int PBWElement::total_degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int e : k) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

ExtInt PBWElement::valuation(const PrimeContext& ctx) const {
  ExtInt v = ExtInt::infinity();
  for (const auto& [k, c] : terms_) v = min(v, spmet::valuation(c, ctx));
  return v;
}

namespace {

struct StraightenCache {
  int n = -1;
  std::vector<BasisIndex> basis;
  // straightened g^alpha * g_t for unit-coefficient monomials
  std::map<std::pair<std::vector<int>, int>, PBWElement> memo;
};

StraightenCache& cache_for(const PrimeContext& ctx) {
  static thread_local StraightenCache cache;
  if (cache.n != ctx.n) {
    cache.n = ctx.n;
    cache.basis = sp_basis(ctx);
    cache.memo.clear();
  }
  return cache;
}

// g^alpha * g_t straightened into PBW order. Moving g_t left past the last
// factor costs a bracket correction of strictly smaller degree; results are
// memoized per monomial since power series computations revisit them often.
const PBWElement& mono_times_gen(const std::vector<int>& alpha, int t,
                                 StraightenCache& cache,
                                 const PrimeContext& ctx) {
  auto key = std::make_pair(alpha, t);
  auto it = cache.memo.find(key);
  if (it != cache.memo.end()) return it->second;

  const int d = ctx.d;
  int last = -1;
  for (int p = d - 1; p >= 0; --p)
    if (alpha[p] > 0) {
      last = p;
      break;
    }
  PBWElement out(d);
  if (last <= t) {  // already ordered
    std::vector<int> k2 = alpha;
    ++k2[t];
    out.add_term(k2, 1);
  } else {
    // alpha = head + e_last, and g_last g_t = g_t g_last + [g_last, g_t]
    std::vector<int> head = alpha;
    --head[last];
    const PBWElement swapped = mono_times_gen(head, t, cache, ctx);
    for (const auto& [k, c] : swapped.terms()) {
      const PBWElement& shifted = mono_times_gen(k, last, cache, ctx);
      for (const auto& [k2, c2] : shifted.terms()) out.add_term(k2, c * c2);
    }
    SpElement br = bracket_structure(SpElement::basis(cache.basis[last]),
                                     SpElement::basis(cache.basis[t]));
    for (const auto& [idx, c] : br.coeffs()) {
      const PBWElement& corr =
          mono_times_gen(head, basis_position(idx, ctx), cache, ctx);
      for (const auto& [k2, c2] : corr.terms()) out.add_term(k2, c * c2);
    }
  }
  return cache.memo.emplace(std::move(key), std::move(out)).first->second;
}

PBWElement mul_generator(const PBWElement& u, int t, StraightenCache& cache,
                         const PrimeContext& ctx) {
  PBWElement out(ctx.d);
  for (const auto& [key, c] : u.terms())
    for (const auto& [k2, c2] : mono_times_gen(key, t, cache, ctx).terms())
      out.add_term(k2, c * c2);
  return out;
}

}  // namespace

PBWElement pbw_multiply(const PBWElement& u, const PBWElement& v,
                        const PrimeContext& ctx) {
  if (u.dim() != ctx.d || v.dim() != ctx.d)
    throw std::invalid_argument("pbw_multiply: dimension mismatch");
  StraightenCache& cache = cache_for(ctx);
  PBWElement out(ctx.d);
  for (const auto& [vkey, vc] : v.terms()) {
    PBWElement w = u * vc;
    for (int p = 0; p < ctx.d; ++p)
      for (int rep = 0; rep < vkey[p]; ++rep) w = mul_generator(w, p, cache, ctx);
    out = out + w;
  }
  return out;
}

WeylElement rho_hat(const PBWElement& u, const PrimeContext& ctx) {
  const auto basis = sp_basis(ctx);
  WeylElement out(ctx.n);
  for (const auto& [key, c] : u.terms()) {
    WeylElement prod = WeylElement::scalar(ctx.n, c);
    for (int p = 0; p < ctx.d; ++p) {
      if (key[p] == 0) continue;
      WeylElement img = rho_basis(basis[p], ctx);
      for (int rep = 0; rep < key[p]; ++rep) prod = weyl_multiply(prod, img);
    }
    out = out + prod;
  }
  return out;
}

TruncatedEnvelope te_multiply(const TruncatedEnvelope& u,
                              const TruncatedEnvelope& v,
                              const PrimeContext& ctx) {
  ExtInt fl = min(u.body.valuation(ctx) + v.tail_floor,
                  min(u.tail_floor + v.body.valuation(ctx),
                      u.tail_floor + v.tail_floor));
  return {pbw_multiply(u.body, v.body, ctx), fl};
}

TruncatedEnvelope te_sub(const TruncatedEnvelope& u, const TruncatedEnvelope& v,
                         const PrimeContext& ctx) {
  (void)ctx;
  return {u.body - v.body, min(u.tail_floor, v.tail_floor)};
}

TruncatedEnvelope exp_p(const SpElement& g, long N, const PrimeContext& ctx) {
  if (!(g.valuation(ctx) >= 0))
    throw std::domain_error("exp_p: g must have p-integral coefficients");
  if (g.is_zero()) return {PBWElement::one(ctx.d), ExtInt::infinity()};
  const PrecisionBudget budget(N, ctx);
  PBWElement body = PBWElement::one(ctx.d);
  PBWElement power = PBWElement::one(ctx.d);
  const PBWElement gp = PBWElement::from_sp(g, ctx);
  Rational coeff(1);
  for (int k = 1; k < budget.K_trunc; ++k) {
    power = pbw_multiply(power, gp, ctx);
    Rational step(ctx.p, k);
    step.canonicalize();
    coeff *= step;  // now p^k / k!
    body = body + power * coeff;
  }
  return {body, ExtInt::finite(N)};
}

TruncatedEnvelope group_minus_one(const SpElement& g, long N,
                                  const PrimeContext& ctx) {
  TruncatedEnvelope e = exp_p(g, N, ctx);
  e.body = e.body - PBWElement::one(ctx.d);
  if (!(e.body.valuation(ctx) >= 1))
    throw std::logic_error("group_minus_one: body left p U(g), bracket bug?");
  return e;
}

IwasawaElement IwasawaElement::full_basis(const PrimeContext& ctx) {
  std::vector<SpElement> gens;
  for (BasisIndex g : sp_basis(ctx)) gens.push_back(SpElement::basis(g));
  return from_generators(std::move(gens));
}

void IwasawaElement::add_term(const std::vector<int>& alpha, const Rational& c) {
  if (c == 0) return;
  if (alpha.size() != generators.size())
    throw std::invalid_argument("IwasawaElement::add_term: bad arity");
  for (int e : alpha)
    if (e < 0) throw std::invalid_argument("IwasawaElement: negative exponent");
  auto [it, fresh] = terms.emplace(alpha, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TruncatedWeyl iwasawa_to_weyl(const IwasawaElement& zeta, long N,
                              const PrimeContext& ctx) {
  if (zeta.terms.empty())
    return {WeylElement::zero(ctx.n), ExtInt::infinity()};

  // inflate the working precision to absorb coefficients below valuation 0
  long slack = 0;
  for (const auto& [alpha, lam] : zeta.terms) {
    ExtInt v = valuation(lam, ctx);
    if (!v.is_infinite() && v.value() < 0) slack = std::max(slack, -v.value());
  }
  const long Nw = N + slack;

  std::vector<TruncatedWeyl> factor;  // image of (G_i - 1) at precision Nw
  factor.reserve(zeta.generators.size());
  for (const SpElement& g : zeta.generators) {
    TruncatedEnvelope e = group_minus_one(g, Nw, ctx);
    factor.push_back({rho_hat(e.body, ctx), e.tail_floor});
  }

  TruncatedWeyl acc{WeylElement::zero(ctx.n), ExtInt::infinity()};
  for (const auto& [alpha, lam] : zeta.terms) {
    TruncatedWeyl term = TruncatedWeyl::exact(WeylElement::one(ctx.n));
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (int rep = 0; rep < alpha[i]; ++rep)
        term = tw_multiply(term, factor[i], ctx);
    acc = tw_add(acc, tw_scale(term, lam, ctx), ctx);
  }
  if (!(acc.tail_floor >= N))
    throw std::runtime_error(
        "iwasawa_to_weyl: cannot certify precision floor N=" +
        std::to_string(N) + " (got " + acc.tail_floor.str() + ")");
  return acc;
}

}  // namespace spmet
