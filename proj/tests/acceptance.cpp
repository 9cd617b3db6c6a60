// Acceptance suite: runs every gate criterion at its pinned configuration and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spmet/envelope.hpp"
#include "spmet/expr.hpp"
#include "spmet/metaplectic.hpp"
#include "spmet/verify.hpp"

using namespace spmet;

namespace {

struct Outcome {
  bool pass;
  std::string note;
};

using clock_type = std::chrono::steady_clock;

bool g_all_pass = true;

void run_criterion(const std::string& id, const std::string& label,
                   const std::function<Outcome()>& fn) {
  auto t0 = clock_type::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  g_all_pass = g_all_pass && o.pass;
  std::printf("[%s] %-4s %-46s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL",
              id.c_str(), label.c_str(), secs, o.note.empty() ? "" : "  ",
              o.note.c_str());
  std::fflush(stdout);
}

Outcome timed_bound(bool pass, double secs, double bound, std::string note) {
  if (pass && secs > bound)
    return {false, "exceeded time bound " + std::to_string(bound) + "s"};
  return {pass, std::move(note)};
}

// C1: structure-constant and matrix brackets agree on every pair, n in {2,3}
Outcome c1() {
  auto t0 = clock_type::now();
  long pairs = 0;
  for (int n : {2, 3}) {
    PrimeContext ctx(3, n);
    for (BasisIndex u : sp_basis(ctx))
      for (BasisIndex v : sp_basis(ctx)) {
        ++pairs;
        SpElement su = SpElement::basis(u), sv = SpElement::basis(v);
        if (!(bracket_structure(su, sv) == bracket_matrix(su, sv, ctx)))
          return {false, "mismatch at [" + u.str() + "," + v.str() + "]"};
      }
  }
  double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  return timed_bound(pairs == 100 + 441, secs, 1.0,
                     std::to_string(pairs) + " pairs");
}

// C2: rho([u,v]) = [rho(u), rho(v)] on every pair, n in {2,3}
Outcome c2() {
  auto t0 = clock_type::now();
  for (int n : {2, 3}) {
    CheckReport r = verify_homomorphism(PrimeContext(3, n));
    if (!r.pass) return {false, r.witnesses.front()};
  }
  double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  return timed_bound(true, secs, 5.0, "100 + 441 pairs");
}

// C3: Jacobi identity on all basis triples, n = 2
Outcome c3() {
  auto t0 = clock_type::now();
  PrimeContext ctx(3, 2);
  auto basis = sp_basis(ctx);
  long triples = 0;
  for (BasisIndex x : basis)
    for (BasisIndex y : basis)
      for (BasisIndex z : basis) {
        ++triples;
        SpElement sx = SpElement::basis(x), sy = SpElement::basis(y),
                  sz = SpElement::basis(z);
        SpElement sum = bracket_structure(sx, bracket_structure(sy, sz)) +
                        bracket_structure(sy, bracket_structure(sz, sx)) +
                        bracket_structure(sz, bracket_structure(sx, sy));
        if (!sum.is_zero())
          return {false, "violation at (" + x.str() + "," + y.str() + "," +
                             z.str() + ")"};
      }
  double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  return timed_bound(triples == 1000, secs, 5.0, "1000 triples");
}

// C4: sigma_i case tables match the rho-pullback and the square commutes
Outcome c4() {
  for (int n : {2, 3}) {
    PrimeContext ctx(3, n);
    for (int i = 1; i <= n; ++i)
      for (BasisIndex u : sp_basis(ctx)) {
        SpElement su = SpElement::basis(u);
        if (!(sigma(i, su) == sigma_via_pullback(i, su, ctx)))
          return {false, "table/pullback mismatch at sigma_" +
                             std::to_string(i) + "(" + u.str() + ")"};
        if (!(rho(sigma(i, su), ctx) == tau(i, rho(su, ctx))))
          return {false, "square fails at sigma_" + std::to_string(i) + "(" +
                             u.str() + ")"};
      }
  }
  return {true, "n in {2,3}, exact"};
}

// golden generator-image tables, frozen by hand from the formulas
struct Golden {
  int n;
  const char* spec;
  std::vector<const char*> entries;
};

const std::vector<Golden>& golden_tables() {
  static const std::vector<Golden> tables = {
      {2, "c^1", {"-x1^2", "-x1*x2"}},
      {2, "c~^1", {"-x1^2", "-x1*x2"}},
      {2, "c+^1", {"d1^2", "d1*d2"}},
      {2, "c~+^1", {"d1^2", "d1*d2"}},
      {2, "c-^1", {"-x1^2", "-x1*x2"}},
      {2, "c~-^1", {"-x1^2", "-x1*x2"}},
      {2, "c^2", {"-x1^2", "-x1*x2", "-x2^2"}},
      {2, "c~^2", {"-x1*x2", "-x2^2"}},
      {2, "c+^2", {"-x1^2", "-x1*d2", "d2^2"}},
      {2, "c~+^2", {"-x1*d2", "d2^2"}},
      {2, "c-^2", {"d1^2", "-x2*d1", "-x2^2"}},
      {2, "c~-^2", {"-x2*d1", "-x2^2"}},
      {3, "c^1", {"-x1^2", "-x1*x2", "-x1*x3"}},
      {3, "c~^1", {"-x1^2", "-x1*x2", "-x1*x3"}},
      {3, "c+^1", {"d1^2", "d1*d2", "d1*d3"}},
      {3, "c~+^1", {"d1^2", "d1*d2", "d1*d3"}},
      {3, "c-^1", {"-x1^2", "-x1*x2", "-x1*x3"}},
      {3, "c~-^1", {"-x1^2", "-x1*x2", "-x1*x3"}},
      {3, "c^2", {"-x1^2", "-x1*x2", "-x2^2", "-x1*x3"}},
      {3, "c~^2", {"-x1*x2", "-x2^2", "-x1*x3"}},
      {3, "c+^2", {"-x1^2", "-x1*d2", "-x1*d3", "d2^2"}},
      {3, "c~+^2", {"-x1*d2", "-x1*d3", "d2^2"}},
      {3, "c-^2", {"d1^2", "-x2*d1", "-x3*d1", "-x2^2"}},
      {3, "c~-^2", {"-x2*d1", "-x3*d1", "-x2^2"}},
      {3, "c^3", {"-x1^2", "-x1*x2", "-x1*x3", "-x2^2", "-x2*x3", "-x3^2"}},
      {3, "c~^3", {"-x1*x3", "-x2*x3", "-x3^2"}},
      {3, "c+^3", {"-x1^2", "-x1*x2", "-x2^2", "-x1*d3", "-x2*d3", "d3^2"}},
      {3, "c~+^3", {"-x1*d3", "-x2*d3", "d3^2"}},
      {3, "c-^3", {"d1^2", "d1*d2", "d2^2", "-x3*d1", "-x3*d2", "-x3^2"}},
      {3, "c~-^3", {"-x3*d1", "-x3*d2", "-x3^2"}},
  };
  return tables;
}

// C5: span equalities for the sigma-chain images at n = 3 and exact golden
// generator-image tables for n in {2,3}
Outcome c5() {
  CheckReport spans = verify_automorphic_images(PrimeContext(3, 3));
  if (!spans.pass) return {false, spans.witnesses.front()};
  int tables = 0;
  for (const Golden& t : golden_tables()) {
    PrimeContext ctx(3, t.n);
    auto got = image_generators(t.spec, ctx);
    if (got.size() != t.entries.size())
      return {false, std::string(t.spec) + ": generator count mismatch"};
    for (std::size_t i = 0; i < got.size(); ++i)
      if (!(got[i] == parse_weyl(t.entries[i], ctx)))
        return {false, std::string(t.spec) + "[" + std::to_string(i) +
                           "] != " + t.entries[i]};
    ++tables;
  }
  return {true, "12 spans + " + std::to_string(tables) + " golden tables"};
}

// C6: exponent-map injectivity: row family, column families, the catalogued
// collision, and brute-force agreement for |I| <= 4, n <= 3
Outcome c6() {
  for (int n : {2, 3}) {
    PrimeContext ctx(3, n);
    std::vector<std::pair<int, int>> row;
    for (int j = 1; j <= n; ++j) row.emplace_back(1, j);
    if (!exponent_map_injective(row, ctx)) return {false, "row family failed"};
    for (int k = 1; k <= n; ++k) {
      std::vector<std::pair<int, int>> col;
      for (int i = 1; i <= n; ++i) col.emplace_back(i, k);
      if (!exponent_map_injective(col, ctx))
        return {false, "column family k=" + std::to_string(k) + " failed"};
    }
  }
  PrimeContext ctx2(3, 2);
  std::vector<std::pair<int, int>> bad = {{1, 1}, {2, 2}, {1, 2}};
  if (exponent_map_injective(bad, ctx2))
    return {false, "catalogued non-injective family reported injective"};
  auto coll = exponent_collision_bruteforce(bad, ctx2, 4);
  if (!coll) return {false, "no explicit collision found"};

  long cases = 0;
  for (int n : {2, 3}) {
    PrimeContext ctx(3, n);
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) all.emplace_back(i, j);
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
      if (!pick.empty()) {
        std::vector<std::pair<int, int>> I;
        bool admissible = true;
        for (auto s : pick) {
          auto [i, j] = all[s];
          for (auto s2 : pick) {
            auto [k, l] = all[s2];
            if (i == l && j == k && i != j) admissible = false;
          }
          I.emplace_back(i, j);
        }
        if (admissible) {
          ++cases;
          if (exponent_map_injective(I, ctx) !=
              !exponent_collision_bruteforce(I, ctx, 4).has_value())
            return false;
        }
      }
      if (pick.size() == 4) return true;
      for (std::size_t s = from; s < all.size(); ++s) {
        pick.push_back(s);
        if (!rec(s + 1)) return false;
        pick.pop_back();
      }
      return true;
    };
    if (!rec(0)) return {false, "brute-force disagreement"};
  }
  return {true, std::to_string(cases) + " index sets vs brute force"};
}

// C7: the expansion of (C_12 - 1) acting on X1 X2 at p=3, N=6
Outcome c7() {
  PrimeContext ctx(3, 2);
  IwasawaElement zeta =
      IwasawaElement::from_generators({parse_lie("c(1,2)", ctx)});
  zeta.add_term({1}, 1);
  TruncatedWeyl tw = iwasawa_to_weyl(zeta, 6, ctx);
  if (!(tw.tail_floor >= 6)) return {false, "uncertified precision"};
  Poly image = act(tw.body, parse_poly("X1*X2", ctx));
  Rational lead = image.coeff({2, 2});
  Rational second = image.coeff({3, 3});
  if (lead != -3) return {false, "leading coefficient " + rational_str(lead)};
  if (second != Rational(9, 2))
    return {false, "second coefficient " + rational_str(second)};
  if (!(valuation(lead, ctx) == ExtInt::finite(1)) ||
      !(valuation(second, ctx) == ExtInt::finite(2)))
    return {false, "wrong valuations"};
  for (const auto& [exp, c] : image.terms()) {
    int deg = exp[0] + exp[1];
    if (deg < 4) return {false, "unexpected low-degree term"};
  }
  return {true, "-3*X1^2*X2^2 + 9/2*X1^3*X2^3 + ..."};
}

// C8: the three faithfulness rank experiments at n=2, p=3, N=6
Outcome c8() {
  auto t0 = clock_type::now();
  ExperimentConfig cfg((PrimeContext(3, 2)));
  cfg.precision = 6;
  std::string note;
  for (const CheckReport& r : run_suite("faithfulness", cfg)) {
    if (!r.pass) return {false, r.name + ": " + r.witnesses.front()};
    note += (note.empty() ? "" : ", ") + r.name;
  }
  double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  return timed_bound(true, secs, 600.0, note);
}

// C9: the adjoint action of a on c generates the full matrix algebra
Outcome c9() {
  auto t0 = clock_type::now();
  for (int n : {2, 3}) {
    PrimeContext ctx(3, n);
    CheckReport r =
        burnside_irreducibility(bracket_action_matrices("a", "c", ctx));
    const std::string want =
        n == 2 ? "algebra dimension 9 of 9" : "algebra dimension 36 of 36";
    if (!r.pass || r.details != want)
      return {false, "n=" + std::to_string(n) + ": " + r.details};
  }
  double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  return timed_bound(true, secs, 60.0, "dimensions 9 and 36");
}

// C10: coefficient recovery is a roundtrip on 100 seeded elements
Outcome c10() {
  ExperimentConfig cfg((PrimeContext(3, 2)));
  for (const CheckReport& r : run_suite("recovery", cfg))
    if (!r.pass) return {false, r.witnesses.front()};
  return {true, "100 seeded elements, degree <= 4"};
}

// C11: recomputation at N+5 agrees on every certified term
Outcome c11() {
  ExperimentConfig cfg((PrimeContext(3, 2)));
  cfg.precision = 6;
  for (const CheckReport& r : run_suite("precision", cfg))
    if (!r.pass) return {false, r.witnesses.front()};
  return {true, "50 seeded instances"};
}

std::string run_cli(const std::string& bin, const std::string& args) {
  std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

// C12: parser roundtrip on 500 seeded values and byte-identical CLI output
Outcome c12() {
  PrimeContext ctx(3, 2);
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> e(0, 4), le(-4, 4), num(-9, 9), den(1, 4),
      nterms(0, 4);
  auto coeff = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  const auto basis = sp_basis(ctx);
  std::uniform_int_distribution<std::size_t> bpos(0, basis.size() - 1);
  for (int t = 0; t < 125; ++t) {
    SpElement x;
    for (int s = nterms(rng); s > 0; --s) x.add_term(basis[bpos(rng)], coeff());
    if (!(parse_lie(format_sp(x), ctx) == x)) return {false, "lie roundtrip"};

    WeylElement w(2);
    for (int s = nterms(rng); s > 0; --s)
      w.add_term({e(rng), e(rng), e(rng), e(rng)}, coeff());
    if (!(parse_weyl(format_weyl(w), ctx) == w))
      return {false, "weyl roundtrip"};

    Poly f = Poly::poly(2);
    for (int s = nterms(rng); s > 0; --s) f.add_term({e(rng), e(rng)}, coeff());
    if (!(parse_poly(format_poly(f), ctx) == f))
      return {false, "poly roundtrip"};

    Poly g = Poly::laurent(2);
    for (int s = nterms(rng); s > 0; --s)
      g.add_term({le(rng), le(rng)}, coeff());
    if (!(parse_laurent(format_poly(g), ctx) == g))
      return {false, "laurent roundtrip"};
  }

  const char* bin = std::getenv("SPMET_CLI_BIN");
  if (!bin) return {false, "SPMET_CLI_BIN not set"};
  for (const char* args :
       {"bracket \"b(1,1)\" \"c(1,1)\" --format json",
        "verify --suite exponent --format json",
        "verify --suite tables --format json"}) {
    std::string a = run_cli(bin, args), b = run_cli(bin, args);
    if (a.empty() || a != b)
      return {false, std::string("CLI output not byte-identical for: ") + args};
  }
  return {true, "500 values + byte-identical CLI runs"};
}

}  // namespace

int main() {
  run_criterion("C1", "bracket route agreement, n in {2,3}", c1);
  run_criterion("C2", "algebra homomorphism, n in {2,3}", c2);
  run_criterion("C3", "Jacobi identity, n = 2", c3);
  run_criterion("C4", "sigma tables and commuting square", c4);
  run_criterion("C5", "sigma-chain spans and golden image tables", c5);
  run_criterion("C6", "exponent map injectivity vs brute force", c6);
  run_criterion("C7", "series expansion of (C12-1) on X1 X2", c7);
  run_criterion("C8", "faithfulness rank experiments", c8);
  run_criterion("C9", "adjoint action generates full matrix algebra", c9);
  run_criterion("C10", "coefficient recovery roundtrip", c10);
  run_criterion("C11", "precision soundness N vs N+5", c11);
  run_criterion("C12", "parser roundtrip and CLI determinism", c12);
  if (!g_all_pass) {
    std::printf("ACCEPTANCE: FAIL\n");
    return 1;
  }
  std::printf("ACCEPTANCE: PASS\n");
  return 0;
}
