#include <doctest.h>

#include "spmet/expr.hpp"
#include "spmet/metaplectic.hpp"
#include "spmet/verify.hpp"

using namespace spmet;

namespace {

const PrimeContext ctx(3, 2);
const PrimeContext ctx3n(3, 3);

}  // namespace

TEST_CASE("exponent map matrices") {
  RatMatrix m = exponent_map({{1, 1}, {1, 2}}, ctx);
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(1, 1) == 1);
  CHECK(exponent_map({}, ctx).cols() == 0);
  // column family: alpha -> (alpha_1, ..., alpha_k + |alpha|, ...)
  RatMatrix col = exponent_map({{1, 2}, {2, 2}}, ctx);
  CHECK(col.at(1, 0) == 1);
  CHECK(col.at(1, 1) == 2);
  CHECK_THROWS_AS(exponent_map({{1, 2}, {2, 1}}, ctx), std::invalid_argument);
  CHECK_THROWS_AS(exponent_map({{0, 1}}, ctx), std::invalid_argument);
}

TEST_CASE("exponent map injectivity") {
  CHECK(exponent_map_injective({{1, 1}, {1, 2}}, ctx));
  CHECK(exponent_map_injective({{1, 1}}, ctx));
  CHECK(!exponent_map_injective({{1, 1}, {2, 2}, {1, 2}}, ctx));
  auto coll = exponent_collision_bruteforce({{1, 1}, {2, 2}, {1, 2}}, ctx, 2);
  REQUIRE(coll.has_value());
  // the catalogued collision: f(1,1,0) = (2,2) = f(0,0,2)
  std::vector<int> f1(2, 0), f2(2, 0);
  auto apply = [&](const std::vector<int>& alpha, std::vector<int>& f) {
    const std::vector<std::pair<int, int>> I = {{1, 1}, {2, 2}, {1, 2}};
    for (std::size_t c = 0; c < I.size(); ++c) {
      f[I[c].first - 1] += alpha[c];
      f[I[c].second - 1] += alpha[c];
    }
  };
  apply(coll->first, f1);
  apply(coll->second, f2);
  CHECK(f1 == f2);
  CHECK(coll->first != coll->second);
}

TEST_CASE("rank test agrees with brute force on all small index sets") {
  for (const PrimeContext* c : {&ctx, &ctx3n}) {
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= c->n; ++i)
      for (int j = 1; j <= c->n; ++j) all.emplace_back(i, j);
    // every admissible subset of size <= 3 here; size 4 runs in the suite
    for (std::size_t x = 0; x < all.size(); ++x)
      for (std::size_t y = x + 1; y < all.size(); ++y)
        for (std::size_t z = y + 1; z < all.size(); ++z) {
          std::vector<std::pair<int, int>> I = {all[x], all[y], all[z]};
          bool admissible = true;
          for (auto [i, j] : I)
            for (auto [k, l] : I)
              if (i == l && j == k && i != j) admissible = false;
          if (!admissible) continue;
          CHECK(exponent_map_injective(I, *c) ==
                !exponent_collision_bruteforce(I, *c, 4).has_value());
        }
  }
}

TEST_CASE("local finiteness") {
  CheckReport diag = local_finiteness_check(
      image_generators("a0", ctx), {}, parse_poly("X1*X2", ctx), 4, 8);
  CHECK(diag.pass);
  CHECK(diag.details.find("dimension 1") != std::string::npos);

  CheckReport empty =
      local_finiteness_check({}, {}, parse_poly("1", ctx), 1, 2);
  CHECK(empty.pass);

  // degree-0 operators stay inside the degree slice of the seed
  CheckReport slice = local_finiteness_check(
      image_generators("a", ctx), {}, parse_poly("X1^2*X2", ctx), 4, 16);
  CHECK(slice.pass);

  // a degree-raising operator escapes any cap
  CheckReport escape = local_finiteness_check(
      {parse_weyl("x1", ctx)}, {}, parse_poly("1", ctx), 3, 50);
  CHECK(!escape.pass);
  CHECK(!escape.witnesses.empty());

  // filtration operators widen the seed before closure
  CheckReport widened = local_finiteness_check(
      image_generators("a0", ctx), {parse_weyl("x1^2", ctx)},
      parse_poly("1", ctx), 2, 8);
  CHECK(widened.pass);
  CHECK(widened.details.find("dimension 2") != std::string::npos);
}

TEST_CASE("multiplication map experiment") {
  ExperimentConfig cfg(ctx);
  cfg.n_part = "c";
  cfg.iwasawa_cap = 2;
  cfg.pbw_cap = 2;
  cfg.window_degree = 16;
  cfg.precision = 6;
  CheckReport r = multiplication_map_check(cfg);
  CHECK_MESSAGE(r.pass, (r.witnesses.empty() ? "" : r.witnesses.front()));

  // structural consistency with the exponent map on c^1
  ExperimentConfig c1 = cfg;
  c1.n_part = "c^1";
  CHECK(multiplication_map_check(c1).pass);
  std::vector<std::pair<int, int>> I;
  for (int j = 1; j <= ctx.n; ++j) I.emplace_back(1, j);
  CHECK(exponent_map_injective(I, ctx));
}

TEST_CASE("faithfulness experiment small cases") {
  ExperimentConfig cfg(ctx);
  cfg.n_part = "c";
  cfg.iwasawa_cap = 0;
  cfg.probe_degree = 2;
  cfg.window_degree = 4;
  CheckReport r = faithfulness_experiment(cfg);
  CHECK(r.pass);  // only the identity operator: rank 1

  cfg.iwasawa_cap = 1;
  cfg.probe_degree = 6;
  cfg.window_degree = 8;
  CHECK(faithfulness_experiment(cfg).pass);

  // monotonicity: the cap-1 family is a subfamily of the cap-2 family, so
  // full rank at cap 2 implies full rank at cap 1
  cfg.iwasawa_cap = 2;
  cfg.probe_degree = 8;
  cfg.window_degree = 10;
  CheckReport r2 = faithfulness_experiment(cfg);
  cfg.iwasawa_cap = 1;
  CheckReport r1 = faithfulness_experiment(cfg);
  CHECK(r2.pass);
  CHECK(r1.pass);
}

TEST_CASE("burnside criterion") {
  CheckReport r = burnside_irreducibility(bracket_action_matrices("a", "c", ctx));
  CHECK(r.pass);
  CHECK(r.details.find("9 of 9") != std::string::npos);

  CHECK(burnside_irreducibility({RatMatrix::identity(1)}).pass);

  RatMatrix d1 = RatMatrix::identity(2), d2(2, 2);
  d2.at(0, 0) = 2;
  d2.at(1, 1) = 5;
  CheckReport red = burnside_irreducibility({d1, d2});
  CHECK(!red.pass);
  CHECK(!red.witnesses.empty());
}

TEST_CASE("burnside at rank three") {
  CheckReport r =
      burnside_irreducibility(bracket_action_matrices("a", "c", ctx3n));
  CHECK(r.pass);
  CHECK(r.details.find("36 of 36") != std::string::npos);
}

TEST_CASE("table suite passes") {
  for (const PrimeContext* c : {&ctx, &ctx3n})
    for (const CheckReport& r : paper_table_suite(*c))
      CHECK_MESSAGE(r.pass, (r.name + ": " +
                            (r.witnesses.empty() ? "" : r.witnesses.front())));
}

TEST_CASE("suite runner") {
  ExperimentConfig cfg(ctx);
  for (const CheckReport& r : run_suite("burnside", cfg)) CHECK(r.pass);
  for (const CheckReport& r : run_suite("exponent", cfg)) CHECK(r.pass);
  CHECK_THROWS_AS(run_suite("bogus", cfg), std::invalid_argument);
  CHECK(suite_names().size() == 8);
}

TEST_CASE("recovery and precision suites") {
  ExperimentConfig cfg(ctx);
  for (const CheckReport& r : run_suite("recovery", cfg))
    CHECK_MESSAGE(r.pass, (r.witnesses.empty() ? "" : r.witnesses.front()));
  for (const CheckReport& r : run_suite("precision", cfg))
    CHECK_MESSAGE(r.pass, (r.witnesses.empty() ? "" : r.witnesses.front()));
}
