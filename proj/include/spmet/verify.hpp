// Decidable finite checks for the injectivity hypotheses and claims:
// exponent maps, gluing hypotheses, faithfulness experiments at desk scale,
// Burnside irreducibility, and the golden-table suite.
//
// A passing faithfulness experiment corroborates the corresponding
// infinite-dimensional statement at the configured caps; it never proves it.
// Reports carry the caps so results are reproducible bit for bit.
#ifndef SPMET_VERIFY_HPP
#define SPMET_VERIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spmet/envelope.hpp"
#include "spmet/modaction.hpp"
#include "spmet/report.hpp"

namespace spmet {

struct ExperimentConfig {
  PrimeContext ctx;
  std::string n_part = "c";  // generator list; "g" means the full sp basis
  std::string h_part = "a";
  int iwasawa_cap = 2;
  int pbw_cap = 2;
  int probe_degree = 12;
  int window_degree = 16;
  long precision = 6;
  unsigned long seed = 12345;
  std::vector<Poly> seeds;  // probe seeds; defaults to {1}

  ExperimentConfig(const PrimeContext& c) : ctx(c) {}
};

// The n x |I| matrix of f_k((a_ij)) = sum a_ij (delta_ik + delta_kj); each
// column is e_i + e_j. Requires at most one of (i,j), (j,i) per pair.
RatMatrix exponent_map(const std::vector<std::pair<int, int>>& I,
                       const PrimeContext& ctx);

// Injective on N_0^I iff full column rank over Q (integer differences of
// nonnegative vectors cover Z^I).
bool exponent_map_injective(const std::vector<std::pair<int, int>>& I,
                            const PrimeContext& ctx);

// Exhaustive collision search over the box {0..box}^|I|; returns a colliding
// pair of exponent vectors if one exists.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
exponent_collision_bruteforce(const std::vector<std::pair<int, int>>& I,
                              const PrimeContext& ctx, int box);

// Closes the span of {seed} (first widened by one application of each
// filtration operator) under the given operators; passes if the dimension
// stabilizes at <= dim_cap within iter_cap rounds.
CheckReport local_finiteness_check(const std::vector<WeylElement>& h_ops,
                                   const std::vector<WeylElement>& filtration_ops,
                                   const Poly& seed, int dim_cap, int iter_cap);

// Finite shadow of the injectivity of KN (x) rho(U(n)) -> rho(U(n)-hat):
// independence of {iwasawa((G-1)^alpha) * rho(u_i)} on the probe seeds, with
// u_i a maximal independent family of PBW-monomial images.
CheckReport multiplication_map_check(const ExperimentConfig& cfg);

// Rank experiment corroborating injectivity of rho restricted to the group
// algebra of cfg.n_part: the images of (G-1)^alpha, |alpha| <= cap, acting
// on all probe monomials, must be linearly independent on the certified
// coefficients (valuation < N).
CheckReport faithfulness_experiment(const ExperimentConfig& cfg);

// Span closure of {id} u generators under matrix products; passes iff the
// algebra dimension reaches d^2 (absolute irreducibility). A smaller closure
// is reported as not absolutely irreducible, which is inconclusive over Q_p.
CheckReport burnside_irreducibility(const std::vector<RatMatrix>& action);

// Matrices of ad(g), g running over subalgebra(actor), acting on the span of
// subalgebra(module); throws if a bracket leaves that span.
std::vector<RatMatrix> bracket_action_matrices(const std::string& actor,
                                               const std::string& module,
                                               const PrimeContext& ctx);

// Golden-table and cross-implementation checks (n <= 3).
std::vector<CheckReport> paper_table_suite(const PrimeContext& ctx);

// Named suites: tables, exponent, gluing, faithfulness, burnside, recovery,
// precision, or all. Reports are returned in declaration order.
std::vector<CheckReport> run_suite(const std::string& name,
                                   const ExperimentConfig& cfg);
std::vector<std::string> suite_names();

}  // namespace spmet

#endif
