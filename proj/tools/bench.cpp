// Compares the OpenMP kernels against their serial reference implementations
// and checks that both routes produce identical results.
#include <chrono>
#include <iostream>
#include <random>

#include "spmet/envelope.hpp"
#include "spmet/metaplectic.hpp"
#include "spmet/modaction.hpp"
#include "spmet/weyl.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace spmet;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

WeylElement random_weyl(std::mt19937_64& rng, int n, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), num(-20, 20);
  WeylElement w(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> key(2 * n);
    for (int i = 0; i < 2 * n; ++i) key[i] = e(rng);
    int c = num(rng);
    w.add_term(key, c == 0 ? 1 : c);
  }
  return w;
}

void bench_weyl_product(int n, int terms, int max_exp) {
  std::mt19937_64 rng(20240117);
  WeylElement u = random_weyl(rng, n, terms, max_exp);
  WeylElement v = random_weyl(rng, n, terms, max_exp);

  auto t0 = clock_type::now();
  WeylElement serial = weyl_multiply_serial(u, v);
  double ts = seconds_since(t0);

  t0 = clock_type::now();
  WeylElement parallel = weyl_multiply(u, v);
  double tp = seconds_since(t0);

  std::cout << "weyl_multiply  n=" << n << " " << terms << "x" << terms
            << " terms  serial " << ts << "s   omp " << tp << "s   speedup "
            << (tp > 0 ? ts / tp : 0) << "   agree "
            << (serial == parallel ? "yes" : "NO") << "\n";
}

// columns are certified series images of (G-1)^alpha over the c basis acting
// on probe monomials; this is the shape the rank experiments assemble
void bench_action_matrix(int alpha_cap, int probe_deg, long N) {
  PrimeContext ctx(3, 2);
  std::vector<SpElement> gens;
  for (BasisIndex g : subalgebra("c", ctx)) gens.push_back(SpElement::basis(g));
  std::vector<WeylElement> ops;
  for (const auto& alpha :
       Window{alpha_cap, false, std::nullopt}.enumerate(static_cast<int>(gens.size()))) {
    IwasawaElement z = IwasawaElement::from_generators(gens);
    z.add_term(alpha, 1);
    ops.push_back(iwasawa_to_weyl(z, N, ctx).body);
  }
  std::vector<Poly> probes;
  for (const auto& g : Window{probe_deg, false, std::nullopt}.enumerate(2))
    probes.push_back(Poly::monomial(2, g, 1));
  Window window{200, false, std::nullopt};

  auto t0 = clock_type::now();
  ActionMatrix serial = action_matrix_serial(ops, probes, window);
  double ts = seconds_since(t0);

  t0 = clock_type::now();
  ActionMatrix parallel = action_matrix(ops, probes, window);
  double tp = seconds_since(t0);

  std::cout << "action_matrix  " << ops.size() << " series ops x "
            << probes.size() << " probes (N=" << N << ")  serial " << ts
            << "s   omp " << tp << "s   speedup " << (tp > 0 ? ts / tp : 0)
            << "   agree " << (serial.entries == parallel.entries ? "yes" : "NO")
            << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP\n";
#endif
  bench_weyl_product(2, 150, 8);
  bench_weyl_product(2, 400, 10);
  bench_weyl_product(3, 300, 6);
  bench_action_matrix(3, 10, 8);
  bench_action_matrix(2, 14, 10);
  return 0;
}
