// The metaplectic map rho: sp_2n -> A_n and the pulled-back automorphisms
// sigma_i, with the table checks built on top of them.
#ifndef SPMET_METAPLECTIC_HPP
#define SPMET_METAPLECTIC_HPP

#include <string>
#include <vector>

#include "spmet/report.hpp"
#include "spmet/symplectic.hpp"
#include "spmet/weyl.hpp"

namespace spmet {

// rho(a_ij) = -1/2 delta_ij - x_j d_i, rho(b_ij) = d_i d_j,
// rho(c_ij) = -x_i x_j; extended linearly.
WeylElement rho_basis(BasisIndex idx, const PrimeContext& ctx);
WeylElement rho(const SpElement& x, const PrimeContext& ctx);

// Solve rho(y) = w for y; throws if w is not in the image of rho on sp.
SpElement rho_preimage(const WeylElement& w, const PrimeContext& ctx);

// sigma_i from the explicit case tables.
SpElement sigma(int i, const SpElement& x);

// sigma_i computed as the rho-pullback of tau_i; must agree with sigma().
SpElement sigma_via_pullback(int i, const SpElement& x, const PrimeContext& ctx);

// sigma_1 o ... o sigma_n
SpElement sigma_total(const SpElement& x);

// [rho(g) for g in subalgebra(spec)]
std::vector<WeylElement> image_generators(const std::string& spec,
                                          const PrimeContext& ctx);

// Checks rho([u,v]) = [rho(u), rho(v)] on every ordered basis pair.
CheckReport verify_homomorphism(const PrimeContext& ctx);

// Checks the span equalities for the sigma-chain images of c^k and c~^k
// against the catalogued right-hand sides, for k = 1..n.
CheckReport verify_automorphic_images(const PrimeContext& ctx);

// Applies the chain sigma_first o ... o sigma_last (rightmost first) to x.
SpElement sigma_chain(int first, int last, const SpElement& x);

}  // namespace spmet

#endif
