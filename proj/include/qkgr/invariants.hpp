#pragma once

#include "qkgr/qring.hpp"

namespace qkgr {

// Two-point invariant I_d(O_kappa, O_nu^dual-indexed): 1 iff nu equals kappa
// with its first d rows and columns removed. d = 0 is Poincare duality.
Int two_point_dual(const GrassCtx& ctx, const Partition& kappa,
                   const Partition& nu, int d);

// Two-point invariant I_d(O_kappa, O_nu) in the structure-sheaf basis:
// 1 iff kappa_i + nu_{m+d+1-i} <= k+d for every d < i <= m (vacuous for
// d >= m), else 0.
Int two_point_sheaf(const GrassCtx& ctx, const Partition& kappa,
                    const Partition& nu, int d);

// Three-point invariant I_d(O_lambda, O_mu, O_nu^dual): the structure
// constants reassembled degree by degree against the dual two-point pairing.
Int gw_dual(QKRing& ring, const Partition& lambda, const Partition& mu,
            const Partition& nu, int d);

// Three-point invariant I_d(O_lambda, O_mu, O_nu) in the sheaf basis.
Int gw_sheaf(QKRing& ring, const Partition& lambda, const Partition& mu,
             const Partition& nu, int d);

// Independent route for l(lambda) <= d: push the computation into the
// classical K-theory of Gr(min(m+d,n), n) with d columns removed from every
// input; when min(m+d,n) = n the target is a point and the answer is 1.
Int special_gw(const GrassCtx& ctx, const Partition& lambda,
               const Partition& mu, const Partition& nu, int d);

// Numerator of t_q * O_{lambda^dual} = (O_{lambda^dual} - O_1 * O_{lambda^dual})
// / (1-q). The element itself has power-series coordinates, so only the
// numerator is representable; the (1-q) division becomes exact after chi_q
// (see dual_pairing).
QKElement dual_basis_numerator(QKRing& ring, const Partition& lambda);

// chi_q(O_lambda * t_q * O_{nu^dual}) as an exact polynomial; equals
// delta_{lambda,nu}. A division remainder throws internal_error, since
// divisibility after chi_q is a theorem.
QPoly dual_pairing(QKRing& ring, const Partition& lambda, const Partition& nu);

// chi_q(t_q * O_lambda * O_mu * O_nu) = sum_d N^{nu^dual,d}_{lambda,mu} q^d.
// Manifestly symmetric in (lambda, mu, nu).
QPoly sym3(QKRing& ring, const Partition& lambda, const Partition& mu,
           const Partition& nu);

} // namespace qkgr
