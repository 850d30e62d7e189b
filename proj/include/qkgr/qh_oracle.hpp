#pragma once

#include "qkgr/qk_element.hpp"

namespace qkgr {

// Small-scale quantum cohomology QH(Gr(m,n)) oracle, structurally independent
// of the quantum K-theory path: Bertram's Pieri rule plus the classical
// Giambelli determinant evaluated with quantum products. Elements reuse the
// QKElement carrier with terms read as Schubert cycles sigma_nu.

// sigma_i . sigma_lambda: horizontal strips of exactly i boxes, plus q times
// the rim chain lambda_1-1 >= nu_1 >= lambda_2-1 >= ... >= lambda_m-1 >= nu_m >= 0
// with |nu| = |lambda| + i - n.
QKElement qh_pieri(const GrassCtx& ctx, int i, const Partition& lambda);

// sigma_lambda . sigma_mu via the Jacobi-Trudi determinant
// det(sigma_{lambda_i + j - i}) expanded into iterated Pieri actions on
// sigma_mu.
QKElement qh_star(const GrassCtx& ctx, const Partition& lambda,
                  const Partition& mu);

// Quantum Littlewood-Richardson coefficient c^{nu,d}_{lambda,mu}.
Int qh_lr(const GrassCtx& ctx, const Partition& lambda, const Partition& mu,
          const Partition& nu, int d);

} // namespace qkgr
