#pragma once

#include "qkgr/qk_element.hpp"

namespace qkgr {

// binom(x, y) = 0 unless 0 <= y <= x.
Int binom(int x, int y);

// Classical K-theory Pieri coefficient of O_nu in O_i . O_lambda (Lenart's
// rule), stable in the i <= 0 convention O_i = 1: nonzero only on horizontal
// strips nu/lambda, value (-1)^{|nu/lambda|-i} * binom(r(nu/lambda)-1,
// |nu/lambda|-i). No rectangle constraint.
Int lenart_coeff(int i, const Partition& lambda, const Partition& nu);

// O_i . O_lambda in K(Gr(m,n)): Lenart terms with out-of-rectangle shapes
// dropped. Pure q-degree 0.
QKElement classical_pieri(const GrassCtx& ctx, int i, const Partition& lambda);

// Coefficient of q O_nu in O_i * O_lambda. Nonzero only when l(lambda) = m
// and nu is obtained from lambda by removing outer-rim boxes, at least one
// per row: lambda_{j+1} - 1 <= nu_j <= lambda_j - 1 for all j. Then the value
// is (-1)^e binom(r, e) with e = |nu| + n - i - |lambda| and r the number of
// rows 1..m-1 with nu_j >= max(lambda_{j+1}, 1).
Int quantum_pieri_q_coeff(const GrassCtx& ctx, int i, const Partition& lambda,
                          const Partition& nu);

// O_i * O_lambda in QK(Gr(m,n)); quantum corrections live in q-degree 1 only.
QKElement quantum_pieri(const GrassCtx& ctx, int i, const Partition& lambda);

// Independent recomputation of quantum_pieri_q_coeff through stable classical
// coefficients: sum over j = nu_1+1 .. k of lenart_coeff(i, lambda,
// (j, nu_1+1, ..., nu_m+1)).
Int deg1_via_stable(const GrassCtx& ctx, int i, const Partition& lambda,
                    const Partition& nu);

// O_1 * O_mu by the rook-strip rule: sum over strict rook strips
// lambda/mu in the rectangle of (-1)^{|lambda/mu|-1} O_lambda, plus, when
// mu_1 = k and l(mu) = m, q times the signed sum over rook strips
// nu/hat_bar(mu,1) with nu_1 <= k-1 and l(nu) <= m-1.
QKElement mult_box(const GrassCtx& ctx, const Partition& mu);

} // namespace qkgr
