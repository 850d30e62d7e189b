#pragma once

#include <map>
#include <vector>

#include "qkgr/partition.hpp"
#include "qkgr/qpoly.hpp"

namespace qkgr {

// Degree-zero oracle via stable Grothendieck polynomials, structurally
// unrelated to the Pieri/Giambelli path. Polynomials live in a fixed number
// of variables; a monomial is its exponent vector.
using ExpVec = std::vector<int>;
using SymPoly = std::map<ExpVec, Int>;

// G_lambda(x_1..x_nvars): signed generating function of set-valued tableaux,
// sign (-1)^(entries - |lambda|). Zero when l(lambda) > nvars. Memoized.
const SymPoly& g_polynomial(const Partition& lambda, int nvars);

SymPoly sym_mul(const SymPoly& a, const SymPoly& b, int nvars);

// Writes f as a finite integer combination of G_nu by eliminating the
// lexicographically greatest monomial of the minimal-degree layer. Throws
// internal_error if elimination runs away (non-symmetric or non-integral
// input).
std::map<Partition, Int> expand_in_g_basis(SymPoly f, int nvars);

// Coefficient of G_nu in G_lambda * G_mu, using
// max(l(lambda)+l(mu), l(nu)) variables; stable in the rectangle-free sense.
Int k0_constant(const Partition& lambda, const Partition& mu,
                const Partition& nu);

// Full expansion of G_lambda * G_mu in l(lambda)+l(mu) variables; every nu
// with a nonzero stable constant has l(nu) <= l(lambda)+l(mu), which the
// verification suites check empirically.
std::map<Partition, Int> k0_expand_product(const Partition& lambda,
                                           const Partition& mu);

} // namespace qkgr
