#include "qkgr/invariants.hpp"

#include <algorithm>

#include "qkgr/errors.hpp"

namespace qkgr {

Int two_point_dual(const GrassCtx& ctx, const Partition& kappa,
                   const Partition& nu, int d) {
    ctx.require_fits(kappa);
    ctx.require_fits(nu);
    if (d < 0) return 0;
    return nu == hat_bar(kappa, d) ? 1 : 0;
}

Int two_point_sheaf(const GrassCtx& ctx, const Partition& kappa,
                    const Partition& nu, int d) {
    ctx.require_fits(kappa);
    ctx.require_fits(nu);
    if (d < 0) return 0;
    for (int i = d + 1; i <= ctx.m(); ++i)
        if (kappa.row(i) + nu.row(ctx.m() + d + 1 - i) > ctx.k() + d) return 0;
    return 1;
}

namespace {

template <typename TwoPoint>
Int gw_sum(QKRing& ring, const Partition& lambda, const Partition& mu,
           const Partition& nu, int d, TwoPoint&& pairing) {
    if (d < 0) return 0;
    const QKElement& product = ring.star(lambda, mu);
    Int total = 0;
    for (const Partition& kappa : partitions_in_rectangle(ring.ctx()))
        for (int e = 0; e <= d; ++e) {
            Int pair = pairing(ring.ctx(), kappa, nu, e);
            if (pair != 0) total += product.coefficient(kappa, d - e) * pair;
        }
    return total;
}

} // namespace

Int gw_dual(QKRing& ring, const Partition& lambda, const Partition& mu,
            const Partition& nu, int d) {
    return gw_sum(ring, lambda, mu, nu, d, two_point_dual);
}

Int gw_sheaf(QKRing& ring, const Partition& lambda, const Partition& mu,
             const Partition& nu, int d) {
    return gw_sum(ring, lambda, mu, nu, d, two_point_sheaf);
}

namespace {

// q-degree-0 part of the product, as the classical K(X) product.
QKElement classical_part(const QKElement& x) {
    QKElement out(x.ctx());
    for (const auto& [nu, poly] : x.terms()) out.add_term(nu, 0, poly.coeff(0));
    return out;
}

} // namespace

Int special_gw(const GrassCtx& ctx, const Partition& lambda,
               const Partition& mu, const Partition& nu, int d) {
    ctx.require_fits(lambda);
    ctx.require_fits(mu);
    ctx.require_fits(nu);
    if (d < 1) throw invalid_argument("special_gw requires d >= 1");
    if (lambda.length() > d)
        throw invalid_argument("special_gw requires l(lambda) <= d");
    int b = std::min(ctx.m() + d, ctx.n());
    if (b == ctx.n()) return 1;  // the target is a point; chi of the unit
    GrassCtx derived(b, ctx.n());
    QKRing& ring = ring_for(derived);
    Partition lh = remove_cols(lambda, d);
    Partition mh = remove_cols(mu, d);
    Partition nh = remove_cols(nu, d);
    // chi of the classical triple product in K(Gr(b,n)); only q^0 layers of
    // the quantum products enter
    QKElement first = classical_part(ring.star(lh, mh));
    Int total = 0;
    for (const auto& [kappa, poly] : first.terms()) {
        Int c = poly.coeff(0);
        QKElement second = classical_part(ring.star(kappa, nh));
        total += c * chi_q(second).coeff(0);
    }
    return total;
}

QKElement dual_basis_numerator(QKRing& ring, const Partition& lambda) {
    const GrassCtx& ctx = ring.ctx();
    Partition dv = dual(ctx, lambda);
    return schubert(ctx, dv) - ring.pieri(1, dv);
}

QPoly dual_pairing(QKRing& ring, const Partition& lambda, const Partition& nu) {
    QKElement numerator = dual_basis_numerator(ring, nu);
    QKElement paired = ring.star_general(schubert(ring.ctx(), lambda), numerator);
    return divide_by_one_minus_q(chi_q(paired));
}

QPoly sym3(QKRing& ring, const Partition& lambda, const Partition& mu,
           const Partition& nu) {
    const QKElement& first = ring.star(lambda, mu);
    QKElement triple = ring.star_general(first, schubert(ring.ctx(), nu));
    // multiply by (1 - O_1), then divide chi_q by (1 - q)
    QKElement twisted = triple;
    for (const auto& [kappa, poly] : triple.terms())
        twisted -= ring.pieri(1, kappa) * poly;
    return divide_by_one_minus_q(chi_q(twisted));
}

} // namespace qkgr
