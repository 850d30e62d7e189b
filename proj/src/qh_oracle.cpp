#include "qkgr/qh_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "qkgr/errors.hpp"

namespace qkgr {

QKElement qh_pieri(const GrassCtx& ctx, int i, const Partition& lambda) {
    ctx.require_fits(lambda);
    if (i < 0 || i > ctx.k())
        throw invalid_argument("special cycle index out of range 0..k");
    QKElement out(ctx);
    if (i == 0) {
        out.add_term(lambda, 0, 1);
        return out;
    }
    int m = ctx.m();
    // classical: horizontal strips with exactly i boxes
    {
        std::vector<int> rows(m, 0);
        auto rec = [&](auto&& self, int j, int left) -> void {
            if (j > m) {
                if (left == 0) out.add_term(Partition(rows), 0, 1);
                return;
            }
            int lo = lambda.row(j);
            int hi = j == 1 ? ctx.k() : lambda.row(j - 1);
            for (int v = lo; v <= hi && v - lo <= left; ++v) {
                rows[j - 1] = v;
                self(self, j + 1, left - (v - lo));
            }
            rows[j - 1] = 0;
        };
        rec(rec, 1, i);
    }
    // quantum: coefficient 1 on each chain nu interlacing lambda - 1
    if (lambda.row(m) >= 1) {
        int target = lambda.weight() + i - ctx.n();
        if (target >= 0) {
            std::vector<int> rows(m, 0);
            auto rec = [&](auto&& self, int j, int left) -> void {
                if (j > m) {
                    if (left == 0) out.add_term(Partition(rows), 1, 1);
                    return;
                }
                int lo = std::max(lambda.row(j + 1) - 1, 0);
                int hi = lambda.row(j) - 1;
                for (int v = lo; v <= hi && v <= left; ++v) {
                    rows[j - 1] = v;
                    self(self, j + 1, left - v);
                }
                rows[j - 1] = 0;
            };
            rec(rec, 1, target);
        }
    }
    return out;
}

namespace {

QKElement qh_apply(const GrassCtx& ctx, int i, const QKElement& x) {
    QKElement out(ctx);
    for (const auto& [nu, c] : x.terms()) out += qh_pieri(ctx, i, nu) * c;
    return out;
}

} // namespace

QKElement qh_star(const GrassCtx& ctx, const Partition& lambda,
                  const Partition& mu) {
    ctx.require_fits(lambda);
    ctx.require_fits(mu);
    QKElement out(ctx);
    int len = lambda.length();
    if (len == 0) {
        out.add_term(mu, 0, 1);
        return out;
    }
    // det(sigma_{lambda_i + j - i}): sum over permutations, each monomial
    // applied to sigma_mu right to left
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> indices;
        bool dead = false;
        int inversions = 0;
        for (int i = 1; i <= len && !dead; ++i) {
            int a = lambda.row(i) + perm[i - 1] - i;
            if (a < 0 || a > ctx.k()) dead = true;  // sigma_a = 0 outside 0..k
            else if (a > 0) indices.push_back(a);
        }
        if (!dead) {
            for (int i = 0; i < len; ++i)
                for (int j = i + 1; j < len; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            QKElement term = schubert(ctx, mu);
            for (auto it = indices.rbegin(); it != indices.rend(); ++it)
                term = qh_apply(ctx, *it, term);
            if (inversions % 2 == 1) term = -term;
            out += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Int qh_lr(const GrassCtx& ctx, const Partition& lambda, const Partition& mu,
          const Partition& nu, int d) {
    ctx.require_fits(nu);
    if (d < 0 || nu.weight() + ctx.n() * d != lambda.weight() + mu.weight())
        throw invalid_argument("qh_lr: grading |nu| + n*d = |lambda| + |mu| "
                               "violated");
    return qh_star(ctx, lambda, mu).coefficient(nu, d);
}

} // namespace qkgr
