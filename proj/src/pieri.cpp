#include "qkgr/pieri.hpp"

#include <algorithm>

#include "qkgr/errors.hpp"

namespace qkgr {

Int binom(int x, int y) {
    if (y < 0 || y > x) return 0;
    y = std::min(y, x - y);
    Int out = 1;
    for (int t = 1; t <= y; ++t) {
        out *= x - y + t;
        out /= t;
    }
    return out;
}

Int lenart_coeff(int i, const Partition& lambda, const Partition& nu) {
    if (i <= 0) return nu == lambda ? 1 : 0;  // O_i = 1 for i <= 0
    if (!is_horizontal_strip(lambda, nu)) return 0;
    int boxes = nu.weight() - lambda.weight();
    if (boxes < i) return 0;
    int r = skew_rows(lambda, nu);
    Int b = binom(r - 1, boxes - i);
    return (boxes - i) % 2 == 0 ? b : -b;
}

namespace {

// Enumerates horizontal-strip extensions of lambda inside the m x k
// rectangle; fn receives each outer shape.
template <typename Fn>
void for_horizontal_extensions(const GrassCtx& ctx, const Partition& lambda,
                               Fn&& fn) {
    std::vector<int> rows(ctx.m(), 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j > ctx.m()) {
            fn(Partition(rows));
            return;
        }
        int lo = lambda.row(j);
        int hi = j == 1 ? ctx.k() : lambda.row(j - 1);
        for (int v = lo; v <= hi; ++v) {
            rows[j - 1] = v;
            self(self, j + 1);
        }
        rows[j - 1] = 0;
    };
    rec(rec, 1);
}

} // namespace

QKElement classical_pieri(const GrassCtx& ctx, int i, const Partition& lambda) {
    ctx.require_fits(lambda);
    if (i < 0 || i > ctx.k())
        throw invalid_argument("special class index out of range 0..k");
    QKElement out(ctx);
    if (i == 0) {
        out.add_term(lambda, 0, 1);
        return out;
    }
    for_horizontal_extensions(ctx, lambda, [&](const Partition& nu) {
        out.add_term(nu, 0, lenart_coeff(i, lambda, nu));
    });
    return out;
}

Int quantum_pieri_q_coeff(const GrassCtx& ctx, int i, const Partition& lambda,
                          const Partition& nu) {
    ctx.require_fits(lambda);
    ctx.require_fits(nu);
    if (i < 1 || i > ctx.k())
        throw invalid_argument("special class index out of range 1..k");
    int m = ctx.m();
    if (lambda.length() != m) return 0;
    // nu deletes a subset of the outer rim with at least one box per row
    for (int j = 1; j <= m; ++j) {
        if (nu.row(j) > lambda.row(j) - 1) return 0;
        if (nu.row(j) < lambda.row(j + 1) - 1) return 0;
    }
    int e = nu.weight() + ctx.n() - i - lambda.weight();
    int r = 0;  // rows meeting the rim, excluding the rim's bottom row
    for (int j = 1; j <= m - 1; ++j)
        if (nu.row(j) >= std::max(lambda.row(j + 1), 1)) ++r;
    Int b = binom(r, e);
    return e % 2 == 0 ? b : -b;
}

QKElement quantum_pieri(const GrassCtx& ctx, int i, const Partition& lambda) {
    QKElement out = classical_pieri(ctx, i, lambda);
    if (i == 0 || lambda.length() != ctx.m()) return out;
    // enumerate rim removals: nu_j in [max(lambda_{j+1}-1, 0), lambda_j - 1];
    // any such choice is automatically weakly decreasing
    int m = ctx.m();
    std::vector<int> rows(m, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j > m) {
            Partition nu(rows);
            out.add_term(nu, 1, quantum_pieri_q_coeff(ctx, i, lambda, nu));
            return;
        }
        int lo = std::max(lambda.row(j + 1) - 1, 0);
        int hi = lambda.row(j) - 1;
        for (int v = lo; v <= hi; ++v) {
            rows[j - 1] = v;
            self(self, j + 1);
        }
        rows[j - 1] = 0;
    };
    rec(rec, 1);
    return out;
}

Int deg1_via_stable(const GrassCtx& ctx, int i, const Partition& lambda,
                    const Partition& nu) {
    ctx.require_fits(lambda);
    ctx.require_fits(nu);
    Int total = 0;
    for (int j = nu.row(1) + 1; j <= ctx.k(); ++j) {
        std::vector<int> rows;
        rows.reserve(ctx.m() + 1);
        rows.push_back(j);
        for (int t = 1; t <= ctx.m(); ++t) rows.push_back(nu.row(t) + 1);
        total += lenart_coeff(i, lambda, Partition(std::move(rows)));
    }
    return total;
}

namespace {

// Adds to out all ways of growing base by a rook strip whose rows stay within
// rowCap rows and colCap columns; each shape is reported with the strip size.
template <typename Fn>
void for_rook_extensions(const Partition& base, int rowCap, int colCap,
                         Fn&& fn) {
    std::vector<int> rows(rowCap, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j > rowCap) {
            Partition nu(rows);
            if (is_rook_strip(base, nu)) fn(nu);
            return;
        }
        for (int add = 0; add <= 1; ++add) {
            int v = base.row(j) + add;
            if (v > colCap) continue;
            if (j > 1 && v > rows[j - 2]) continue;
            rows[j - 1] = v;
            self(self, j + 1);
        }
        rows[j - 1] = 0;
    };
    rec(rec, 1);
}

} // namespace

QKElement mult_box(const GrassCtx& ctx, const Partition& mu) {
    ctx.require_fits(mu);
    QKElement out(ctx);
    // classical part: strict rook strips lambda/mu, sign (-1)^{|strip|-1}
    for_rook_extensions(mu, ctx.m(), ctx.k(), [&](const Partition& lambda) {
        int boxes = lambda.weight() - mu.weight();
        if (boxes == 0) return;
        out.add_term(lambda, 0, boxes % 2 == 1 ? 1 : -1);
    });
    // quantum part only off the far corner column/row
    if (mu.row(1) == ctx.k() && mu.length() == ctx.m()) {
        Partition base = hat_bar(mu, 1);
        for_rook_extensions(base, ctx.m() - 1, ctx.k() - 1,
                            [&](const Partition& nu) {
                                int boxes = nu.weight() - base.weight();
                                out.add_term(nu, 1, boxes % 2 == 0 ? 1 : -1);
                            });
    }
    return out;
}

} // namespace qkgr
