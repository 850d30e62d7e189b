#include "qkgr/verify.hpp"

#include <chrono>

#include "qkgr/invariants.hpp"
#include "qkgr/k0_oracle.hpp"
#include "qkgr/parallel.hpp"
#include "qkgr/pieri.hpp"
#include "qkgr/qh_oracle.hpp"

namespace qkgr {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Report make_report(const std::string& suite, const QKRing& ring) {
    Report r;
    r.suite = suite;
    r.m = ring.ctx().m();
    r.n = ring.ctx().n();
    return r;
}

void finish(Report& r, const Timer& t) {
    r.pass = r.violations.empty();
    r.elapsed_seconds = t.seconds();
}

std::string int_str(const Int& v) { return v.str(); }

} // namespace

Report check_s3(QKRing& ring, int threads) {
    Timer t;
    Report r = make_report("s3", ring);
    ring.full_table(threads);
    const GrassCtx& ctx = ring.ctx();
    auto basis = partitions_in_rectangle(ctx);
    for (const Partition& lambda : basis)
        for (const Partition& mu : basis)
            for (const Partition& nu : basis) {
                Partition mud = dual(ctx, mu);
                Partition nud = dual(ctx, nu);
                for (int d = 0; d <= ctx.m(); ++d) {
                    Int lhs = ring.structure_constant(lambda, mu, nu, d);
                    Int rhs = ring.structure_constant(lambda, nud, mud, d);
                    ++r.checked;
                    if (lhs != rhs)
                        r.violations.push_back(
                            {"lambda=(" + lambda.to_string() + ") mu=(" +
                                 mu.to_string() + ") nu=(" + nu.to_string() +
                                 ") d=" + std::to_string(d),
                             int_str(lhs), int_str(rhs)});
                }
            }
    finish(r, t);
    return r;
}

Report check_duality(QKRing& ring, int threads) {
    Timer t;
    Report r = make_report("duality", ring);
    ring.full_table(threads);
    auto basis = partitions_in_rectangle(ring.ctx());
    for (const Partition& lambda : basis)
        for (const Partition& nu : basis) {
            QPoly pairing = dual_pairing(ring, lambda, nu);
            QPoly expected(lambda == nu ? 1 : 0);
            ++r.checked;
            if (pairing != expected) {
                std::string got = "constant " +
                                  int_str(pairing.coeff(0)) +
                                  (pairing.degree() > 0 ? " plus higher terms"
                                                        : "");
                r.violations.push_back({"lambda=(" + lambda.to_string() +
                                            ") nu=(" + nu.to_string() + ")",
                                        lambda == nu ? "1" : "0", got});
            }
        }
    finish(r, t);
    return r;
}

Report check_signs(QKRing& ring, int threads) {
    Timer t;
    Report r = make_report("signs", ring);
    auto table = ring.full_table(threads);
    const GrassCtx& ctx = ring.ctx();
    for (const auto& [pair, product] : table) {
        int base = pair.first.weight() + pair.second.weight();
        for (const auto& [nu, poly] : product.terms())
            for (const auto& [d, c] : poly.coeffs()) {
                ++r.checked;
                int parity = (filtration_grade(ctx, nu, d) - base) % 2;
                bool ok = parity == 0 ? c > 0 : c < 0;
                if (!ok)
                    r.violations.push_back(
                        {"lambda=(" + pair.first.to_string() + ") mu=(" +
                             pair.second.to_string() + ") nu=(" +
                             nu.to_string() + ") d=" + std::to_string(d),
                         parity == 0 ? "positive" : "negative", int_str(c)});
            }
    }
    finish(r, t);
    return r;
}

Report check_pieri_consistency(QKRing& ring, int threads) {
    (void)threads;  // cheap enough serial; kept for interface uniformity
    Timer t;
    Report r = make_report("pieri", ring);
    const GrassCtx& ctx = ring.ctx();
    auto basis = partitions_in_rectangle(ctx);
    for (int i = 1; i <= ctx.k(); ++i)
        for (const Partition& lambda : basis)
            for (const Partition& nu : basis) {
                Int direct = quantum_pieri_q_coeff(ctx, i, lambda, nu);
                Int stable = deg1_via_stable(ctx, i, lambda, nu);
                ++r.checked;
                if (direct != stable)
                    r.violations.push_back(
                        {"i=" + std::to_string(i) + " lambda=(" +
                             lambda.to_string() + ") nu=(" + nu.to_string() +
                             ")",
                         int_str(stable), int_str(direct)});
            }
    for (const Partition& mu : basis) {
        QKElement boxed = mult_box(ctx, mu);
        ++r.checked;
        if (boxed != ring.pieri(1, mu))
            r.violations.push_back({"mult_box mu=(" + mu.to_string() + ")",
                                    "quantum_pieri(1, mu)", "differs"});
    }
    finish(r, t);
    return r;
}

Report check_leading(QKRing& ring, int threads) {
    Timer t;
    Report r = make_report("leading", ring);
    auto table = ring.full_table(threads);
    const GrassCtx& ctx = ring.ctx();
    auto basis = partitions_in_rectangle(ctx);
    for (const auto& [pair, product] : table) {
        int grade = pair.first.weight() + pair.second.weight();
        QKElement oracle = qh_star(ctx, pair.first, pair.second);
        for (const Partition& nu : basis)
            for (int d = 0; d <= ctx.m(); ++d) {
                if (filtration_grade(ctx, nu, d) != grade) continue;
                Int lhs = product.coefficient(nu, d);
                Int rhs = oracle.coefficient(nu, d);
                ++r.checked;
                if (lhs != rhs)
                    r.violations.push_back(
                        {"lambda=(" + pair.first.to_string() + ") mu=(" +
                             pair.second.to_string() + ") nu=(" +
                             nu.to_string() + ") d=" + std::to_string(d),
                         int_str(rhs), int_str(lhs)});
            }
    }
    finish(r, t);
    return r;
}

Report check_deg0(QKRing& ring, int samples, std::uint64_t seed) {
    Timer t;
    Report r = make_report("deg0", ring);
    auto basis = partitions_in_rectangle(ring.ctx());
    Lcg rng(seed);
    for (int s = 0; s < samples; ++s) {
        Partition lambda, mu;
        do {  // keep the independent oracle affordable
            lambda = basis[rng.uniform(basis.size())];
            mu = basis[rng.uniform(basis.size())];
        } while (lambda.weight() + mu.weight() > 8);
        auto expansion = k0_expand_product(lambda, mu);
        for (const Partition& nu : basis) {
            Int lhs = ring.structure_constant(lambda, mu, nu, 0);
            auto it = expansion.find(nu);
            Int rhs = it == expansion.end() ? Int(0) : it->second;
            ++r.checked;
            if (lhs != rhs)
                r.violations.push_back({"lambda=(" + lambda.to_string() +
                                            ") mu=(" + mu.to_string() +
                                            ") nu=(" + nu.to_string() + ")",
                                        int_str(rhs), int_str(lhs)});
        }
    }
    finish(r, t);
    return r;
}

Report check_assoc(QKRing& ring, int samples, std::uint64_t seed) {
    Timer t;
    Report r = make_report("assoc", ring);
    const GrassCtx& ctx = ring.ctx();
    auto basis = partitions_in_rectangle(ctx);
    auto check_triple = [&](const Partition& a, const Partition& b,
                            const Partition& c) {
        QKElement left = ring.star_general(ring.star(a, b), schubert(ctx, c));
        QKElement right = ring.star_general(schubert(ctx, a), ring.star(b, c));
        ++r.checked;
        if (left != right)
            r.violations.push_back({"lambda=(" + a.to_string() + ") mu=(" +
                                        b.to_string() + ") nu=(" +
                                        c.to_string() + ")",
                                    "equal products", "differ"});
    };
    if (samples <= 0) {
        for (const Partition& a : basis)
            for (const Partition& b : basis)
                for (const Partition& c : basis) check_triple(a, b, c);
    } else {
        Lcg rng(seed);
        for (int s = 0; s < samples; ++s) {
            const Partition& a = basis[rng.uniform(basis.size())];
            const Partition& b = basis[rng.uniform(basis.size())];
            const Partition& c = basis[rng.uniform(basis.size())];
            check_triple(a, b, c);
        }
    }
    finish(r, t);
    return r;
}

} // namespace qkgr
