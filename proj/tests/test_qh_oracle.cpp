#include <doctest.h>

#include "qkgr/errors.hpp"
#include "qkgr/qh_oracle.hpp"
#include "qkgr/qring.hpp"

using namespace qkgr;

namespace {

Partition P(std::initializer_list<int> rows) {
    return Partition(std::vector<int>(rows));
}

} // namespace

TEST_CASE("cohomological Pieri rule") {
    GrassCtx ctx(2, 4);

    QKElement full(ctx);
    full.add_term(P({2, 2}), 0, 1);
    full.add_term(P({}), 1, 1);
    CHECK(qh_pieri(ctx, 1, P({2, 1})) == full);

    QKElement qline(ctx);
    qline.add_term(P({1}), 1, 1);
    CHECK(qh_pieri(ctx, 2, P({2, 1})) == qline);

    QKElement classical(ctx);
    classical.add_term(P({1, 1}), 0, 1);
    classical.add_term(P({2}), 0, 1);
    CHECK(qh_pieri(ctx, 1, P({1})) == classical);

    // no quantum term unless the bottom row is nonempty
    CHECK(qh_pieri(ctx, 2, P({2})).coefficient(P({}), 1) == 0);
}

TEST_CASE("determinantal products") {
    GrassCtx ctx(2, 4);

    QKElement hooks(ctx);
    hooks.add_term(P({1, 1}), 1, 1);
    hooks.add_term(P({2}), 1, 1);
    CHECK(qh_star(ctx, P({2, 1}), P({2, 1})) == hooks);

    QKElement top(ctx);
    top.add_term(P({}), 2, 1);
    CHECK(qh_star(ctx, P({2, 2}), P({2, 2})) == top);

    CHECK(qh_star(ctx, P({}), P({2, 1})) == schubert(ctx, P({2, 1})));

    // commutativity at oracle scale
    auto basis = partitions_in_rectangle(ctx);
    for (const Partition& a : basis)
        for (const Partition& b : basis)
            CHECK(qh_star(ctx, a, b) == qh_star(ctx, b, a));
}

TEST_CASE("quantum Littlewood-Richardson coefficients") {
    GrassCtx ctx(2, 4);
    CHECK(qh_lr(ctx, P({2, 1}), P({2, 1}), P({1, 1}), 1) == 1);
    CHECK(qh_lr(ctx, P({2}), P({2}), P({2, 2}), 0) == 1);
    CHECK(qh_lr(ctx, P({2}), P({1, 1}), P({}), 1) == 1);
    CHECK_THROWS_AS(qh_lr(ctx, P({2}), P({1, 1}), P({1}), 1),
                    invalid_argument);
}

TEST_CASE("grading and positivity of every oracle product") {
    for (GrassCtx ctx : {GrassCtx(2, 4), GrassCtx(2, 5), GrassCtx(3, 6)}) {
        auto basis = partitions_in_rectangle(ctx);
        for (const Partition& a : basis)
            for (const Partition& b : basis) {
                QKElement product = qh_star(ctx, a, b);
                int grade = a.weight() + b.weight();
                for (const auto& [nu, poly] : product.terms())
                    for (const auto& [d, c] : poly.coeffs()) {
                        CHECK(filtration_grade(ctx, nu, d) == grade);
                        CHECK(c > 0);
                    }
            }
    }
}
