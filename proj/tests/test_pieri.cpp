#include <doctest.h>

#include "qkgr/errors.hpp"
#include "qkgr/pieri.hpp"

using namespace qkgr;

namespace {

Partition P(std::initializer_list<int> rows) {
    return Partition(std::vector<int>(rows));
}

} // namespace

TEST_CASE("binomial convention: zero outside 0 <= y <= x") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(40, 20) == Int("137846528820"));
}

TEST_CASE("classical Pieri coefficients") {
    CHECK(lenart_coeff(1, P({}), P({1})) == 1);
    CHECK(lenart_coeff(1, P({1}), P({2, 1})) == -1);
    CHECK(lenart_coeff(2, P({2}), P({2, 2})) == 1);
    CHECK(lenart_coeff(0, P({2}), P({2})) == 1);   // O_0 = 1
    CHECK(lenart_coeff(-3, P({2}), P({2, 1})) == 0);
    CHECK(lenart_coeff(2, P({1}), P({2})) == 0);   // too few boxes
    CHECK(lenart_coeff(1, P({1, 1}), P({2, 2})) == 0);  // not a strip
}

TEST_CASE("classical Pieri elements in the rectangle") {
    GrassCtx ctx(2, 4);
    QKElement expected(ctx);
    expected.add_term(P({1, 1}), 0, 1);
    expected.add_term(P({2}), 0, 1);
    expected.add_term(P({2, 1}), 0, -1);
    CHECK(classical_pieri(ctx, 1, P({1})) == expected);
    CHECK(classical_pieri(ctx, 1, P({2, 2})).is_zero());  // no room
    CHECK(classical_pieri(ctx, 0, P({2, 1})) ==
          schubert(ctx, P({2, 1})));
    CHECK_THROWS_AS(classical_pieri(ctx, 3, P({1})), invalid_argument);
}

TEST_CASE("quantum Pieri q-coefficients") {
    CHECK(quantum_pieri_q_coeff(GrassCtx(3, 6), 2, P({3, 2, 1}), P({2, 1})) ==
          -2);
    CHECK(quantum_pieri_q_coeff(GrassCtx(2, 4), 2, P({2, 2}), P({1, 1})) == 1);
    CHECK(quantum_pieri_q_coeff(GrassCtx(2, 4), 1, P({2, 1}), P({1})) == -1);
    // l(lambda) < m: no quantum part
    CHECK(quantum_pieri_q_coeff(GrassCtx(2, 4), 1, P({2}), P({})) == 0);
    // nu must delete at least one rim box per row
    CHECK(quantum_pieri_q_coeff(GrassCtx(2, 4), 1, P({2, 1}), P({2})) == 0);
}

TEST_CASE("quantum Pieri elements") {
    GrassCtx ctx36(3, 6);
    QKElement expected(ctx36);
    expected.add_term(P({3, 3, 2}), 0, 1);
    expected.add_term(P({2}), 1, 1);
    expected.add_term(P({1, 1}), 1, 1);
    expected.add_term(P({2, 1}), 1, -2);
    CHECK(quantum_pieri(ctx36, 2, P({3, 2, 1})) == expected);

    GrassCtx ctx24(2, 4);
    QKElement point(ctx24);
    point.add_term(P({}), 1, 1);
    CHECK(quantum_pieri(ctx24, 2, P({1, 1})) == point);  // O_2 * O_{1,1} = q

    QKElement qline(ctx24);
    qline.add_term(P({1}), 1, 1);
    CHECK(quantum_pieri(ctx24, 1, P({2, 2})) == qline);
}

TEST_CASE("stable-sum route reproduces the q coefficients") {
    CHECK(deg1_via_stable(GrassCtx(3, 6), 2, P({3, 2, 1}), P({2, 1})) == -2);
    CHECK(deg1_via_stable(GrassCtx(2, 4), 1, P({2, 1}), P({1})) == -1);
    CHECK(deg1_via_stable(GrassCtx(2, 4), 1, P({1}), P({1})) == 0);

    // exhaustive agreement on a couple of small contexts
    for (GrassCtx ctx : {GrassCtx(2, 4), GrassCtx(2, 5), GrassCtx(3, 5)}) {
        auto basis = partitions_in_rectangle(ctx);
        for (int i = 1; i <= ctx.k(); ++i)
            for (const Partition& lambda : basis)
                for (const Partition& nu : basis)
                    CHECK(quantum_pieri_q_coeff(ctx, i, lambda, nu) ==
                          deg1_via_stable(ctx, i, lambda, nu));
    }
}

TEST_CASE("rook-strip rule for multiplication by O_1") {
    GrassCtx ctx24(2, 4);
    QKElement qline(ctx24);
    qline.add_term(P({1}), 1, 1);
    CHECK(mult_box(ctx24, P({2, 2})) == qline);

    QKElement box(ctx24);
    box.add_term(P({1, 1}), 0, 1);
    box.add_term(P({2}), 0, 1);
    box.add_term(P({2, 1}), 0, -1);
    CHECK(mult_box(ctx24, P({1})) == box);

    GrassCtx ctx36(3, 6);
    QKElement grown(ctx36);
    grown.add_term(P({3}), 0, 1);
    grown.add_term(P({2, 1}), 0, 1);
    grown.add_term(P({3, 1}), 0, -1);
    CHECK(mult_box(ctx36, P({2})) == grown);

    // identity with the Pieri route, all shapes of a rectangle
    for (const Partition& mu : partitions_in_rectangle(ctx36))
        CHECK(mult_box(ctx36, mu) == quantum_pieri(ctx36, 1, mu));
}
