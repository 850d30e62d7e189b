#pragma once

#include <map>

#include "qkgr/partition.hpp"
#include "qkgr/qpoly.hpp"

namespace qkgr {

// Formal Z[q]-linear combination of Schubert classes O_lambda inside a fixed
// Grassmannian context. Invariants: every key fits the rectangle; no stored
// zero polynomials.
class QKElement {
public:
    explicit QKElement(const GrassCtx& ctx) : ctx_(ctx) {}

    const GrassCtx& ctx() const { return ctx_; }
    const std::map<Partition, QPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& nu, const QPoly& c);
    void add_term(const Partition& nu, int d, const Int& c);
    Int coefficient(const Partition& nu, int d) const;

    QKElement& operator+=(const QKElement& o);
    QKElement& operator-=(const QKElement& o);
    friend QKElement operator+(QKElement a, const QKElement& b) { return a += b; }
    friend QKElement operator-(QKElement a, const QKElement& b) { return a -= b; }
    QKElement operator*(const QPoly& c) const;  // scalar multiple
    QKElement operator-() const;

    friend bool operator==(const QKElement& a, const QKElement& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QKElement& a, const QKElement& b) {
        return !(a == b);
    }

private:
    GrassCtx ctx_;
    std::map<Partition, QPoly> terms_;
};

// The basis element O_lambda.
QKElement schubert(const GrassCtx& ctx, const Partition& lambda);

// Z[q]-linear extension of the sheaf Euler characteristic; every O_lambda
// maps to 1.
QPoly chi_q(const QKElement& x);

// |nu| + n*d, the grade of q^d O_nu in the topological filtration.
int filtration_grade(const GrassCtx& ctx, const Partition& nu, int d);

} // namespace qkgr
