#include "qkgr/qpoly.hpp"

#include "qkgr/errors.hpp"

namespace qkgr {

QPoly::QPoly(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

QPoly QPoly::q(int d) {
    QPoly p;
    p.coeffs_[d] = 1;
    return p;
}

Int QPoly::coeff(int d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int QPoly::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Int QPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
}

void QPoly::add_term(int d, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.try_emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
    return out;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::operator-() const {
    QPoly out;
    for (const auto& [d, c] : coeffs_) out.coeffs_[d] = -c;
    return out;
}

QPoly divide_by_one_minus_q(const QPoly& p) {
    // exact division: p(1) = 0 iff (1-q) | p
    if (p.eval_at_one() != 0)
        throw internal_error("polynomial is not divisible by (1-q)");
    QPoly out;
    if (p.is_zero()) return out;
    // quotient coefficient at q^d is the prefix sum p_0 + ... + p_d;
    // the prefix at d = degree(p) is p(1) = 0, so stop one short.
    Int prefix = 0;
    for (int d = 0; d < p.degree(); ++d) {
        prefix += p.coeff(d);
        out.add_term(d, prefix);
    }
    return out;
}

} // namespace qkgr
