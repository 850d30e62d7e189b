#include "qkgr/qk_element.hpp"

#include "qkgr/errors.hpp"

namespace qkgr {

void QKElement::add_term(const Partition& nu, const QPoly& c) {
    if (c.is_zero()) return;
    ctx_.require_fits(nu);
    auto [it, fresh] = terms_.try_emplace(nu, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void QKElement::add_term(const Partition& nu, int d, const Int& c) {
    if (c == 0) return;
    QPoly p;
    p.add_term(d, c);
    add_term(nu, p);
}

Int QKElement::coefficient(const Partition& nu, int d) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? Int(0) : it->second.coeff(d);
}

QKElement& QKElement::operator+=(const QKElement& o) {
    if (ctx_ != o.ctx_) throw invalid_argument("QKElement context mismatch");
    for (const auto& [nu, c] : o.terms_) add_term(nu, c);
    return *this;
}

QKElement& QKElement::operator-=(const QKElement& o) {
    if (ctx_ != o.ctx_) throw invalid_argument("QKElement context mismatch");
    for (const auto& [nu, c] : o.terms_) add_term(nu, -c);
    return *this;
}

QKElement QKElement::operator*(const QPoly& c) const {
    QKElement out(ctx_);
    if (c.is_zero()) return out;
    for (const auto& [nu, p] : terms_) out.terms_[nu] = p * c;
    return out;
}

QKElement QKElement::operator-() const {
    QKElement out(ctx_);
    for (const auto& [nu, p] : terms_) out.terms_[nu] = -p;
    return out;
}

QKElement schubert(const GrassCtx& ctx, const Partition& lambda) {
    QKElement x(ctx);
    x.add_term(lambda, 0, 1);
    return x;
}

QPoly chi_q(const QKElement& x) {
    QPoly out;
    for (const auto& [nu, c] : x.terms()) out += c;
    return out;
}

int filtration_grade(const GrassCtx& ctx, const Partition& nu, int d) {
    ctx.require_fits(nu);
    return nu.weight() + ctx.n() * d;
}

} // namespace qkgr
