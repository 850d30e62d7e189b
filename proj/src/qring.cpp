#include "qkgr/qring.hpp"

#include <vector>

#include "qkgr/errors.hpp"
#include "qkgr/parallel.hpp"
#include "qkgr/pieri.hpp"

namespace qkgr {

// Evaluation of Giambelli expressions against one fixed right factor. Nodes
// are shared across left factors, so the memo makes a whole table column cost
// little more than its largest single product.
struct QKRing::Column {
    explicit Column(const QKElement& rhs) : rhs(rhs) {}
    QKElement rhs;
    std::unordered_map<const GiambelliNode*, QKElement> memo;
};

QKRing::~QKRing() = default;

QKRing::QKRing(const GrassCtx& ctx) : ctx_(ctx), giambelli_(ctx) {
    giambelli_.build_all();
    basis_ = partitions_in_rectangle(ctx_);
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
        index_.emplace(basis_[i], i);
    pieri_.resize(ctx_.k() + 1);
    for (int i = 0; i <= ctx_.k(); ++i) {
        pieri_[i].reserve(basis_.size());
        for (const Partition& lambda : basis_)
            pieri_[i].push_back(quantum_pieri(ctx_, i, lambda));
    }
}

const QKElement& QKRing::pieri(int i, const Partition& lambda) const {
    if (i < 0 || i > ctx_.k())
        throw invalid_argument("special class index out of range 0..k");
    auto it = index_.find(lambda);
    if (it == index_.end()) {
        ctx_.require_fits(lambda);  // everything inside the rectangle is indexed
        throw internal_error("basis index out of sync");
    }
    return pieri_[i][it->second];
}

QKElement QKRing::evaluate(const Partition& lambda, Column& col) const {
    auto eval = [&](auto&& self, const GiambelliNode* nd) -> const QKElement& {
        if (nd->unit) return col.rhs;
        if (auto it = col.memo.find(nd); it != col.memo.end()) return it->second;
        QKElement acc(ctx_);
        for (const auto& term : nd->terms) {
            const QKElement& inner = self(self, term.child);
            // O_p acting on inner, term by term
            for (const auto& [nu, c] : inner.terms()) {
                auto at = index_.find(nu);
                acc += pieri_[term.p][at->second] * (c * QPoly(term.coeff));
            }
        }
        return col.memo.emplace(nd, std::move(acc)).first->second;
    };
    // the node cache is fully built in the constructor, so this read is pure
    const GiambelliNode* nd =
        const_cast<GiambelliCache&>(giambelli_).node(lambda);
    return eval(eval, nd);
}

void QKRing::validate(const Partition& lambda, const Partition& mu,
                      const QKElement& product) {
    int lowest = lambda.weight() + mu.weight();
    for (const auto& [nu, poly] : product.terms()) {
        for (const auto& [d, c] : poly.coeffs()) {
            if (d > lambda.length())
                throw internal_error("product violates q-degree bound: (" +
                                     lambda.to_string() + ")*(" + mu.to_string() +
                                     ") has q^" + std::to_string(d));
            if (filtration_grade(ctx_, nu, d) < lowest)
                throw internal_error("product violates weight filtration: (" +
                                     lambda.to_string() + ")*(" + mu.to_string() +
                                     ") at (" + nu.to_string() + ", d=" +
                                     std::to_string(d) + ")");
        }
    }
    products_validated_.fetch_add(1);
}

const QKElement& QKRing::star_locked(const Partition& lambda,
                                     const Partition& mu) {
    auto key = std::make_pair(lambda, mu);
    if (auto it = star_cache_.find(key); it != star_cache_.end())
        return it->second;
    auto cit = columns_.find(mu);
    if (cit == columns_.end())
        cit = columns_.emplace(mu, std::make_unique<Column>(schubert(ctx_, mu)))
                  .first;
    QKElement product = evaluate(lambda, *cit->second);
    validate(lambda, mu, product);
    return star_cache_.emplace(std::move(key), std::move(product))
        .first->second;
}

const QKElement& QKRing::star(const Partition& lambda, const Partition& mu) {
    ctx_.require_fits(lambda);
    ctx_.require_fits(mu);
    std::scoped_lock lock(mutex_);
    return star_locked(lambda, mu);
}

QKElement QKRing::star_general(const QKElement& x, const QKElement& y) {
    if (x.ctx() != ctx_ || y.ctx() != ctx_)
        throw invalid_argument("star_general: context mismatch");
    QKElement out(ctx_);
    // iterate columns (right factors) on the outside to share evaluations
    for (const auto& [mu, cmu] : y.terms())
        for (const auto& [lambda, clambda] : x.terms())
            out += star(lambda, mu) * (clambda * cmu);
    return out;
}

Int QKRing::structure_constant(const Partition& lambda, const Partition& mu,
                               const Partition& nu, int d) {
    ctx_.require_fits(nu);
    if (d < 0) return 0;
    return star(lambda, mu).coefficient(nu, d);
}

std::map<std::pair<Partition, Partition>, QKElement>
QKRing::full_table(int threads) {
    int count = static_cast<int>(basis_.size());
    // column c holds products lhs * basis_[c] for all lhs >= basis_[c]
    std::vector<std::vector<std::pair<Partition, QKElement>>> slots(count);
    parallel_for(count, threads, [&](int c) {
        const Partition& mu = basis_[c];
        Column col(schubert(ctx_, mu));
        auto& slot = slots[c];
        for (int l = c; l < count; ++l) {
            QKElement product = evaluate(basis_[l], col);
            validate(basis_[l], mu, product);
            slot.emplace_back(basis_[l], std::move(product));
        }
    });
    std::map<std::pair<Partition, Partition>, QKElement> out;
    std::scoped_lock lock(mutex_);
    for (int c = 0; c < count; ++c)
        for (auto& [lhs, product] : slots[c]) {
            star_cache_.insert_or_assign({lhs, basis_[c]}, product);
            out.emplace(std::make_pair(lhs, basis_[c]), std::move(product));
        }
    return out;
}

void QKRing::release_columns() {
    std::scoped_lock lock(mutex_);
    columns_.clear();
}

QKRing& ring_for(const GrassCtx& ctx) {
    static std::mutex registry_mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<QKRing>> registry;
    std::scoped_lock lock(registry_mutex);
    auto key = std::make_pair(ctx.m(), ctx.n());
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::make_unique<QKRing>(ctx)).first;
    return *it->second;
}

} // namespace qkgr
