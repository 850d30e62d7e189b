#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "qkgr/giambelli.hpp"
#include "qkgr/qk_element.hpp"

namespace qkgr {

// The quantum K-theory ring QK(Gr(m,n)). Products are computed by letting the
// Giambelli polynomial of the left factor act on the right factor through the
// quantum Pieri rule. Every product is validated against the structural
// theorems (q-degree <= l(lambda), weight filtration) before it is returned.
class QKRing {
public:
    explicit QKRing(const GrassCtx& ctx);
    ~QKRing();  // defined where Column is complete

    const GrassCtx& ctx() const { return ctx_; }
    GiambelliCache& giambelli() { return giambelli_; }

    // O_i * O_lambda from the precomputed Pieri cache.
    const QKElement& pieri(int i, const Partition& lambda) const;

    // O_lambda * O_mu, memoized by ordered pair. Thread-safe.
    const QKElement& star(const Partition& lambda, const Partition& mu);

    // Bilinear extension of star over Z[q]-combinations.
    QKElement star_general(const QKElement& x, const QKElement& y);

    // N^{nu,d}_{lambda,mu}
    Int structure_constant(const Partition& lambda, const Partition& mu,
                           const Partition& nu, int d);

    // All unordered basis products (lhs >= rhs in the global order), computed
    // column-parallel; the result order is schedule-independent.
    std::map<std::pair<Partition, Partition>, QKElement>
    full_table(int threads = 1);

    // Frees per-column evaluation memos (finished products stay cached).
    void release_columns();

    // Number of products that passed the structural assertions so far.
    long long products_validated() const { return products_validated_.load(); }

private:
    struct Column;

    const QKElement& star_locked(const Partition& lambda, const Partition& mu);
    QKElement evaluate(const Partition& lambda, Column& col) const;
    void validate(const Partition& lambda, const Partition& mu,
                  const QKElement& product);

    GrassCtx ctx_;
    GiambelliCache giambelli_;
    // Pieri cache indexed [i][lambda position]; built eagerly, read lock-free.
    std::vector<std::vector<QKElement>> pieri_;
    std::map<Partition, int> index_;
    std::vector<Partition> basis_;

    std::mutex mutex_;
    std::map<std::pair<Partition, Partition>, QKElement> star_cache_;
    std::map<Partition, std::unique_ptr<Column>> columns_;
    std::atomic<long long> products_validated_{0};
};

// Shared per-context ring instances (used by derived-context invariants).
QKRing& ring_for(const GrassCtx& ctx);

} // namespace qkgr
