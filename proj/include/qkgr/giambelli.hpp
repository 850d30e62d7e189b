#pragma once

#include <deque>
#include <map>
#include <vector>

#include "qkgr/qk_element.hpp"

namespace qkgr {

// Node of the shared Giambelli DAG: P_lambda = sum_t coeff_t * O_{p_t} * child_t,
// with the unit node standing for P_empty = 1. Children are memoized by
// partition, so equal subexpressions are shared.
struct GiambelliNode {
    Partition lambda;
    bool unit = false;
    struct Term {
        Int coeff;
        int p;  // special class index, 1..k
        const GiambelliNode* child;
    };
    std::vector<Term> terms;
};

// Per-context cache of Giambelli expressions. Nodes are owned here and have
// stable addresses; build_all() prepares every node up front so later reads
// need no synchronization.
class GiambelliCache {
public:
    explicit GiambelliCache(const GrassCtx& ctx) : ctx_(ctx) {}

    const GrassCtx& ctx() const { return ctx_; }
    const GiambelliNode* node(const Partition& lambda);
    void build_all();

    // P_lambda flattened to a polynomial: (coefficient, special indices sorted
    // descending), ordered by factor count descending then lexicographically.
    std::vector<std::pair<Int, std::vector<int>>> monomials(const Partition& lambda);

private:
    GrassCtx ctx_;
    std::deque<GiambelliNode> pool_;
    std::map<Partition, const GiambelliNode*> memo_;
};

} // namespace qkgr
