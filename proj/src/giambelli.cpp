#include "qkgr/giambelli.hpp"

#include <algorithm>

#include "qkgr/errors.hpp"
#include "qkgr/pieri.hpp"

namespace qkgr {

const GiambelliNode* GiambelliCache::node(const Partition& lambda) {
    ctx_.require_fits(lambda);
    if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;

    GiambelliNode nd;
    nd.lambda = lambda;
    if (lambda.empty()) {
        nd.unit = true;
    } else if (lambda.length() == 1) {
        nd.terms.push_back({Int(1), lambda.row(1), node(Partition{})});
    } else {
        // P_lambda = sum over p in a..k and vertical strips mu/nu of
        // (-1)^{|mu/nu|} binom(p-a-1+c(nu/muhat), p-a-|mu/nu|) O_p P_nu,
        // where a = lambda_1, mu is the tail, muhat = mu minus one column.
        int a = lambda.row(1);
        Partition mu = remove_rows(lambda, 1);
        Partition muhat = remove_cols(mu, 1);
        // vertical strips mu/nu: each row loses at most one box
        std::vector<int> rows(mu.length(), 0);
        std::vector<Partition> inners;
        auto rec = [&](auto&& self, int j) -> void {
            if (j > mu.length()) {
                inners.push_back(Partition(rows));
                return;
            }
            for (int drop = 0; drop <= 1; ++drop) {
                int v = mu.row(j) - drop;
                if (v < 0) continue;
                if (j < mu.length() && v < mu.row(j + 1) - 1) continue;
                if (j > 1 && v > rows[j - 2]) continue;
                rows[j - 1] = v;
                self(self, j + 1);
            }
        };
        rec(rec, 1);
        for (int p = a; p <= ctx_.k(); ++p) {
            for (const Partition& nu : inners) {
                int dropped = mu.weight() - nu.weight();
                Int c = binom(p - a - 1 + skew_cols(muhat, nu), p - a - dropped);
                if (dropped % 2 == 1) c = -c;
                if (c == 0) continue;
                nd.terms.push_back({c, p, node(nu)});
            }
        }
    }
    pool_.push_back(std::move(nd));
    const GiambelliNode* out = &pool_.back();
    memo_.emplace(lambda, out);
    return out;
}

void GiambelliCache::build_all() {
    for (const Partition& lambda : partitions_in_rectangle(ctx_)) node(lambda);
}

std::vector<std::pair<Int, std::vector<int>>>
GiambelliCache::monomials(const Partition& lambda) {
    // collect coeff per multiset of special indices (kept sorted descending)
    std::map<std::vector<int>, Int> acc;
    auto walk = [&](auto&& self, const GiambelliNode* nd, const Int& coeff,
                    std::vector<int>& factors) -> void {
        if (nd->unit) {
            std::vector<int> key = factors;
            std::sort(key.begin(), key.end(), std::greater<int>());
            acc[key] += coeff;
            return;
        }
        for (const auto& t : nd->terms) {
            factors.push_back(t.p);
            self(self, t.child, coeff * t.coeff, factors);
            factors.pop_back();
        }
    };
    std::vector<int> factors;
    Int one = 1;
    walk(walk, node(lambda), one, factors);

    std::vector<std::pair<Int, std::vector<int>>> out;
    for (const auto& [key, c] : acc)
        if (c != 0) out.emplace_back(c, key);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.second.size() != y.second.size())
            return x.second.size() > y.second.size();
        return x.second < y.second;
    });
    return out;
}

} // namespace qkgr
