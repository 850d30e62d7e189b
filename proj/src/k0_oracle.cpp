#include "qkgr/k0_oracle.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "qkgr/errors.hpp"

namespace qkgr {

namespace {

// Set-valued tableau enumeration, box by box in row-major order. Each box
// holds a nonempty subset of {1..nvars}; rows weakly increase and columns
// strictly increase across the min/max of adjacent sets.
void enumerate_tableaux(const Partition& lambda, int nvars, SymPoly& out) {
    int rows = lambda.length();
    if (rows == 0) {
        out[ExpVec(nvars, 0)] = 1;
        return;
    }
    if (rows > nvars) return;  // a first column of l boxes needs l values
    std::vector<std::vector<int>> maxima(rows);  // max entry per filled box
    for (int r = 0; r < rows; ++r) maxima[r].assign(lambda.row(r + 1), 0);
    ExpVec counts(nvars, 0);
    int sign_boxes = lambda.weight();

    auto rec = [&](auto&& self, int r, int c, int entries) -> void {
        if (r == rows) {
            auto [it, fresh] = out.try_emplace(counts, 0);
            Int delta = (entries - sign_boxes) % 2 == 0 ? 1 : -1;
            it->second += delta;
            if (it->second == 0) out.erase(it);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= lambda.row(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, maxima[r][c - 1]);           // row: weak
        if (r > 0 && c < lambda.row(r)) {
            lo = std::max(lo, maxima[r - 1][c] + 1);              // column: strict
        }
        if (lo > nvars) return;
        // choose the set as a min value plus any subset of larger values
        std::vector<int> chosen;
        auto pick = [&](auto&& grow, int v, bool started) -> void {
            if (started) {
                maxima[r][c] = chosen.back();
                self(self, nr, nc, entries + static_cast<int>(chosen.size()));
            }
            for (int w = v; w <= nvars; ++w) {
                chosen.push_back(w);
                ++counts[w - 1];
                grow(grow, w + 1, true);
                --counts[w - 1];
                chosen.pop_back();
            }
        };
        pick(pick, lo, false);
    };
    rec(rec, 0, 0, 0);
}

struct GKey {
    Partition lambda;
    int nvars;
    bool operator<(const GKey& o) const {
        if (nvars != o.nvars) return nvars < o.nvars;
        return lambda < o.lambda;
    }
};

std::mutex g_mutex;
std::map<GKey, std::unique_ptr<SymPoly>> g_cache;

} // namespace

const SymPoly& g_polynomial(const Partition& lambda, int nvars) {
    if (nvars < 0) throw invalid_argument("g_polynomial: nvars must be >= 0");
    std::scoped_lock lock(g_mutex);
    GKey key{lambda, nvars};
    auto it = g_cache.find(key);
    if (it == g_cache.end()) {
        auto poly = std::make_unique<SymPoly>();
        enumerate_tableaux(lambda, nvars, *poly);
        it = g_cache.emplace(std::move(key), std::move(poly)).first;
    }
    return *it->second;
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b, int nvars) {
    SymPoly out;
    ExpVec e(nvars);
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.try_emplace(e, 0);
            it->second += ca * cb;
            if (it->second == 0) out.erase(it);
        }
    return out;
}

namespace {

int total_degree(const ExpVec& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

} // namespace

std::map<Partition, Int> expand_in_g_basis(SymPoly f, int nvars) {
    std::map<Partition, Int> out;
    // every exponent stays below the largest column count seen in f, so
    // discovered shapes are capped; beyond that the elimination has run away
    int max_exp = 0;
    for (const auto& [e, c] : f)
        for (int v : e) max_exp = std::max(max_exp, v);
    int weight_cap = max_exp * nvars;

    while (!f.empty()) {
        // minimal-degree layer, lexicographically greatest exponent vector
        int min_deg = -1;
        const ExpVec* lead = nullptr;
        for (const auto& [e, c] : f) {
            int deg = total_degree(e);
            if (min_deg < 0 || deg < min_deg) {
                min_deg = deg;
                lead = &e;
            } else if (deg == min_deg && e > *lead) {
                lead = &e;
            }
        }
        ExpVec alpha = *lead;
        Int c = f[alpha];
        // the leading monomial of a symmetric minimal layer is sorted
        for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
            if (alpha[i] < alpha[i + 1])
                throw internal_error("g-basis elimination: leading monomial is "
                                     "not a partition (input not symmetric?)");
        while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
        Partition nu(alpha);
        if (nu.weight() > weight_cap)
            throw internal_error("g-basis elimination ran away");
        out[nu] += c;
        const SymPoly& g = g_polynomial(nu, nvars);
        for (const auto& [e, gc] : g) {
            auto [it, fresh] = f.try_emplace(e, 0);
            it->second -= c * gc;
            if (it->second == 0) f.erase(it);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Int k0_constant(const Partition& lambda, const Partition& mu,
                const Partition& nu) {
    int nvars = std::max(lambda.length() + mu.length(), nu.length());
    if (nvars == 0) return lambda.empty() && mu.empty() && nu.empty() ? 1 : 0;
    SymPoly f = sym_mul(g_polynomial(lambda, nvars), g_polynomial(mu, nvars),
                        nvars);
    auto expansion = expand_in_g_basis(std::move(f), nvars);
    auto it = expansion.find(nu);
    return it == expansion.end() ? Int(0) : it->second;
}

std::map<Partition, Int> k0_expand_product(const Partition& lambda,
                                           const Partition& mu) {
    int nvars = lambda.length() + mu.length();
    if (nvars == 0) return {{Partition{}, Int(1)}};
    SymPoly f = sym_mul(g_polynomial(lambda, nvars), g_polynomial(mu, nvars),
                        nvars);
    return expand_in_g_basis(std::move(f), nvars);
}

} // namespace qkgr
