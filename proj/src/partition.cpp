#include "qkgr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qkgr/errors.hpp"

namespace qkgr {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0)
            throw invalid_argument("partition rows must be nonnegative");
        if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
            throw invalid_argument("partition rows must be weakly decreasing");
    }
    weight_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "0") return Partition{};
    std::vector<int> rows;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw invalid_argument("bad partition text: '" + text + "'");
        }
        if (used != piece.size())
            throw invalid_argument("bad partition text: '" + text + "'");
        rows.push_back(value);
    }
    if (text.back() == ',')
        throw invalid_argument("bad partition text: '" + text + "'");
    return Partition(std::move(rows));
}

int Partition::row(int i) const {
    if (i < 1 || i > length()) return 0;
    return rows_[i - 1];
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.rows_[i] > rows_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (rows_.empty()) return Partition{};
    std::vector<int> cols(rows_[0]);
    for (int j = 1; j <= rows_[0]; ++j) {
        int count = 0;
        for (int r : rows_)
            if (r >= j) ++count;
        cols[j - 1] = count;
    }
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    if (rows_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows_[i]);
    }
    return out;
}

GrassCtx::GrassCtx(int m, int n) : m_(m), n_(n) {
    if (m <= 0 || n <= m)
        throw invalid_argument("GrassCtx requires 0 < m < n");
}

bool GrassCtx::fits(const Partition& p) const {
    return p.length() <= m_ && p.row(1) <= k();
}

Partition GrassCtx::rectangle() const {
    return Partition(std::vector<int>(m_, k()));
}

void GrassCtx::require_fits(const Partition& p) const {
    if (!fits(p))
        throw invalid_argument("partition " + p.to_string() + " does not fit the " +
                               std::to_string(m_) + "x" + std::to_string(k()) +
                               " rectangle");
}

Partition dual(const GrassCtx& ctx, const Partition& lambda) {
    ctx.require_fits(lambda);
    std::vector<int> rows(ctx.m());
    for (int i = 1; i <= ctx.m(); ++i)
        rows[i - 1] = ctx.k() - lambda.row(ctx.m() + 1 - i);
    return Partition(std::move(rows));
}

Partition remove_cols(const Partition& lambda, int d) {
    std::vector<int> rows;
    rows.reserve(lambda.length());
    for (int r : lambda.rows()) rows.push_back(std::max(r - d, 0));
    return Partition(std::move(rows));
}

Partition remove_rows(const Partition& lambda, int d) {
    if (d >= lambda.length()) return Partition{};
    std::vector<int> rows(lambda.rows().begin() + d, lambda.rows().end());
    return Partition(std::move(rows));
}

Partition hat_bar(const Partition& lambda, int d) {
    return remove_cols(remove_rows(lambda, d), d);
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    // at most one box per column
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.row(i + 1) > inner.row(i)) return false;
    return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    // at most one box per row
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.row(i) - inner.row(i) > 1) return false;
    return true;
}

bool is_rook_strip(const Partition& inner, const Partition& outer) {
    return is_horizontal_strip(inner, outer) && is_vertical_strip(inner, outer);
}

int skew_rows(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner))
        throw invalid_argument("skew_rows: inner shape not contained in outer");
    int count = 0;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.row(i) > inner.row(i)) ++count;
    return count;
}

int skew_cols(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner))
        throw invalid_argument("skew_cols: inner shape not contained in outer");
    return skew_rows(inner.conjugate(), outer.conjugate());
}

std::vector<std::pair<int, int>> outer_rim(const Partition& lambda) {
    std::vector<std::pair<int, int>> boxes;
    for (int i = 1; i <= lambda.length(); ++i) {
        // row i keeps columns max(lambda_{i+1}, 1) .. lambda_i
        for (int j = std::max(lambda.row(i + 1), 1); j <= lambda.row(i); ++j)
            boxes.emplace_back(i, j);
    }
    return boxes;
}

namespace {

void list_partitions(int maxRow, int rowsLeft, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    out.push_back(Partition(acc));
    if (rowsLeft == 0) return;
    int cap = acc.empty() ? maxRow : acc.back();
    for (int r = 1; r <= cap; ++r) {
        acc.push_back(r);
        list_partitions(maxRow, rowsLeft - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_rectangle(const GrassCtx& ctx) {
    std::vector<Partition> out;
    std::vector<int> acc;
    list_partitions(ctx.k(), ctx.m(), acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qkgr
