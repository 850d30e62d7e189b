#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qkgr {

// Integer partition in English convention: weakly decreasing positive rows,
// stored canonically without trailing zeros. lambda_i for i > length() reads 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> rows);

    // Text form: comma-separated rows, e.g. "3,2,1"; "" and "0" denote the
    // empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& rows() const { return rows_; }
    int row(int i) const;                       // 1-based; 0 beyond length
    int length() const { return static_cast<int>(rows_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return rows_.empty(); }
    bool contains(const Partition& mu) const;   // mu inside this
    Partition conjugate() const;
    std::string to_string() const;              // "3,2,1"; empty -> "0"

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }
    // Global deterministic order: weight ascending, then lexicographic on rows.
    // All serialized output follows this order.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
        return a.rows_ < b.rows_;
    }

private:
    std::vector<int> rows_;
    int weight_ = 0;
};

// Grassmannian Gr(m,n): partitions live in the m x k rectangle, k = n - m.
class GrassCtx {
public:
    GrassCtx(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return n_ - m_; }
    bool fits(const Partition& p) const;
    Partition rectangle() const;                // (k)^m
    void require_fits(const Partition& p) const; // throws invalid_argument

    friend bool operator==(const GrassCtx& a, const GrassCtx& b) {
        return a.m_ == b.m_ && a.n_ == b.n_;
    }
    friend bool operator!=(const GrassCtx& a, const GrassCtx& b) {
        return !(a == b);
    }

private:
    int m_;
    int n_;
};

// Poincare dual: the 180-degree rotated complement in the m x k rectangle.
Partition dual(const GrassCtx& ctx, const Partition& lambda);

Partition remove_cols(const Partition& lambda, int d);  // (max(lambda_i - d, 0))
Partition remove_rows(const Partition& lambda, int d);  // (lambda_{d+1}, ...)
Partition hat_bar(const Partition& lambda, int d);      // d rows, then d columns

// Skew-shape predicates; arguments are (inner, outer).
bool is_horizontal_strip(const Partition& inner, const Partition& outer);
bool is_vertical_strip(const Partition& inner, const Partition& outer);
bool is_rook_strip(const Partition& inner, const Partition& outer);

// Number of nonempty rows / columns of outer/inner. Inner must be contained.
int skew_rows(const Partition& inner, const Partition& outer);
int skew_cols(const Partition& inner, const Partition& outer);

// Boxes (row, col), 1-based, with no box strictly to the south-east;
// ordered by row then column.
std::vector<std::pair<int, int>> outer_rim(const Partition& lambda);

// All partitions inside the m x k rectangle in the global order; C(n,m) many.
std::vector<Partition> partitions_in_rectangle(const GrassCtx& ctx);

} // namespace qkgr
