#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qkgr {

// Structure constants grow combinatorially; no overflow is acceptable.
using Int = boost::multiprecision::cpp_int;

// Sparse polynomial in the quantum parameter q with exact integer coefficients.
// Invariant: no stored zero coefficients; exponents >= 0.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Int& constant);               // constant polynomial
    QPoly(long long constant) : QPoly(Int(constant)) {}
    static QPoly q(int d = 1);                // the monomial q^d

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Int>& coeffs() const { return coeffs_; }
    Int coeff(int d) const;
    int degree() const;                       // -1 for the zero polynomial
    Int eval_at_one() const;

    void add_term(int d, const Int& c);

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;

    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

private:
    std::map<int, Int> coeffs_;
};

// Exact quotient p / (1-q); a nonzero remainder (p(1) != 0) throws
// internal_error, since divisibility is a theorem wherever this is used.
QPoly divide_by_one_minus_q(const QPoly& p);

} // namespace qkgr
