#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkgr/qring.hpp"

namespace qkgr {

// Deterministic 64-bit linear congruential generator (Knuth's MMIX constants)
// so every language and run reproduces identical samples.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }
    // uniform draw from 0..n-1 using the high bits
    std::size_t uniform(std::size_t n) {
        return static_cast<std::size_t>((next() >> 32) % n);
    }

private:
    std::uint64_t state_;
};

struct Violation {
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct Report {
    std::string suite;
    int m = 0;
    int n = 0;
    long long checked = 0;
    std::vector<Violation> violations;
    bool pass = true;
    double elapsed_seconds = 0;  // not serialized; reports stay byte-stable
};

// S3-symmetry N^{nu,d}_{lambda,mu} = N^{mu^dual,d}_{lambda,nu^dual},
// exhaustive over all triples and 0 <= d <= m.
Report check_s3(QKRing& ring, int threads = 1);

// Dual-basis pairing chi_q(O_lambda * t_q * O_{nu^dual}) = delta, all pairs.
Report check_duality(QKRing& ring, int threads = 1);

// Alternating-sign property (-1)^{|nu|+nd-|lambda|-|mu|} N >= 0 on every
// term of every product. Reported as conjecture-consistency, not a theorem.
Report check_signs(QKRing& ring, int threads = 1);

// quantum_pieri_q_coeff = deg1_via_stable on all (i, lambda, nu), and
// mult_box = quantum_pieri(1, .) on all mu.
Report check_pieri_consistency(QKRing& ring, int threads = 1);

// At grade equality |nu| + nd = |lambda| + |mu| the QK structure constants
// match the quantum cohomology oracle.
Report check_leading(QKRing& ring, int threads = 1);

// Degree-zero structure constants match the stable Grothendieck oracle on
// seeded random pairs with |lambda| + |mu| <= 8, every nu compared.
Report check_deg0(QKRing& ring, int samples, std::uint64_t seed);

// Associativity on seeded triples (samples = 0: all ordered triples).
Report check_assoc(QKRing& ring, int samples, std::uint64_t seed);

} // namespace qkgr
