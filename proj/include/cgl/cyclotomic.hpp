#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace cgl {

// Exact arithmetic in Z[zeta_e], with values kept as length-e coefficient
// vectors over the group ring Z[Z_e] (index k = coefficient of zeta_e^k).
// Distinct vectors can represent the same algebraic number; the zero test —
// polynomial remainder against the e-th cyclotomic polynomial Phi_e — decides
// genuine equality. Phi_e is obtained by integer division of x^e - 1 by the
// product of the lower Phi_d, computed recursively over the divisors of e.
struct CycloCtx {
    uint64_t e = 0;
    std::vector<int64_t> phi; // Phi_e, ascending-degree, monic

    explicit CycloCtx(uint64_t conductor);

    // Remainder of the signed coefficient vector mod Phi_e. Accumulation runs
    // in 128-bit; any coefficient reaching 2^62 aborts rather than wrapping.
    std::vector<int64_t> reduce(const std::vector<int64_t>& coeffs) const;
    bool is_zero(const std::vector<int64_t>& coeffs) const;
};

// Standalone cyclotomic polynomial (used by CycloCtx and directly testable).
std::vector<int64_t> cyclotomic_polynomial(uint64_t n);

struct CyclotomicValue {
    const CycloCtx* ctx = nullptr;
    std::vector<int64_t> c; // length e

    CyclotomicValue() = default;
    explicit CyclotomicValue(const CycloCtx& cc) : ctx(&cc), c(cc.e, 0) {}
    static CyclotomicValue integer(const CycloCtx& cc, int64_t n);
    static CyclotomicValue root_power(const CycloCtx& cc, uint64_t k, int64_t mult = 1);

    CyclotomicValue conj() const; // complex conjugate: index negation mod e
    CyclotomicValue operator+(const CyclotomicValue& o) const;
    CyclotomicValue operator-(const CyclotomicValue& o) const;
    CyclotomicValue operator*(const CyclotomicValue& o) const; // convolution in Z[Z_e]

    bool is_zero() const { return ctx->is_zero(c); }
    bool equals(const CyclotomicValue& o) const { return (*this - o).is_zero(); }
    bool is_integer(int64_t n) const;

    // value mod l with zeta_e |-> z (consistency hook for the modular lift)
    uint64_t eval_mod(uint64_t z, uint64_t ell) const;

    std::map<uint64_t, int64_t> sparse() const; // nonzero coefficients by exponent
};

// acc[(i+j) mod e] += a.c[i] * b.c[j] * weight, skipping zero coefficients.
void convolve_acc(std::vector<int64_t>& acc, const CyclotomicValue& a,
                  const CyclotomicValue& b, int64_t weight);

} // namespace cgl
