#include "cgl/cyclotomic.hpp"
#include "cgl/errors.hpp"

#include <cstdlib>

namespace cgl {

namespace {

constexpr int64_t kHeightCap = int64_t(1) << 62;

// exact division of integer polynomials, remainder must vanish
std::vector<int64_t> poly_divide_exact(const std::vector<int64_t>& num,
                                       const std::vector<int64_t>& den) {
    std::vector<__int128> work(num.begin(), num.end());
    int dn = int(num.size()) - 1;
    int dd = int(den.size()) - 1;
    internal_check(dd >= 0 && den[dd] == 1, "cyclotomic divisor must be monic");
    internal_check(dn >= dd, "cyclotomic division degree underflow");
    std::vector<int64_t> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        __int128 coef = work[i];
        internal_check(coef > -kHeightCap && coef < kHeightCap,
                       "cyclotomic division coefficient overflow");
        q[i - dd] = int64_t(coef);
        if (coef == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            work[i - dd + j] -= coef * den[j];
            internal_check(work[i - dd + j] > -kHeightCap && work[i - dd + j] < kHeightCap,
                           "cyclotomic division coefficient overflow");
        }
    }
    for (int i = 0; i < dd; ++i) {
        internal_check(work[i] == 0, "cyclotomic division has nonzero remainder");
    }
    return q;
}

} // namespace

std::vector<int64_t> cyclotomic_polynomial(uint64_t n) {
    internal_check(n >= 1, "cyclotomic index must be positive");
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n
    std::vector<int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (uint64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_divide_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

CycloCtx::CycloCtx(uint64_t conductor) : e(conductor) {
    internal_check(e >= 1, "conductor must be positive");
    phi = cyclotomic_polynomial(e);
}

std::vector<int64_t> CycloCtx::reduce(const std::vector<int64_t>& coeffs) const {
    int dd = int(phi.size()) - 1;
    std::vector<__int128> work(coeffs.begin(), coeffs.end());
    if (int(work.size()) < dd) work.resize(dd, 0);
    for (int i = int(work.size()) - 1; i >= dd; --i) {
        __int128 coef = work[i];
        if (coef == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            work[i - dd + j] -= coef * phi[j];
            internal_check(work[i - dd + j] > -kHeightCap && work[i - dd + j] < kHeightCap,
                           "cyclotomic reduction coefficient overflow");
        }
    }
    std::vector<int64_t> rem(dd);
    for (int i = 0; i < dd; ++i) rem[i] = int64_t(work[i]);
    return rem;
}

bool CycloCtx::is_zero(const std::vector<int64_t>& coeffs) const {
    for (int64_t v : reduce(coeffs)) {
        if (v != 0) return false;
    }
    return true;
}

CyclotomicValue CyclotomicValue::integer(const CycloCtx& cc, int64_t n) {
    CyclotomicValue v(cc);
    v.c[0] = n;
    return v;
}

CyclotomicValue CyclotomicValue::root_power(const CycloCtx& cc, uint64_t k, int64_t mult) {
    CyclotomicValue v(cc);
    v.c[k % cc.e] = mult;
    return v;
}

CyclotomicValue CyclotomicValue::conj() const {
    CyclotomicValue r(*ctx);
    for (uint64_t k = 0; k < ctx->e; ++k) {
        if (c[k]) r.c[(ctx->e - k) % ctx->e] += c[k];
    }
    return r;
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
    internal_check(ctx == o.ctx, "mixing cyclotomic conductors");
    CyclotomicValue r(*ctx);
    for (uint64_t k = 0; k < ctx->e; ++k) r.c[k] = c[k] + o.c[k];
    return r;
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& o) const {
    internal_check(ctx == o.ctx, "mixing cyclotomic conductors");
    CyclotomicValue r(*ctx);
    for (uint64_t k = 0; k < ctx->e; ++k) r.c[k] = c[k] - o.c[k];
    return r;
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
    internal_check(ctx == o.ctx, "mixing cyclotomic conductors");
    CyclotomicValue r(*ctx);
    convolve_acc(r.c, *this, o, 1);
    return r;
}

bool CyclotomicValue::is_integer(int64_t n) const {
    return (*this - integer(*ctx, n)).is_zero();
}

uint64_t CyclotomicValue::eval_mod(uint64_t z, uint64_t ell) const {
    uint64_t acc = 0, zp = 1 % ell;
    for (uint64_t k = 0; k < ctx->e; ++k) {
        int64_t m = c[k] % int64_t(ell);
        if (m < 0) m += int64_t(ell);
        acc = (acc + uint64_t(m) * zp) % ell;
        zp = (zp * z) % ell;
    }
    return acc;
}

std::map<uint64_t, int64_t> CyclotomicValue::sparse() const {
    std::map<uint64_t, int64_t> m;
    for (uint64_t k = 0; k < ctx->e; ++k) {
        if (c[k] != 0) m[k] = c[k];
    }
    return m;
}

void convolve_acc(std::vector<int64_t>& acc, const CyclotomicValue& a,
                  const CyclotomicValue& b, int64_t weight) {
    internal_check(a.ctx == b.ctx, "mixing cyclotomic conductors");
    uint64_t e = a.ctx->e;
    internal_check(acc.size() == e, "convolution accumulator size mismatch");
    for (uint64_t i = 0; i < e; ++i) {
        int64_t ai = a.c[i];
        if (ai == 0) continue;
        int64_t w = ai * weight;
        for (uint64_t j = 0; j < e; ++j) {
            int64_t bj = b.c[j];
            if (bj == 0) continue;
            uint64_t k = i + j;
            if (k >= e) k -= e;
            acc[k] += w * bj;
        }
    }
}

} // namespace cgl
