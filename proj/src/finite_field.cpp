#include "cgl/finite_field.hpp"
#include "cgl/errors.hpp"

#include <numeric>

namespace cgl {

namespace {

int poly_degree(uint32_t p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

// remainder of a mod b in GF(2)[x]
uint32_t poly_mod(uint32_t a, uint32_t b) {
    int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

// Fixed default irreducible polynomial per extension degree. Every entry is
// re-verified irreducible at context creation, so the table cannot drift.
constexpr uint32_t kDefaultModulus[17] = {
    0,
    0x3,     // x+1
    0x7,     // x^2+x+1
    0xB,     // x^3+x+1
    0x13,    // x^4+x+1
    0x25,    // x^5+x^2+1
    0x43,    // x^6+x+1
    0x83,    // x^7+x+1
    0x11B,   // x^8+x^4+x^3+x+1
    0x211,   // x^9+x^4+1
    0x409,   // x^10+x^3+1
    0x805,   // x^11+x^2+1
    0x1053,  // x^12+x^6+x^4+x+1
    0x201B,  // x^13+x^4+x^3+x+1
    0x402B,  // x^14+x^5+x^3+x+1
    0x8003,  // x^15+x+1
    0x1100B, // x^16+x^12+x^3+x+1
};

} // namespace

std::string poly_to_string(uint32_t p) {
    if (p == 0) return "0";
    std::string s;
    for (int d = poly_degree(p); d >= 0; --d) {
        if (!((p >> d) & 1)) continue;
        if (!s.empty()) s += "+";
        if (d == 0) s += "1";
        else if (d == 1) s += "x";
        else s += "x^" + std::to_string(d);
    }
    return s;
}

uint32_t BinaryFieldCtx::mul(uint32_t a, uint32_t b) const {
    uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (uint32_t(1) << k)) a ^= modulus;
    }
    return r;
}

uint32_t BinaryFieldCtx::pow(uint32_t a, uint64_t n) const {
    uint32_t r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

uint32_t BinaryFieldCtx::inverse(uint32_t a) const {
    if (a == 0) throw InputError("field inverse of zero");
    return pow(a, size() - 2);
}

uint32_t BinaryFieldCtx::frobenius(uint32_t a, int j) const {
    if (j < 0 || j >= k) throw InputError("frobenius exponent out of range");
    for (int i = 0; i < j; ++i) a = mul(a, a);
    return a;
}

int BinaryFieldCtx::abs_trace(uint32_t a) const {
    uint32_t t = 0, p = a;
    for (int i = 0; i < k; ++i) {
        t ^= p;
        p = mul(p, p);
    }
    if (t > 1) throw InternalError("absolute trace landed outside GF(2)");
    return int(t);
}

uint32_t BinaryFieldCtx::norm_to_subfield(uint32_t a, int m) const {
    if (m <= 0 || k % m != 0) throw InputError("norm target degree must divide k");
    uint64_t exp = (size() - 1) / ((uint64_t(1) << m) - 1);
    return pow(a, exp);
}

uint64_t BinaryFieldCtx::element_order(uint32_t a) const {
    if (a == 0) throw InputError("multiplicative order of zero");
    uint64_t o = size() - 1;
    for (uint64_t p : prime_factors(o)) {
        while (o % p == 0 && pow(a, o / p) == 1) o /= p;
    }
    return o;
}

namespace {

void require_same_ctx(const BinaryFieldElement& a, const BinaryFieldElement& b) {
    if (a.ctx == nullptr || b.ctx == nullptr) throw InputError("uninitialized field element");
    if (a.ctx != b.ctx) throw InputError("mixing elements of different field contexts");
}

} // namespace

BinaryFieldElement BinaryFieldElement::operator+(const BinaryFieldElement& o) const {
    require_same_ctx(*this, o);
    return {*ctx, ctx->add(v, o.v)};
}

BinaryFieldElement BinaryFieldElement::operator*(const BinaryFieldElement& o) const {
    require_same_ctx(*this, o);
    return {*ctx, ctx->mul(v, o.v)};
}

BinaryFieldElement BinaryFieldElement::inverse() const {
    if (ctx == nullptr) throw InputError("uninitialized field element");
    return {*ctx, ctx->inverse(v)};
}

BinaryFieldCtx make_binary_field(int k, uint32_t modulus) {
    if (k < 1 || k > 16) throw InputError("extension degree must be in 1..16");
    if (modulus == 0) modulus = kDefaultModulus[k];
    if (poly_degree(modulus) != k) throw InputError("modulus degree must equal k");
    // Exhaustive trial division by every polynomial of degree 1..k/2; degree-1
    // divisors double as the root test. Any hit names the factor.
    for (int d = 1; d <= k / 2; ++d) {
        for (uint32_t f = uint32_t(1) << d; f < (uint32_t(1) << (d + 1)); ++f) {
            if (poly_mod(modulus, f) == 0) {
                throw InputError("reducible modulus " + poly_to_string(modulus) +
                                 ": divisible by " + poly_to_string(f));
            }
        }
    }
    BinaryFieldCtx ctx;
    ctx.k = k;
    ctx.modulus = modulus;
    return ctx;
}

uint64_t PrimeFieldCtx::pow(uint64_t a, uint64_t n) const {
    uint64_t r = 1 % ell;
    a %= ell;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

uint64_t PrimeFieldCtx::inverse(uint64_t a) const {
    a %= ell;
    if (a == 0) throw InternalError("prime field inverse of zero");
    return pow(a, ell - 2);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

PrimeFieldCtx prime_field_with_root(uint64_t e, uint64_t lower_bound) {
    if (e < 1) throw InputError("root order must be positive");
    if (lower_bound < 2) throw InputError("lower bound must be at least 2");
    constexpr uint64_t kSearchCap = uint64_t(1) << 31;
    // smallest candidate ≡ 1 mod e that exceeds lower_bound
    uint64_t ell = (lower_bound / e) * e + 1;
    while (ell <= lower_bound) ell += e;
    while (!is_prime_u64(ell)) {
        ell += e;
        if (ell > kSearchCap) throw ResourceError("prime search exceeded 2^31");
    }
    PrimeFieldCtx ctx;
    ctx.ell = ell;
    ctx.e = e;
    auto qs = prime_factors(e);
    for (uint64_t a = 1; a < ell; ++a) {
        uint64_t z = ctx.pow(a, (ell - 1) / e);
        if (ctx.pow(z, e) != 1) continue;
        bool exact = true;
        for (uint64_t q : qs) {
            if (ctx.pow(z, e / q) == 1) { exact = false; break; }
        }
        if (exact) {
            ctx.z = z;
            return ctx;
        }
    }
    throw InternalError("no element of exact order " + std::to_string(e) +
                        " modulo " + std::to_string(ell));
}

} // namespace cgl
