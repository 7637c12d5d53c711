#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgl {

// GF(2^k) in the polynomial basis 1, x, ..., x^{k-1}; elements are k-bit
// vectors. The modulus is a degree-k polynomial over GF(2) stored as a bit
// vector with bit k set; irreducibility is verified at construction.
struct BinaryFieldCtx {
    int k = 0;
    uint32_t modulus = 0;

    uint64_t size() const { return uint64_t(1) << k; }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t n) const;
    uint32_t inverse(uint32_t a) const; // error on a == 0
    uint32_t frobenius(uint32_t a, int j) const; // a^(2^j), 0 <= j < k
    int abs_trace(uint32_t a) const;  // Tr_{GF(2^k)/GF(2)}
    uint32_t norm_to_subfield(uint32_t a, int m) const; // a^((2^k-1)/(2^m-1)), m | k
    uint64_t element_order(uint32_t a) const; // multiplicative order, a != 0
};

// Value type pairing an element with its field; mixing contexts is an error.
struct BinaryFieldElement {
    const BinaryFieldCtx* ctx = nullptr;
    uint32_t v = 0;

    BinaryFieldElement() = default;
    BinaryFieldElement(const BinaryFieldCtx& c, uint32_t value) : ctx(&c), v(value) {}

    BinaryFieldElement operator+(const BinaryFieldElement& o) const;
    BinaryFieldElement operator*(const BinaryFieldElement& o) const;
    BinaryFieldElement inverse() const;
    bool operator==(const BinaryFieldElement& o) const { return ctx == o.ctx && v == o.v; }
};

// modulus == 0 selects the built-in default irreducible polynomial for k.
BinaryFieldCtx make_binary_field(int k, uint32_t modulus = 0);

// Pretty-printer for GF(2)[x] bit vectors ("x^2+x+1"), used in error messages.
std::string poly_to_string(uint32_t p);

// Prime field GF(l) together with a fixed element z of exact multiplicative
// order e (the root of unity used by the character-table lifting).
struct PrimeFieldCtx {
    uint64_t ell = 0;
    uint64_t e = 0;
    uint64_t z = 0;

    uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= ell ? s - ell : s; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + ell - b; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % ell; }
    uint64_t pow(uint64_t a, uint64_t n) const;
    uint64_t inverse(uint64_t a) const; // error on a == 0
};

// Smallest prime l ≡ 1 (mod e) with l > lower_bound, plus z of exact order e.
// Deterministic trial-division primality; search capped at 2^31.
PrimeFieldCtx prime_field_with_root(uint64_t e, uint64_t lower_bound);

bool is_prime_u64(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n); // distinct primes, ascending

} // namespace cgl
