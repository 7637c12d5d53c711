#include "cgl/backends.hpp"
#include "cgl/errors.hpp"

#include <algorithm>

namespace cgl {

// ---------------------------------------------------------------- CyclicOps

CyclicOps::CyclicOps(uint64_t n_) : n(n_) {
    if (n == 0) throw InputError("cyclic group order must be positive");
}

ekey CyclicOps::mul(ekey a, ekey b) const { return (a + b) % n; }
ekey CyclicOps::inv(ekey a) const { return (n - a % n) % n; }
std::string CyclicOps::describe() const { return "C" + std::to_string(n); }

// ---------------------------------------------------------------- AbelianOps

AbelianOps::AbelianOps(std::vector<uint64_t> moduli_) : moduli(std::move(moduli_)) {
    if (moduli.empty()) throw InputError("abelian backend needs at least one factor");
    uint64_t total = 1;
    for (uint64_t m : moduli) {
        if (m == 0) throw InputError("abelian factor order must be positive");
        internal_check(total <= UINT64_MAX / m, "abelian group too large to key");
        total *= m;
    }
}

std::vector<uint64_t> AbelianOps::decode(ekey a) const {
    std::vector<uint64_t> c(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i) {
        c[i] = a % moduli[i];
        a /= moduli[i];
    }
    return c;
}

ekey AbelianOps::encode(const std::vector<uint64_t>& c) const {
    ekey a = 0;
    uint64_t radix = 1;
    for (size_t i = 0; i < moduli.size(); ++i) {
        a += (c[i] % moduli[i]) * radix;
        radix *= moduli[i];
    }
    return a;
}

ekey AbelianOps::mul(ekey a, ekey b) const {
    auto ca = decode(a), cb = decode(b);
    for (size_t i = 0; i < moduli.size(); ++i) ca[i] = (ca[i] + cb[i]) % moduli[i];
    return encode(ca);
}

ekey AbelianOps::inv(ekey a) const {
    auto c = decode(a);
    for (size_t i = 0; i < moduli.size(); ++i) c[i] = (moduli[i] - c[i]) % moduli[i];
    return encode(c);
}

std::string AbelianOps::describe() const {
    std::string s;
    for (size_t i = 0; i < moduli.size(); ++i) {
        if (i) s += "x";
        s += "C" + std::to_string(moduli[i]);
    }
    return s;
}

// ---------------------------------------------------------------- PermOps

PermOps::PermOps(uint32_t degree_) : degree(degree_) {
    if (degree == 0 || degree > 12) throw InputError("permutation degree out of range");
}

std::vector<uint32_t> PermOps::decode(ekey a) const {
    std::vector<uint32_t> img(degree);
    for (uint32_t i = 0; i < degree; ++i) {
        img[i] = uint32_t(a % degree);
        a /= degree;
    }
    return img;
}

ekey PermOps::encode(const std::vector<uint32_t>& images) const {
    ekey a = 0;
    ekey radix = 1;
    for (uint32_t i = 0; i < degree; ++i) {
        a += ekey(images[i]) * radix;
        radix *= degree;
    }
    return a;
}

ekey PermOps::mul(ekey a, ekey b) const {
    auto pa = decode(a), pb = decode(b);
    std::vector<uint32_t> pc(degree);
    for (uint32_t i = 0; i < degree; ++i) pc[i] = pa[pb[i]];
    return encode(pc);
}

ekey PermOps::inv(ekey a) const {
    auto pa = decode(a);
    std::vector<uint32_t> pi(degree);
    for (uint32_t i = 0; i < degree; ++i) pi[pa[i]] = i;
    return encode(pi);
}

ekey PermOps::id() const {
    std::vector<uint32_t> img(degree);
    for (uint32_t i = 0; i < degree; ++i) img[i] = i;
    return encode(img);
}

ekey PermOps::from_cycles(const std::vector<std::vector<uint32_t>>& cycles) const {
    std::vector<uint32_t> img(degree);
    for (uint32_t i = 0; i < degree; ++i) img[i] = i;
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i] >= degree) throw InputError("cycle point out of range");
            img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        }
    }
    return encode(img);
}

std::string PermOps::describe() const { return "Sym(" + std::to_string(degree) + ") keys"; }

// ---------------------------------------------------------------- MatOps

MatOps::MatOps(uint32_t d_, uint64_t p_) : d(d_), p(p_) {
    if (d == 0 || d > 4) throw InputError("matrix dimension out of range");
    if (!is_prime_u64(p)) throw InputError("matrix backend needs a prime modulus");
    uint64_t total = 1;
    for (uint32_t i = 0; i < d * d; ++i) {
        internal_check(total <= UINT64_MAX / p, "matrix key space too large");
        total *= p;
    }
}

std::vector<uint64_t> MatOps::decode(ekey a) const {
    std::vector<uint64_t> m(d * d);
    for (uint32_t i = 0; i < d * d; ++i) {
        m[i] = a % p;
        a /= p;
    }
    return m;
}

ekey MatOps::encode(const std::vector<uint64_t>& m) const {
    ekey a = 0;
    ekey radix = 1;
    for (uint32_t i = 0; i < d * d; ++i) {
        a += (m[i] % p) * radix;
        radix *= p;
    }
    return a;
}

ekey MatOps::mul(ekey a, ekey b) const {
    auto ma = decode(a), mb = decode(b);
    std::vector<uint64_t> mc(d * d, 0);
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t k = 0; k < d; ++k) {
            uint64_t v = ma[i * d + k];
            if (v == 0) continue;
            for (uint32_t j = 0; j < d; ++j) {
                mc[i * d + j] = (mc[i * d + j] + v * mb[k * d + j]) % p;
            }
        }
    }
    return encode(mc);
}

ekey MatOps::inv(ekey a) const {
    // Gauss-Jordan on [M | I] over GF(p)
    auto m = decode(a);
    std::vector<uint64_t> aug(d * 2 * d, 0);
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t j = 0; j < d; ++j) aug[i * 2 * d + j] = m[i * d + j];
        aug[i * 2 * d + d + i] = 1;
    }
    auto mod_inv = [&](uint64_t x) {
        uint64_t r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (uint32_t col = 0; col < d; ++col) {
        uint32_t piv = col;
        while (piv < d && aug[piv * 2 * d + col] == 0) ++piv;
        if (piv == d) throw InputError("singular matrix has no inverse");
        if (piv != col) {
            for (uint32_t j = 0; j < 2 * d; ++j) std::swap(aug[piv * 2 * d + j], aug[col * 2 * d + j]);
        }
        uint64_t s = mod_inv(aug[col * 2 * d + col]);
        for (uint32_t j = 0; j < 2 * d; ++j) aug[col * 2 * d + j] = aug[col * 2 * d + j] * s % p;
        for (uint32_t i = 0; i < d; ++i) {
            if (i == col) continue;
            uint64_t f = aug[i * 2 * d + col];
            if (f == 0) continue;
            for (uint32_t j = 0; j < 2 * d; ++j) {
                aug[i * 2 * d + j] = (aug[i * 2 * d + j] + (p - f) * aug[col * 2 * d + j]) % p;
            }
        }
    }
    std::vector<uint64_t> out(d * d);
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t j = 0; j < d; ++j) out[i * d + j] = aug[i * 2 * d + d + j];
    }
    return encode(out);
}

ekey MatOps::id() const {
    std::vector<uint64_t> m(d * d, 0);
    for (uint32_t i = 0; i < d; ++i) m[i * d + i] = 1;
    return encode(m);
}

std::string MatOps::describe() const {
    return "Mat(" + std::to_string(d) + ", GF(" + std::to_string(p) + "))";
}

// ---------------------------------------------------------------- SemidirectOps

SemidirectOps::SemidirectOps(std::shared_ptr<const FiniteGroup> N_,
                             std::shared_ptr<const FiniteGroup> H_,
                             std::vector<std::vector<uint32_t>> action_)
    : N(std::move(N_)), H(std::move(H_)), action(std::move(action_)) {
    if (action.size() != H->order()) throw InputError("action table must have one row per acting element");
    for (const auto& row : action) {
        if (row.size() != N->order()) throw InputError("action row must cover the normal subgroup");
    }
}

ekey SemidirectOps::mul(ekey a, ekey b) const {
    uint32_t n1 = n_index(a), h1 = h_index(a);
    uint32_t n2 = n_index(b), h2 = h_index(b);
    uint32_t n2_acted = action[h1][n2];
    ekey nk = N->mul(N->elements()[n1], N->elements()[n2_acted]);
    ekey hk = H->mul(H->elements()[h1], H->elements()[h2]);
    return pack(N->index_of(nk), H->index_of(hk));
}

ekey SemidirectOps::inv(ekey a) const {
    uint32_t n1 = n_index(a), h1 = h_index(a);
    uint32_t hinv = H->index_of(H->inv(H->elements()[h1]));
    uint32_t ninv = N->index_of(N->inv(N->elements()[n1]));
    return pack(action[hinv][ninv], hinv);
}

ekey SemidirectOps::id() const {
    return pack(N->index_of(N->id()), H->index_of(H->id()));
}

std::string SemidirectOps::describe() const {
    return N->name() + " : " + H->name();
}

// ---------------------------------------------------------------- SemilinearOps

SemilinearOps::SemilinearOps(std::shared_ptr<const BinaryFieldCtx> field_)
    : field(std::move(field_)) {
    if (field->k > 15) throw InputError("semilinear backend supports k <= 15");
}

ekey SemilinearOps::mul(ekey a, ekey b) const {
    // (mu1, j1) o (mu2, j2) : x -> mu1 * (mu2 * x^(2^j2))^(2^j1)
    uint32_t mu1 = coeff(a), j1 = frob(a);
    uint32_t mu2 = coeff(b), j2 = frob(b);
    uint32_t mu = field->mul(mu1, field->frobenius(mu2, j1));
    return pack(mu, (j1 + j2) % uint32_t(field->k));
}

ekey SemilinearOps::inv(ekey a) const {
    uint32_t mu = coeff(a), j = frob(a);
    uint32_t jp = (uint32_t(field->k) - j) % uint32_t(field->k);
    uint32_t nu = field->frobenius(field->inverse(mu), jp);
    return pack(nu, jp);
}

ekey SemilinearOps::id() const { return pack(1, 0); }

std::string SemilinearOps::describe() const {
    return "semilinear maps on GF(2^" + std::to_string(field->k) + ")";
}

} // namespace cgl
