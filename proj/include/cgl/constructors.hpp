#pragma once
// Builders for every group in scope: the named test corpus, the semilinear
// torus T inside the semilinear group of GF(2^10), the extraspecial group E
// of order 2^11 built from an explicit quadratic cocycle, the lifted action
// T -> Aut(E), and the 337,920-element product group E : T.

#include "cgl/group.hpp"
#include "cgl/backends.hpp"
#include "cgl/finite_field.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cgl {

// Forms on V = GF(2)^10 identified with GF(2^10):
//   B(u,v) = abs_trace(u * v^32)               alternating, nondegenerate
//   Q(u)   = trace of u^33 from GF(2^5) down   polarizes to B
//   c(u,v) = sum_i u_i v_i Q(e_i) + sum_{i>j} u_i v_j B(e_i,e_j)
// over the polynomial basis e_j = x^j (bit j of the key).
struct SymplecticData {
    std::shared_ptr<const BinaryFieldCtx> field;
    std::vector<uint8_t> qtab;   // 1024 entries: Q(u)
    std::vector<uint16_t> brow;  // mask row: B(u,v) = parity(u & brow[v])
    std::vector<uint16_t> crow;  // mask row: c(u,v) = parity(u & crow[v])
    uint32_t q_zero_count = 0;   // 496 marks the minus-type form

    int B(uint16_t u, uint16_t v) const { return __builtin_popcount(u & brow[v]) & 1; }
    int Q(uint16_t u) const { return qtab[u]; }
    int c(uint16_t u, uint16_t v) const { return __builtin_popcount(u & crow[v]) & 1; }
};

// Automorphism of E fixing the center pointwise: (u,a) -> (Lu, a + d(u)).
struct AutomorphismOfE {
    std::array<uint16_t, 10> L{};  // column j = image of basis vector e_j
    std::array<uint64_t, 16> d{};  // 1024-bit table of d(u)

    uint16_t apply_L(uint16_t u) const {
        uint16_t w = 0;
        for (int j = 0; j < 10; ++j) {
            if (u & (1u << j)) w ^= L[j];
        }
        return w;
    }
    int apply_d(uint16_t u) const { return int((d[u >> 6] >> (u & 63)) & 1); }
    void set_d(uint16_t u) { d[u >> 6] |= uint64_t(1) << (u & 63); }
    bool operator==(const AutomorphismOfE&) const = default;
};

AutomorphismOfE auto_identity();
AutomorphismOfE auto_compose(const AutomorphismOfE& a, const AutomorphismOfE& b); // a after b
AutomorphismOfE auto_pow(const AutomorphismOfE& a, uint64_t e);
uint64_t auto_order(const AutomorphismOfE& a);
bool auto_is_identity(const AutomorphismOfE& a);

// The lifted action of T on E, tabulated for all 165 torus elements.
// Indices follow torus->elements() order.
struct ActionTable {
    std::shared_ptr<const FiniteGroup> torus;
    std::vector<AutomorphismOfE> autos;
    std::vector<uint8_t> tmul;   // |T| x |T| product table of indices
    std::vector<uint8_t> tinv;   // inverse index per element
    std::vector<uint16_t> Ltab;  // |T| x 1024 flattened: L_t(u)
    std::vector<uint8_t> dtab;   // |T| x 1024 flattened: d_t(u)
    uint32_t id_index = 0, lam_index = 0, sig_index = 0;

    uint32_t order() const { return uint32_t(autos.size()); }
    uint32_t mul_idx(uint32_t s, uint32_t t) const { return tmul[size_t(s) * order() + t]; }
    uint16_t L(uint32_t t, uint16_t u) const { return Ltab[size_t(t) * 1024 + u]; }
    int d(uint32_t t, uint16_t u) const { return dtab[size_t(t) * 1024 + u]; }
};

// Corpus names: trivial, C_n (e.g. "C_6"), D8, Q8, S3, S4, A4, SL23,
// extraspecial_p_small (the nonabelian group of order 27 and exponent 3).
FiniteGroup build_corpus_group(const std::string& name);

FiniteGroup build_torus_T();
SymplecticData build_symplectic_data();
FiniteGroup build_extraspecial_E(std::shared_ptr<const SymplecticData> S);
ActionTable lift_action(std::shared_ptr<const FiniteGroup> T,
                        std::shared_ptr<const SymplecticData> S);
FiniteGroup build_paper_G();

// Generic external semidirect product. action[h][n] is the index (position
// in N's sorted element list) of the image of element n under the element of
// H at index h; the table must be a homomorphism H -> Aut(N), which is
// verified exhaustively.
FiniteGroup build_semidirect(std::shared_ptr<const FiniteGroup> N,
                             std::shared_ptr<const FiniteGroup> H,
                             const std::vector<std::vector<uint32_t>>& action,
                             const std::string& name = "");

} // namespace cgl
