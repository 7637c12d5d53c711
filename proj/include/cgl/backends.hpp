#pragma once
// Element-key backends: each backend encodes group elements as integer keys
// and supplies mul/inv/id so the generic engine can enumerate them.

#include "cgl/group.hpp"
#include "cgl/finite_field.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cgl {

// Z/n under addition; keys 0..n-1.
struct CyclicOps final : GroupOps {
    uint64_t n;
    explicit CyclicOps(uint64_t n_);
    ekey mul(ekey a, ekey b) const override;
    ekey inv(ekey a) const override;
    ekey id() const override { return 0; }
    std::string describe() const override;
};

// Direct product of cyclic groups; mixed-radix keys.
struct AbelianOps final : GroupOps {
    std::vector<uint64_t> moduli;
    explicit AbelianOps(std::vector<uint64_t> moduli_);
    ekey mul(ekey a, ekey b) const override;
    ekey inv(ekey a) const override;
    ekey id() const override { return 0; }
    std::string describe() const override;
    std::vector<uint64_t> decode(ekey a) const;
    ekey encode(const std::vector<uint64_t>& c) const;
};

// Permutations of {0..degree-1}; key = sum of images in base `degree`.
struct PermOps final : GroupOps {
    uint32_t degree;
    explicit PermOps(uint32_t degree_);
    ekey mul(ekey a, ekey b) const override; // apply b first, then a
    ekey inv(ekey a) const override;
    ekey id() const override;
    std::string describe() const override;
    std::vector<uint32_t> decode(ekey a) const;
    ekey encode(const std::vector<uint32_t>& images) const;
    // convenience: build a key from disjoint-cycle notation, e.g. {{0,1,2}}
    ekey from_cycles(const std::vector<std::vector<uint32_t>>& cycles) const;
};

// d x d matrices over GF(p), p prime; key = row-major base-p digits.
struct MatOps final : GroupOps {
    uint32_t d;
    uint64_t p;
    MatOps(uint32_t d_, uint64_t p_);
    ekey mul(ekey a, ekey b) const override;
    ekey inv(ekey a) const override;
    ekey id() const override;
    std::string describe() const override;
    std::vector<uint64_t> decode(ekey a) const; // row-major entries
    ekey encode(const std::vector<uint64_t>& m) const;
};

// Pairs (n, h) with h acting on N through a precomputed index table;
// key = n_index * |H| + h_index.
struct SemidirectOps final : GroupOps {
    std::shared_ptr<const FiniteGroup> N;
    std::shared_ptr<const FiniteGroup> H;
    // action[h_index][n_index] = index of the image of n under h
    std::vector<std::vector<uint32_t>> action;

    SemidirectOps(std::shared_ptr<const FiniteGroup> N_, std::shared_ptr<const FiniteGroup> H_,
                  std::vector<std::vector<uint32_t>> action_);
    ekey mul(ekey a, ekey b) const override;
    ekey inv(ekey a) const override;
    ekey id() const override;
    std::string describe() const override;
    ekey pack(uint32_t n_idx, uint32_t h_idx) const { return ekey(n_idx) * H->order() + h_idx; }
    uint32_t n_index(ekey a) const { return uint32_t(a / H->order()); }
    uint32_t h_index(ekey a) const { return uint32_t(a % H->order()); }
};

// Semilinear maps x -> mu * x^(2^j) on a binary field; key = (mu << 4) | j.
struct SemilinearOps final : GroupOps {
    std::shared_ptr<const BinaryFieldCtx> field;
    explicit SemilinearOps(std::shared_ptr<const BinaryFieldCtx> field_);
    ekey mul(ekey a, ekey b) const override; // composition, right factor applied first
    ekey inv(ekey a) const override;
    ekey id() const override;
    std::string describe() const override;
    static uint32_t coeff(ekey a) { return uint32_t(a >> 4); }
    static uint32_t frob(ekey a) { return uint32_t(a & 0xF); }
    static ekey pack(uint32_t mu, uint32_t j) { return (ekey(mu) << 4) | j; }
};

} // namespace cgl
