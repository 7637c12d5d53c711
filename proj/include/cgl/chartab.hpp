#pragma once
// Dixon-Schneider character tables: class matrices over GF(ell), common
// eigenvector splitting, degree recovery, and exact cyclotomic lifting.

#include "cgl/cyclotomic.hpp"
#include "cgl/finite_field.hpp"
#include "cgl/group.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace cgl {

// a[j][k] = #{(x,y) in C_i x C_j : xy = g_k}
struct ClassMatrix {
    uint32_t i = 0;
    std::vector<std::vector<uint64_t>> a;
};

ClassMatrix class_matrix(const FiniteGroup& G, const ClassData& cd, uint32_t i);

// Lazy supply of class matrices, consumed in increasing class-size order.
struct ClassMatrixStream {
    std::vector<uint32_t> order;                 // class indices, smallest classes first
    std::function<ClassMatrix(uint32_t)> get;    // fetch by class index
};

// Common one-dimensional eigenvectors of the class algebra over GF(ell),
// normalized so that the class-0 coordinate is 1. Returns exactly r vectors.
std::vector<std::vector<uint64_t>> split_eigenspaces(const ClassMatrixStream& stream, size_t r,
                                                     const PrimeFieldCtx& ctx);

// Integer degrees from normalized eigenvectors via d^2 = |G| / sum_j w_j w_j' / |C_j|.
std::vector<uint64_t> recover_degrees(const std::vector<std::vector<uint64_t>>& eigvecs,
                                      const ClassData& cd, const PrimeFieldCtx& ctx);

// Exact character values: per class, a discrete Fourier transform over the
// cyclic group generated by the class representative recovers eigenvalue
// multiplicities m_k with sum m_k = degree.
std::vector<CyclotomicValue> lift_values(const std::vector<uint64_t>& eigvec, uint64_t d,
                                         const ClassData& cd, const PrimeFieldCtx& ctx,
                                         std::shared_ptr<const CycloCtx> cyclo);

// Group-independent table: everything downstream consumers need, without
// element-level data, so cached tables round-trip without rebuilding groups.
struct CharacterTable {
    uint64_t group_order = 0;
    uint64_t exponent = 1;
    uint64_t ell = 0; // splitting prime
    uint64_t z = 1;   // order-e root mod ell
    std::vector<uint64_t> class_sizes;
    std::vector<uint64_t> class_orders;
    std::vector<std::vector<uint32_t>> power_map;
    std::vector<uint32_t> inverse_class;
    std::shared_ptr<const CycloCtx> cyclo;
    std::vector<std::vector<CyclotomicValue>> rows; // sorted by (degree, values)

    size_t num_classes() const { return class_sizes.size(); }
    size_t num_chars() const { return rows.size(); }
    uint64_t degree(size_t i) const;
};

// Full pipeline; all table invariants are verified before returning.
CharacterTable character_table(const FiniteGroup& G, int threads = 1);

// Invariant battery (row/column orthogonality, degree sum, divisibility,
// conjugate symmetry); throws InternalError on any failure.
void verify_table_invariants(const CharacterTable& tbl, int threads = 1);

// Exact lower bound ceil(2 sqrt(n)) used for the splitting prime.
uint64_t dixon_prime_lower_bound(uint64_t group_order, uint64_t num_classes);

} // namespace cgl
