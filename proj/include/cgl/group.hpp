#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace cgl {

using ekey = uint64_t;

// Multiplication/inverse/identity oracle for one concrete group realization.
// Element keys are injective 64-bit encodings chosen by each backend.
struct GroupOps {
    virtual ~GroupOps() = default;
    virtual ekey mul(ekey a, ekey b) const = 0;
    virtual ekey inv(ekey a) const = 0;
    virtual ekey id() const = 0;
    virtual std::string describe() const = 0;
};

// key -> dense element index; direct-indexed array when keys are small
// (the flagship group packs into 19 bits), hash map otherwise.
class IndexMap {
public:
    static constexpr ekey kDirectLimit = ekey(1) << 22;

    void build(const std::vector<ekey>& sorted_keys);
    uint32_t at(ekey k) const; // InternalError when absent
    bool contains(ekey k) const;

private:
    std::vector<int32_t> direct_;
    std::unordered_map<ekey, uint32_t> map_;
    bool use_direct_ = false;
};

class FiniteGroup {
public:
    // Breadth-first closure of the generators; deterministic element order
    // (sorted by key). Exceeding the cap is a resource error.
    static FiniteGroup enumerate(std::shared_ptr<const GroupOps> ops, std::string name,
                                 std::vector<ekey> generators, size_t cap = size_t(1) << 22);

    const std::string& name() const { return name_; }
    const std::vector<ekey>& generators() const { return gens_; }
    const std::vector<ekey>& elements() const { return elements_; }
    uint64_t order() const { return elements_.size(); }
    const GroupOps& ops() const { return *ops_; }
    std::shared_ptr<const GroupOps> ops_ptr() const { return ops_; }

    ekey mul(ekey a, ekey b) const { return ops_->mul(a, b); }
    ekey inv(ekey a) const { return ops_->inv(a); }
    ekey id() const { return ops_->id(); }
    uint32_t index_of(ekey k) const { return index_.at(k); }
    bool contains(ekey k) const { return index_.contains(k); }

private:
    std::shared_ptr<const GroupOps> ops_;
    std::string name_;
    std::vector<ekey> gens_;
    std::vector<ekey> elements_;
    IndexMap index_;
};

uint64_t element_order(const FiniteGroup& G, ekey x);

// Conjugacy data. Class 0 is always the identity class; representatives are
// the minimal-key member of each class; power_map[j][s] is the class of
// rep_j^s for 0 <= s < exponent.
struct ClassData {
    uint64_t group_order = 0;
    uint64_t exponent = 0;
    std::vector<ekey> representatives;
    std::vector<uint64_t> sizes;
    std::vector<uint64_t> element_orders;
    std::vector<uint32_t> class_of_index;          // element index -> class
    std::vector<std::vector<uint32_t>> members;    // element indices per class
    std::vector<std::vector<uint32_t>> power_map;  // [class][s]
    std::vector<uint32_t> inverse_class;

    size_t num_classes() const { return representatives.size(); }
    uint32_t class_of_key(const FiniteGroup& G, ekey k) const {
        return class_of_index[G.index_of(k)];
    }
};

ClassData conjugacy_classes(const FiniteGroup& G);

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<ekey> member_keys;      // sorted
    std::vector<uint32_t> member_index; // sorted element indices
    std::vector<uint8_t> in_set;        // bitmap over parent element indices
    std::vector<ekey> gens;

    uint64_t order() const { return member_keys.size(); }
    bool contains_index(uint32_t idx) const { return in_set[idx] != 0; }
    bool contains_key(ekey k) const {
        return parent->contains(k) && in_set[parent->index_of(k)] != 0;
    }
    bool same_set(const Subgroup& o) const { return member_keys == o.member_keys; }
};

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<ekey>& seeds);
Subgroup center(const FiniteGroup& G);

struct CyclicCheck {
    bool cyclic = false;
    ekey witness = 0;        // generator when cyclic
    uint64_t max_order = 0;  // maximal element order (refutation otherwise)
};
CyclicCheck is_cyclic(const Subgroup& H);

Subgroup normal_closure(const FiniteGroup& G, const std::vector<ekey>& seed);
Subgroup p_core(const FiniteGroup& G, const ClassData& cd, uint64_t p);
Subgroup fitting_subgroup(const FiniteGroup& G, const ClassData& cd);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
bool is_nilpotent_subgroup(const FiniteGroup& G, const Subgroup& H);

// F/Z as a G-module by conjugation: true iff exhaustive spin-up of every
// nonzero coset vector generates all of F/Z. Requires F/Z elementary abelian.
bool is_chief_factor_above_center(const FiniteGroup& G, const Subgroup& F, const Subgroup& Z);

struct SpectrumReport {
    std::vector<uint64_t> orders; // sorted distinct element orders
    std::vector<std::vector<uint64_t>> maximal_pi_sets;
};
SpectrumReport element_order_spectrum(const ClassData& cd);

bool hall_coprime_check(const FiniteGroup& G, const Subgroup& F);

// G/N with cosets keyed by their minimal member key. N must be normal.
FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N);

} // namespace cgl
