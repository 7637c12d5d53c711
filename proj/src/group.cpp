#include "cgl/group.hpp"
#include "cgl/errors.hpp"
#include "cgl/finite_field.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace cgl {

void IndexMap::build(const std::vector<ekey>& sorted_keys) {
    direct_.clear();
    map_.clear();
    ekey max_key = sorted_keys.empty() ? 0 : sorted_keys.back();
    use_direct_ = max_key < kDirectLimit;
    if (use_direct_) {
        direct_.assign(size_t(max_key) + 1, -1);
        for (uint32_t i = 0; i < sorted_keys.size(); ++i) direct_[sorted_keys[i]] = int32_t(i);
    } else {
        map_.reserve(sorted_keys.size() * 2);
        for (uint32_t i = 0; i < sorted_keys.size(); ++i) map_.emplace(sorted_keys[i], i);
    }
}

uint32_t IndexMap::at(ekey k) const {
    if (use_direct_) {
        if (k < direct_.size() && direct_[k] >= 0) return uint32_t(direct_[k]);
        throw InternalError("element key not in enumeration");
    }
    auto it = map_.find(k);
    if (it == map_.end()) throw InternalError("element key not in enumeration");
    return it->second;
}

bool IndexMap::contains(ekey k) const {
    if (use_direct_) return k < direct_.size() && direct_[k] >= 0;
    return map_.count(k) != 0;
}

FiniteGroup FiniteGroup::enumerate(std::shared_ptr<const GroupOps> ops, std::string name,
                                   std::vector<ekey> generators, size_t cap) {
    FiniteGroup G;
    G.ops_ = std::move(ops);
    G.name_ = std::move(name);
    G.gens_ = std::move(generators);

    std::unordered_set<ekey> seen;
    std::deque<ekey> queue;
    ekey e = G.ops_->id();
    seen.insert(e);
    queue.push_back(e);
    while (!queue.empty()) {
        ekey x = queue.front();
        queue.pop_front();
        for (ekey g : G.gens_) {
            ekey y = G.ops_->mul(x, g);
            if (seen.insert(y).second) {
                if (seen.size() > cap) {
                    throw ResourceError("group enumeration exceeded cap of " + std::to_string(cap) +
                                        " elements (" + G.name_ + ")");
                }
                queue.push_back(y);
            }
        }
    }
    G.elements_.assign(seen.begin(), seen.end());
    std::sort(G.elements_.begin(), G.elements_.end());
    G.index_.build(G.elements_);
    // closure under inversion doubles as a backend sanity check
    for (ekey x : G.elements_) {
        internal_check(G.index_.contains(G.ops_->inv(x)), "enumeration not closed under inversion");
    }
    return G;
}

uint64_t element_order(const FiniteGroup& G, ekey x) {
    ekey e = G.id();
    ekey p = x;
    uint64_t o = 1;
    while (p != e) {
        p = G.mul(p, x);
        ++o;
        internal_check(o <= G.order(), "element order exceeded group order");
    }
    return o;
}

ClassData conjugacy_classes(const FiniteGroup& G) {
    const auto& els = G.elements();
    size_t n = els.size();
    ClassData cd;
    cd.group_order = n;
    cd.class_of_index.assign(n, UINT32_MAX);

    std::vector<ekey> gen_inv;
    for (ekey g : G.generators()) gen_inv.push_back(G.inv(g));

    // identity seeds class 0; the rest in ascending key order
    auto grow_class = [&](ekey seed) {
        uint32_t cls = uint32_t(cd.representatives.size());
        cd.representatives.push_back(seed);
        cd.members.emplace_back();
        std::deque<uint32_t> queue;
        uint32_t si = G.index_of(seed);
        cd.class_of_index[si] = cls;
        cd.members[cls].push_back(si);
        queue.push_back(si);
        while (!queue.empty()) {
            uint32_t xi = queue.front();
            queue.pop_front();
            ekey x = els[xi];
            for (size_t gi = 0; gi < G.generators().size(); ++gi) {
                ekey c = G.mul(gen_inv[gi], G.mul(x, G.generators()[gi]));
                uint32_t ci = G.index_of(c);
                if (cd.class_of_index[ci] == UINT32_MAX) {
                    cd.class_of_index[ci] = cls;
                    cd.members[cls].push_back(ci);
                    queue.push_back(ci);
                }
            }
        }
        cd.sizes.push_back(cd.members[cls].size());
    };

    grow_class(G.id());
    for (ekey x : els) {
        if (cd.class_of_index[G.index_of(x)] == UINT32_MAX) grow_class(x);
    }

    size_t r = cd.representatives.size();
    cd.element_orders.resize(r);
    cd.exponent = 1;
    for (size_t j = 0; j < r; ++j) {
        cd.element_orders[j] = element_order(G, cd.representatives[j]);
        cd.exponent = std::lcm(cd.exponent, cd.element_orders[j]);
    }
    cd.power_map.assign(r, std::vector<uint32_t>(cd.exponent));
    cd.inverse_class.resize(r);
    for (size_t j = 0; j < r; ++j) {
        ekey p = G.id();
        for (uint64_t s = 0; s < cd.exponent; ++s) {
            cd.power_map[j][s] = cd.class_of_index[G.index_of(p)];
            p = G.mul(p, cd.representatives[j]);
        }
        cd.inverse_class[j] = cd.class_of_index[G.index_of(G.inv(cd.representatives[j]))];
    }

    uint64_t total = std::accumulate(cd.sizes.begin(), cd.sizes.end(), uint64_t(0));
    internal_check(total == n, "class equation violated");
    return cd;
}

namespace {

Subgroup make_subgroup(const FiniteGroup& G, std::vector<uint32_t> idxs, std::vector<ekey> gens) {
    Subgroup H;
    H.parent = &G;
    std::sort(idxs.begin(), idxs.end());
    idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
    H.member_index = std::move(idxs);
    H.member_keys.reserve(H.member_index.size());
    for (uint32_t i : H.member_index) H.member_keys.push_back(G.elements()[i]);
    std::sort(H.member_keys.begin(), H.member_keys.end());
    H.in_set.assign(G.order(), 0);
    for (uint32_t i : H.member_index) H.in_set[i] = 1;
    H.gens = std::move(gens);
    return H;
}

} // namespace

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<ekey>& seeds) {
    std::vector<uint8_t> in(G.order(), 0);
    std::vector<uint32_t> members;
    std::deque<ekey> queue;
    ekey e = G.id();
    in[G.index_of(e)] = 1;
    members.push_back(G.index_of(e));
    queue.push_back(e);
    while (!queue.empty()) {
        ekey x = queue.front();
        queue.pop_front();
        for (ekey s : seeds) {
            ekey y = G.mul(x, s);
            uint32_t yi = G.index_of(y);
            if (!in[yi]) {
                in[yi] = 1;
                members.push_back(yi);
                queue.push_back(y);
            }
        }
    }
    return make_subgroup(G, std::move(members), seeds);
}

Subgroup center(const FiniteGroup& G) {
    std::vector<uint32_t> members;
    std::vector<ekey> zgens;
    for (uint32_t i = 0; i < G.order(); ++i) {
        ekey x = G.elements()[i];
        bool central = true;
        for (ekey g : G.generators()) {
            if (G.mul(x, g) != G.mul(g, x)) { central = false; break; }
        }
        if (central) members.push_back(i);
    }
    for (uint32_t i : members) zgens.push_back(G.elements()[i]);
    Subgroup Z = make_subgroup(G, std::move(members), std::move(zgens));
    internal_check(Z.order() >= 1 && G.order() % Z.order() == 0, "center order must divide group order");
    return Z;
}

CyclicCheck is_cyclic(const Subgroup& H) {
    CyclicCheck r;
    uint64_t target = H.order();
    for (ekey x : H.member_keys) {
        uint64_t o = element_order(*H.parent, x);
        if (o > r.max_order) {
            r.max_order = o;
            r.witness = x;
        }
        if (o == target) {
            r.cyclic = true;
            r.witness = x;
            return r;
        }
    }
    r.cyclic = (target <= 1);
    return r;
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<ekey>& seed) {
    std::vector<ekey> gens(seed.begin(), seed.end());
    std::vector<ekey> gen_inv;
    for (ekey g : G.generators()) gen_inv.push_back(G.inv(g));
    Subgroup H = subgroup_closure(G, gens);
    for (;;) {
        bool grew = false;
        for (ekey h : H.member_keys) {
            for (size_t gi = 0; gi < G.generators().size(); ++gi) {
                ekey c = G.mul(gen_inv[gi], G.mul(h, G.generators()[gi]));
                if (!H.contains_key(c)) {
                    gens.push_back(c);
                    grew = true;
                }
            }
        }
        if (!grew) return H;
        H = subgroup_closure(G, gens);
    }
}

namespace {

bool is_prime_power_or_one(uint64_t n, uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

uint64_t p_part(uint64_t n, uint64_t p) {
    uint64_t q = 1;
    while (n % p == 0) { n /= p; q *= p; }
    return q;
}

// normal closure of {x} stays a p-group? bounded closure with early abort
bool normal_closure_is_p_group(const FiniteGroup& G, ekey x, uint64_t p, uint64_t cap) {
    std::vector<ekey> gens{x};
    std::vector<ekey> gen_inv;
    for (ekey g : G.generators()) gen_inv.push_back(G.inv(g));
    for (;;) {
        std::unordered_set<ekey> in;
        std::deque<ekey> queue;
        in.insert(G.id());
        queue.push_back(G.id());
        while (!queue.empty()) {
            ekey a = queue.front();
            queue.pop_front();
            for (ekey s : gens) {
                ekey y = G.mul(a, s);
                if (in.insert(y).second) {
                    if (in.size() > cap) return false;
                    if (!is_prime_power_or_one(element_order(G, y), p)) return false;
                    queue.push_back(y);
                }
            }
        }
        bool grew = false;
        for (ekey h : in) {
            for (size_t gi = 0; gi < G.generators().size(); ++gi) {
                ekey c = G.mul(gen_inv[gi], G.mul(h, G.generators()[gi]));
                if (!in.count(c)) {
                    if (!is_prime_power_or_one(element_order(G, c), p)) return false;
                    gens.push_back(c);
                    grew = true;
                }
            }
        }
        if (!grew) return true;
    }
}

} // namespace

Subgroup p_core(const FiniteGroup& G, const ClassData& cd, uint64_t p) {
    uint64_t cap = p_part(G.order(), p);
    // a class qualifies iff its (p-element) representative has a p-group
    // normal closure; the decision is constant on conjugacy classes
    std::vector<ekey> seeds;
    std::vector<uint32_t> member_idx;
    for (size_t j = 0; j < cd.num_classes(); ++j) {
        if (!is_prime_power_or_one(cd.element_orders[j], p)) continue;
        if (!normal_closure_is_p_group(G, cd.representatives[j], p, cap)) continue;
        seeds.push_back(cd.representatives[j]);
        for (uint32_t i : cd.members[j]) member_idx.push_back(i);
    }
    std::vector<ekey> gen_keys;
    for (uint32_t i : member_idx) gen_keys.push_back(G.elements()[i]);
    Subgroup O = subgroup_closure(G, gen_keys);
    internal_check(is_prime_power_or_one(O.order(), p), "p-core is not a p-group");
    internal_check(is_normal(G, O), "p-core is not normal");
    return O;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
    for (ekey h : H.member_keys) {
        for (ekey g : G.generators()) {
            if (!H.contains_key(G.mul(G.inv(g), G.mul(h, g)))) return false;
        }
    }
    return true;
}

bool is_nilpotent_subgroup(const FiniteGroup& G, const Subgroup& H) {
    // nilpotent iff for each prime p | |H| the p-elements of H form a
    // subgroup of order equal to the p-part (unique normal Sylow)
    for (uint64_t p : prime_factors(H.order())) {
        std::vector<ekey> pelems;
        for (ekey x : H.member_keys) {
            if (is_prime_power_or_one(element_order(G, x), p)) pelems.push_back(x);
        }
        uint64_t target = p_part(H.order(), p);
        if (pelems.size() != target) return false;
        Subgroup S = subgroup_closure(G, pelems);
        if (S.order() != target) return false;
    }
    return true;
}

Subgroup fitting_subgroup(const FiniteGroup& G, const ClassData& cd) {
    std::vector<ekey> gens;
    for (uint64_t p : prime_factors(G.order())) {
        Subgroup O = p_core(G, cd, p);
        for (ekey x : O.member_keys) {
            if (x != G.id()) gens.push_back(x);
        }
    }
    Subgroup F = subgroup_closure(G, gens);
    internal_check(is_normal(G, F), "Fitting subgroup is not normal");
    internal_check(is_nilpotent_subgroup(G, F), "Fitting subgroup is not nilpotent");
    return F;
}

namespace {

// GF(p) row reduction helpers for the chief-factor spin-up
struct EchelonBasis {
    uint64_t p;
    size_t dim;
    std::vector<std::vector<uint8_t>> rows; // reduced rows with unit pivots
    std::vector<size_t> pivots;

    // reduces v against the basis; if a nonzero residue remains it is
    // normalized, inserted, and returned; returns empty vector otherwise
    std::vector<uint8_t> insert(std::vector<uint8_t> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            uint8_t c = v[pivots[r]];
            if (c == 0) continue;
            for (size_t i = 0; i < dim; ++i) {
                v[i] = uint8_t((v[i] + (p - c) * rows[r][i]) % p);
            }
        }
        size_t piv = dim;
        for (size_t i = 0; i < dim; ++i) {
            if (v[i] != 0) { piv = i; break; }
        }
        if (piv == dim) return {};
        // normalize pivot to 1
        uint64_t inv = 1;
        for (uint64_t t = 1; t < p; ++t) {
            if ((t * v[piv]) % p == 1) { inv = t; break; }
        }
        for (size_t i = 0; i < dim; ++i) v[i] = uint8_t((v[i] * inv) % p);
        rows.push_back(v);
        pivots.push_back(piv);
        return v;
    }
};

} // namespace

bool is_chief_factor_above_center(const FiniteGroup& G, const Subgroup& F, const Subgroup& Z) {
    for (ekey z : Z.member_keys) {
        if (!F.contains_key(z)) throw InputError("center is not contained in the candidate factor");
    }
    if (!is_normal(G, F) || !is_normal(G, Z)) throw InputError("chief factor requires normal subgroups");
    uint64_t m = F.order() / Z.order();
    if (m == 1) return false; // F = Z: no factor to test

    // canonical coset labels inside F
    auto canon = [&](ekey x) {
        ekey best = UINT64_MAX;
        for (ekey z : Z.member_keys) best = std::min(best, G.mul(x, z));
        return best;
    };
    std::vector<ekey> cosets;
    {
        std::unordered_set<ekey> seen;
        for (ekey x : F.member_keys) {
            ekey c = canon(x);
            if (seen.insert(c).second) cosets.push_back(c);
        }
        std::sort(cosets.begin(), cosets.end());
    }
    internal_check(cosets.size() == m, "coset count mismatch in chief-factor test");

    // F/Z must be elementary abelian: commutators into Z, p-th powers into Z
    auto primes = prime_factors(m);
    if (primes.size() != 1) throw InputError("unsupported: factor is not elementary abelian");
    uint64_t p = primes[0];
    for (ekey x : F.member_keys) {
        ekey xp = G.id();
        for (uint64_t t = 0; t < p; ++t) xp = G.mul(xp, x);
        if (!Z.contains_key(xp)) throw InputError("unsupported: factor is not elementary abelian");
        for (ekey y : F.member_keys) {
            ekey comm = G.mul(G.inv(x), G.mul(G.inv(y), G.mul(x, y)));
            if (!Z.contains_key(comm)) throw InputError("unsupported: factor is not elementary abelian");
        }
    }

    // GF(p) coordinates for the cosets via a greedy basis
    size_t dim = 0;
    {
        uint64_t t = m;
        while (t > 1) { t /= p; ++dim; }
        uint64_t chk = 1;
        for (size_t i = 0; i < dim; ++i) chk *= p;
        if (chk != m) throw InputError("unsupported: factor is not elementary abelian");
    }
    std::unordered_map<ekey, std::vector<uint8_t>> coords;
    coords[canon(G.id())] = std::vector<uint8_t>(dim, 0);
    std::vector<ekey> basis_reps;
    for (ekey c : cosets) {
        if (coords.count(c)) continue;
        size_t b = basis_reps.size();
        internal_check(b < dim, "coset basis exceeded dimension");
        basis_reps.push_back(c);
        // span everything reachable with the new basis coset
        std::vector<std::pair<ekey, std::vector<uint8_t>>> old(coords.begin(), coords.end());
        for (auto& [key, vec] : old) {
            ekey acc = key;
            for (uint64_t t = 1; t < p; ++t) {
                acc = canon(G.mul(acc, c));
                auto v = vec;
                v[b] = uint8_t(t);
                coords.emplace(acc, std::move(v));
            }
        }
    }
    internal_check(coords.size() == m, "coset coordinatization incomplete");

    // conjugation action of each generator as a matrix (columns = images of basis)
    std::vector<std::vector<std::vector<uint8_t>>> mats;
    for (ekey g : G.generators()) {
        ekey gi = G.inv(g);
        std::vector<std::vector<uint8_t>> M;
        for (ekey b : basis_reps) {
            M.push_back(coords.at(canon(G.mul(gi, G.mul(b, g)))));
        }
        mats.push_back(std::move(M));
    }
    auto apply = [&](const std::vector<std::vector<uint8_t>>& M, const std::vector<uint8_t>& v) {
        std::vector<uint8_t> w(dim, 0);
        for (size_t b = 0; b < dim; ++b) {
            if (v[b] == 0) continue;
            for (size_t i = 0; i < dim; ++i) {
                w[i] = uint8_t((w[i] + uint64_t(v[b]) * M[b][i]) % p);
            }
        }
        return w;
    };

    // exhaustive spin-up: every nonzero vector must generate the full module
    std::vector<uint8_t> v(dim, 0);
    for (uint64_t code = 1; code < m; ++code) {
        uint64_t t = code;
        for (size_t i = 0; i < dim; ++i) { v[i] = uint8_t(t % p); t /= p; }
        EchelonBasis eb{p, dim, {}, {}};
        std::deque<std::vector<uint8_t>> queue;
        auto first = eb.insert(v);
        internal_check(!first.empty(), "spin-up seed vanished");
        queue.push_back(first);
        while (!queue.empty() && eb.rows.size() < dim) {
            auto x = queue.front();
            queue.pop_front();
            for (const auto& M : mats) {
                auto nv = eb.insert(apply(M, x));
                if (!nv.empty()) queue.push_back(nv);
            }
        }
        if (eb.rows.size() < dim) return false;
    }
    return true;
}

SpectrumReport element_order_spectrum(const ClassData& cd) {
    SpectrumReport rep;
    rep.orders = cd.element_orders;
    std::sort(rep.orders.begin(), rep.orders.end());
    rep.orders.erase(std::unique(rep.orders.begin(), rep.orders.end()), rep.orders.end());
    std::vector<std::vector<uint64_t>> pis;
    for (uint64_t o : rep.orders) pis.push_back(prime_factors(o));
    for (size_t i = 0; i < pis.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < pis.size(); ++j) {
            if (i == j) continue;
            if (std::includes(pis[j].begin(), pis[j].end(), pis[i].begin(), pis[i].end()) &&
                pis[j] != pis[i]) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            if (std::find(rep.maximal_pi_sets.begin(), rep.maximal_pi_sets.end(), pis[i]) ==
                rep.maximal_pi_sets.end()) {
                rep.maximal_pi_sets.push_back(pis[i]);
            }
        }
    }
    return rep;
}

bool hall_coprime_check(const FiniteGroup& G, const Subgroup& F) {
    return std::gcd(F.order(), G.order() / F.order()) == 1;
}

namespace {

struct QuotientOps final : GroupOps {
    std::shared_ptr<const GroupOps> parent;
    std::vector<ekey> nmembers;
    std::string base_name;

    ekey canon(ekey x) const {
        ekey best = UINT64_MAX;
        for (ekey n : nmembers) best = std::min(best, parent->mul(x, n));
        return best;
    }
    ekey mul(ekey a, ekey b) const override { return canon(parent->mul(a, b)); }
    ekey inv(ekey a) const override { return canon(parent->inv(a)); }
    ekey id() const override { return canon(parent->id()); }
    std::string describe() const override { return base_name + " (quotient)"; }
};

} // namespace

FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
    if (!is_normal(G, N)) throw InputError("quotient by a non-normal subgroup");
    auto qops = std::make_shared<QuotientOps>();
    qops->parent = G.ops_ptr();
    qops->nmembers = N.member_keys;
    qops->base_name = G.name();
    std::vector<ekey> gens;
    for (ekey g : G.generators()) gens.push_back(qops->canon(g));
    return FiniteGroup::enumerate(qops, G.name() + "/N", gens);
}

} // namespace cgl
