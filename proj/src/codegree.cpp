#include "cgl/codegree.hpp"
#include "cgl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cgl {

std::vector<uint64_t> pi_set(uint64_t n) {
    return prime_factors(n);
}

std::vector<CodegreeRecord> codegrees(const CharacterTable& tbl) {
    size_t r = tbl.num_classes();
    std::vector<CodegreeRecord> recs;
    recs.reserve(tbl.num_chars());
    for (size_t i = 0; i < tbl.num_chars(); ++i) {
        const auto& row = tbl.rows[i];
        CodegreeRecord rec;
        rec.chi = i;
        rec.degree = tbl.degree(i);
        std::vector<uint8_t> in_ker(r, 0);
        for (uint32_t j = 0; j < r; ++j) {
            // exact equality with the degree; |chi(g)| = chi(1) alone is not
            // kernel membership (the value could be a root-of-unity multiple)
            if (row[j].is_integer(int64_t(rec.degree))) {
                in_ker[j] = 1;
                rec.kernel_classes.push_back(j);
                rec.kernel_order += tbl.class_sizes[j];
            }
        }
        internal_check(!rec.kernel_classes.empty() && rec.kernel_classes[0] == 0,
                       "kernel must contain the identity class");
        for (uint32_t j : rec.kernel_classes) {
            internal_check(in_ker[tbl.inverse_class[j]] != 0,
                           "kernel classes are not closed under inversion");
        }
        internal_check(rec.kernel_order != 0 && tbl.group_order % rec.kernel_order == 0,
                       "kernel order does not divide the group order");
        uint64_t index = tbl.group_order / rec.kernel_order;
        internal_check(rec.degree != 0 && index % rec.degree == 0,
                       "codegree |G:Ker| / chi(1) is not an integer");
        rec.codegree = index / rec.degree;
        rec.primes = pi_set(rec.codegree);
        recs.push_back(std::move(rec));
    }
    return recs;
}

std::set<uint64_t> codegree_set(const std::vector<CodegreeRecord>& recs) {
    std::set<uint64_t> s;
    for (const auto& rec : recs) s.insert(rec.codegree);
    return s;
}

bool kernel_is_normal_subgroup(const FiniteGroup& G, const ClassData& cd,
                               const CodegreeRecord& rec) {
    internal_check(cd.num_classes() > 0 && cd.group_order == G.order(),
                   "class data does not match the group");
    std::vector<uint8_t> in_ker(cd.num_classes(), 0);
    for (uint32_t j : rec.kernel_classes) in_ker[j] = 1;
    // The kernel candidate contains the identity class and is inverse-closed
    // (checked when the record was built); as a union of classes it is a
    // subgroup iff closed under products. The class set of C_i * C_j equals
    // the class set of rep_i * C_j, so one fixed factor per pair suffices.
    for (uint32_t i : rec.kernel_classes) {
        ekey ri = cd.representatives[i];
        for (uint32_t j : rec.kernel_classes) {
            for (uint32_t idx : cd.members[j]) {
                ekey y = G.elements()[idx];
                uint32_t k = cd.class_of_index[G.index_of(G.mul(ri, y))];
                if (!in_ker[k]) return false;
            }
        }
    }
    return true;
}

MoretoReport moreto_check(const CharacterTable& tbl,
                          const std::vector<CodegreeRecord>& recs) {
    size_t r = tbl.num_classes();
    std::vector<uint32_t> scan(r);
    std::iota(scan.begin(), scan.end(), 0);
    std::stable_sort(scan.begin(), scan.end(), [&](uint32_t a, uint32_t b) {
        return tbl.class_orders[a] > tbl.class_orders[b];
    });
    std::vector<std::vector<uint64_t>> order_primes(r);
    for (size_t j = 0; j < r; ++j) order_primes[j] = pi_set(tbl.class_orders[j]);

    MoretoReport rep;
    rep.verdicts.reserve(recs.size());
    for (const CodegreeRecord& rec : recs) {
        MoretoVerdict v;
        v.chi = rec.chi;
        v.codegree = rec.codegree;
        for (uint32_t j : scan) {
            if (std::includes(order_primes[j].begin(), order_primes[j].end(),
                              rec.primes.begin(), rec.primes.end())) {
                v.has_witness = true;
                v.witness_class = j;
                v.witness_order = tbl.class_orders[j];
                break;
            }
        }
        if (!v.has_witness) rep.violations.push_back(rec.chi);
        rep.verdicts.push_back(v);
    }
    rep.negative_answer = !rep.violations.empty();
    return rep;
}

QianReport qian_property_test(const CharacterTable& tbl,
                              const std::vector<CodegreeRecord>& recs) {
    std::set<uint64_t> orders(tbl.class_orders.begin(), tbl.class_orders.end());
    std::set<uint64_t> cods = codegree_set(recs);
    QianReport rep;
    rep.holds = true;
    for (uint64_t o : orders) {
        uint64_t found = 0;
        for (uint64_t c : cods) {
            if (c % o == 0) {
                found = c;
                break;
            }
        }
        if (found != 0) {
            rep.witnesses.emplace_back(o, found);
        } else {
            rep.holds = false;
            rep.failures.push_back(o);
        }
    }
    return rep;
}

namespace {

uint64_t perfect_square_root(uint64_t n) {
    uint64_t s = uint64_t(std::llround(std::sqrt(double(n))));
    for (uint64_t c = (s >= 2 ? s - 2 : 0); c <= s + 2; ++c) {
        if (c * c == n) return c;
    }
    return 0;
}

} // namespace

RamifiedSectionCertificate verify_ramified_section(const FiniteGroup& G, const ClassData& cd,
                                                   const CharacterTable& tbl,
                                                   const std::vector<CodegreeRecord>& recs) {
    internal_check(tbl.group_order == G.order() && tbl.class_sizes == cd.sizes &&
                       tbl.class_orders == cd.element_orders &&
                       tbl.inverse_class == cd.inverse_class,
                   "table and class data disagree");
    internal_check(recs.size() == tbl.num_chars(), "codegree records do not match the table");

    RamifiedSectionCertificate cert;
    Subgroup F = fitting_subgroup(G, cd);
    Subgroup Z = center(G);
    cert.fitting_order = F.order();
    cert.center_order = Z.order();
    cert.applicable = F.order() < G.order(); // F(G) = G exactly for nilpotent G

    for (ekey z : Z.member_keys) {
        internal_check(F.contains_key(z), "center must sit inside the Fitting subgroup");
    }
    internal_check(F.order() % Z.order() == 0, "center order must divide the Fitting order");
    cert.section_order = F.order() / Z.order();

    {
        // Z(G) <= Z(F) always, so comparing orders decides equality
        uint64_t zf = 0;
        for (ekey x : F.member_keys) {
            bool central = true;
            for (ekey y : F.member_keys) {
                if (G.mul(x, y) != G.mul(y, x)) {
                    central = false;
                    break;
                }
            }
            if (central) ++zf;
        }
        cert.fitting_center_is_center = (zf == Z.order());
    }

    cert.center_cyclic = is_cyclic(Z).cyclic;
    try {
        cert.section_is_chief = is_chief_factor_above_center(G, F, Z);
    } catch (const InputError&) {
        // a chief factor above the center of a solvable group is elementary
        // abelian, so a section the test cannot coordinatize is not chief
        cert.section_is_chief = false;
    }
    cert.coprime = hall_coprime_check(G, F);
    cert.hypotheses_hold = cert.applicable && cert.fitting_center_is_center &&
                           cert.center_cyclic && cert.section_is_chief && cert.coprime;

    if (cert.applicable) {
        // final condition: no element of G/F has order divisible by every
        // prime of |G/F|
        FiniteGroup Q = quotient_group(G, F);
        ClassData qcd = conjugacy_classes(Q);
        SpectrumReport qspec = element_order_spectrum(qcd);
        std::vector<uint64_t> full = pi_set(Q.order());
        bool misses = true;
        for (uint64_t o : qspec.orders) {
            std::vector<uint64_t> po = pi_set(o);
            if (std::includes(po.begin(), po.end(), full.begin(), full.end())) {
                misses = false;
                break;
            }
        }
        cert.quotient_spectrum_misses_full_pi = misses;
    }

    if (!cert.hypotheses_hold) return cert;

    uint64_t root = perfect_square_root(cert.section_order);
    internal_check(root != 0, "hypotheses hold but the Fitting section is not a square");
    internal_check(G.order() % root == 0, "square root of the section must divide the order");
    cert.expected_codegree = G.order() / root;

    // classes lying inside F and inside Z (both are unions of classes)
    size_t r = cd.num_classes();
    std::vector<uint8_t> in_F(r, 0), in_Z(r, 0);
    uint64_t fsum = 0, zsum = 0;
    for (size_t c = 0; c < r; ++c) {
        if (F.contains_key(cd.representatives[c])) {
            in_F[c] = 1;
            fsum += cd.sizes[c];
        }
        if (Z.contains_key(cd.representatives[c])) {
            in_Z[c] = 1;
            zsum += cd.sizes[c];
        }
    }
    internal_check(fsum == F.order() && zsum == Z.order(),
                   "normal subgroups must be unions of full classes");

    for (const CodegreeRecord& rec : recs) {
        if (rec.kernel_order != 1) continue;                       // faithful
        if (rec.degree * rec.degree != cert.section_order) continue;
        const auto& row = tbl.rows[rec.chi];
        bool vanishes = true;
        for (size_t c = 0; c < r && vanishes; ++c) {
            if (in_F[c] && !in_Z[c] && !row[c].is_zero()) vanishes = false;
        }
        if (!vanishes) continue;
        // <chi_F, chi_F> = 1, summed over F through the class decomposition
        std::vector<int64_t> acc(tbl.cyclo->e, 0);
        for (size_t c = 0; c < r; ++c) {
            if (!in_F[c]) continue;
            convolve_acc(acc, row[c], row[c].conj(), int64_t(cd.sizes[c]));
        }
        acc[0] -= int64_t(F.order());
        if (!tbl.cyclo->is_zero(acc)) continue;
        if (rec.codegree != cert.expected_codegree) continue;
        cert.witnesses.push_back(rec.chi);
    }
    internal_check(!cert.witnesses.empty(),
                   "ramified-section hypotheses hold but no witness character exists");
    return cert;
}

bool witnesses_have_full_prime_support(const RamifiedSectionCertificate& cert,
                                       const std::vector<CodegreeRecord>& recs,
                                       uint64_t group_order) {
    if (cert.witnesses.empty()) return false;
    std::vector<uint64_t> full = pi_set(group_order);
    for (size_t chi : cert.witnesses) {
        internal_check(chi < recs.size() && recs[chi].chi == chi,
                       "witness index out of range");
        if (recs[chi].primes != full) return false;
    }
    return true;
}

} // namespace cgl
