#pragma once
// Character codegrees cod(chi) = |G : Ker chi| / chi(1) and the checks built
// on them: prime-support comparison against element orders (Moreto's
// question), the order-divisibility property (Qian), and a certificate for
// groups whose Fitting section F(G)/Z(G) carries a fully ramified character.

#include "cgl/chartab.hpp"
#include "cgl/group.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace cgl {

// distinct prime divisors of n, ascending; empty for n = 1
std::vector<uint64_t> pi_set(uint64_t n);

struct CodegreeRecord {
    size_t chi = 0;           // row index in the table
    uint64_t degree = 0;
    uint64_t kernel_order = 0;
    uint64_t codegree = 0;
    std::vector<uint32_t> kernel_classes; // ascending class indices
    std::vector<uint64_t> primes;         // pi_set(codegree)
};

// Kernels are detected by exact cyclotomic equality chi(g) = chi(1); the
// records are checked for inverse-closure of the kernel classes and exact
// integrality of |G:Ker| / chi(1).
std::vector<CodegreeRecord> codegrees(const CharacterTable& tbl);

std::set<uint64_t> codegree_set(const std::vector<CodegreeRecord>& recs);

// Full subgroup check for one kernel: the union of the kernel classes must be
// closed under multiplication. Uses the identity that the class set of
// C_i * C_j equals the class set of rep_i * C_j.
bool kernel_is_normal_subgroup(const FiniteGroup& G, const ClassData& cd,
                               const CodegreeRecord& rec);

struct MoretoVerdict {
    size_t chi = 0;
    uint64_t codegree = 0;
    bool has_witness = false;
    uint32_t witness_class = 0; // class whose element order covers pi(cod)
    uint64_t witness_order = 0;
};

struct MoretoReport {
    std::vector<MoretoVerdict> verdicts; // one per character, row order
    std::vector<size_t> violations;      // chi indices with no witness
    bool negative_answer = false;        // violations nonempty
};

// For each character, search for g with pi(cod chi) contained in pi(o(g)).
// Classes are scanned in decreasing element order (ties by class index).
MoretoReport moreto_check(const CharacterTable& tbl,
                          const std::vector<CodegreeRecord>& recs);

struct QianReport {
    bool holds = false;
    // per element order: the smallest codegree it divides
    std::vector<std::pair<uint64_t, uint64_t>> witnesses;
    std::vector<uint64_t> failures; // element orders dividing no codegree
};

// Every element order must divide some codegree.
QianReport qian_property_test(const CharacterTable& tbl,
                              const std::vector<CodegreeRecord>& recs);

// Certificate for: G non-nilpotent with (1) Z(G) cyclic, (2) F(G)/Z(G) a
// chief factor, (3) |F(G)| coprime to |G/F(G)|. Under these hypotheses a
// faithful character chi with chi(1)^2 = |F:Z|, vanishing on F minus Z and
// restricting irreducibly to F must exist, and cod(chi) = |G| / chi(1).
//
// Applicability also demands Z(F(G)) = Z(G). Condition (2) leaves the chief
// factor two choices for the normal subgroup Z(F)/Z, and when F is abelian
// the other branch (Z(F) = F) is realized, |F:Z| need not be a square, and
// no fully ramified character exists; the gate keeps such groups out.
struct RamifiedSectionCertificate {
    bool applicable = false;          // F(G) proper, i.e. G not nilpotent
    bool center_cyclic = false;       // (1)
    bool section_is_chief = false;    // (2)
    bool coprime = false;             // (3)
    bool fitting_center_is_center = false; // Z(F(G)) = Z(G)
    bool hypotheses_hold = false; // applicable && gate && (1) && (2) && (3)
    uint64_t fitting_order = 0;
    uint64_t center_order = 0;
    uint64_t section_order = 0;    // |F : Z|
    uint64_t expected_codegree = 0; // |G| / sqrt(|F:Z|), 0 when inapplicable
    std::vector<size_t> witnesses; // chi indices passing every witness check
    // no element of G/F has order divisible by every prime of |G/F|; together
    // with the certificate this forces pi(cod chi) inside no pi(o(g))
    bool quotient_spectrum_misses_full_pi = false;
};

RamifiedSectionCertificate verify_ramified_section(const FiniteGroup& G, const ClassData& cd,
                                                   const CharacterTable& tbl,
                                                   const std::vector<CodegreeRecord>& recs);

// Consequence check for certified witnesses (faithful and primitive by
// construction): pi(cod chi) must equal pi(|G|).
bool witnesses_have_full_prime_support(const RamifiedSectionCertificate& cert,
                                       const std::vector<CodegreeRecord>& recs,
                                       uint64_t group_order);

} // namespace cgl
