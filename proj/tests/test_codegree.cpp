#include "doctest.h"

#include "cgl/chartab.hpp"
#include "cgl/codegree.hpp"
#include "cgl/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace cgl;

namespace {

struct Bundle {
    FiniteGroup G;
    ClassData cd;
    CharacterTable tbl;
    std::vector<CodegreeRecord> recs;
};

Bundle bundle(const FiniteGroup& G) {
    Bundle b{G, conjugacy_classes(G), character_table(G), {}};
    b.recs = codegrees(b.tbl);
    return b;
}

Bundle bundle(const std::string& name) { return bundle(build_corpus_group(name)); }

} // namespace

TEST_CASE("prime support sets") {
    CHECK(pi_set(1).empty());
    CHECK(pi_set(12) == std::vector<uint64_t>{2, 3});
    CHECK(pi_set(97) == std::vector<uint64_t>{97});
    CHECK(pi_set(10560) == std::vector<uint64_t>{2, 3, 5, 11});
    CHECK(pi_set(337920) == std::vector<uint64_t>{2, 3, 5, 11});
}

TEST_CASE("codegree sets across the corpus") {
    std::map<std::string, std::set<uint64_t>> want = {
        {"trivial", {1}},
        {"S3", {1, 2, 3}},
        {"D8", {1, 2, 4}},
        {"Q8", {1, 2, 4}},
        {"A4", {1, 3, 4}},
        {"S4", {1, 2, 3, 8}},
        {"SL23", {1, 3, 4, 12}},
        {"C_6", {1, 2, 3, 6}},
        {"C_12", {1, 2, 3, 4, 6, 12}},
        {"extraspecial_p_small", {1, 3, 9}},
    };
    for (const auto& [name, cods] : want) {
        INFO(name);
        Bundle b = bundle(name);
        CHECK(codegree_set(b.recs) == cods);
    }
    Bundle t = bundle(build_torus_T());
    CHECK(codegree_set(t.recs) == std::set<uint64_t>{1, 3, 5, 11, 15, 33});
}

TEST_CASE("record arithmetic") {
    for (const char* name : {"S3", "S4", "SL23", "C_12", "extraspecial_p_small"}) {
        INFO(name);
        Bundle b = bundle(name);
        REQUIRE(b.recs.size() == b.tbl.num_chars());
        for (size_t i = 0; i < b.recs.size(); ++i) {
            const CodegreeRecord& rec = b.recs[i];
            CHECK(rec.chi == i);
            CHECK(rec.degree == b.tbl.degree(i));
            // cod = |G : Ker| / deg exactly
            CHECK(rec.codegree * rec.degree * rec.kernel_order == b.G.order());
            CHECK(rec.primes == pi_set(rec.codegree));
            // kernel contains the identity class and its size-sum is the order
            REQUIRE(!rec.kernel_classes.empty());
            CHECK(rec.kernel_classes[0] == 0);
            uint64_t ksum = 0;
            for (uint32_t c : rec.kernel_classes) ksum += b.cd.sizes[c];
            CHECK(ksum == rec.kernel_order);
        }
    }
}

TEST_CASE("trivial and faithful-linear extremes") {
    Bundle c12 = bundle("C_12");
    size_t faithful_linear = 0;
    for (const CodegreeRecord& rec : c12.recs) {
        if (rec.degree == 1 && rec.kernel_order == 1) {
            CHECK(rec.codegree == 12);
            ++faithful_linear;
        }
        if (rec.kernel_order == 12) CHECK(rec.codegree == 1); // trivial character
    }
    CHECK(faithful_linear == 4); // phi(12)
}

TEST_CASE("kernels are genuinely normal subgroups") {
    for (const char* name : {"S4", "SL23"}) {
        INFO(name);
        Bundle b = bundle(name);
        for (const CodegreeRecord& rec : b.recs) {
            CHECK(kernel_is_normal_subgroup(b.G, b.cd, rec));
        }
    }
    Bundle t = bundle(build_torus_T());
    for (const CodegreeRecord& rec : t.recs) {
        CHECK(kernel_is_normal_subgroup(t.G, t.cd, rec));
    }
}

TEST_CASE("no small group violates the prime-support question") {
    std::vector<std::string> names = {"trivial", "S3",   "D8", "Q8",
                                      "A4",      "S4",   "SL23",
                                      "extraspecial_p_small"};
    for (int n = 1; n <= 12; ++n) names.push_back("C_" + std::to_string(n));
    for (const std::string& name : names) {
        INFO(name);
        Bundle b = bundle(name);
        MoretoReport rep = moreto_check(b.tbl, b.recs);
        CHECK(!rep.negative_answer);
        CHECK(rep.violations.empty());
        REQUIRE(rep.verdicts.size() == b.recs.size());
        for (const MoretoVerdict& v : rep.verdicts) {
            CHECK(v.has_witness);
            // the reported witness really covers pi(cod)
            std::vector<uint64_t> po = pi_set(v.witness_order);
            for (uint64_t p : pi_set(v.codegree)) {
                CHECK(std::find(po.begin(), po.end(), p) != po.end());
            }
        }
    }
    Bundle t = bundle(build_torus_T());
    CHECK(!moreto_check(t.tbl, t.recs).negative_answer);
}

TEST_CASE("order divisibility holds on the corpus") {
    for (const char* name : {"S3", "D8", "Q8", "A4", "S4", "SL23", "C_12",
                             "extraspecial_p_small"}) {
        INFO(name);
        Bundle b = bundle(name);
        QianReport q = qian_property_test(b.tbl, b.recs);
        CHECK(q.holds);
        CHECK(q.failures.empty());
    }
    Bundle s3 = bundle("S3");
    QianReport q = qian_property_test(s3.tbl, s3.recs);
    std::vector<std::pair<uint64_t, uint64_t>> want = {{1, 1}, {2, 2}, {3, 3}};
    CHECK(q.witnesses == want);
}

TEST_CASE("ramified-section certificate: nilpotent groups are out of scope") {
    for (const char* name : {"D8", "Q8", "extraspecial_p_small", "C_12"}) {
        INFO(name);
        Bundle b = bundle(name);
        RamifiedSectionCertificate cert = verify_ramified_section(b.G, b.cd, b.tbl, b.recs);
        CHECK(!cert.applicable);
        CHECK(cert.fitting_order == b.G.order());
        CHECK(!cert.hypotheses_hold);
        CHECK(cert.expected_codegree == 0);
        CHECK(cert.witnesses.empty());
        CHECK(!witnesses_have_full_prime_support(cert, b.recs, b.G.order()));
    }
}

TEST_CASE("ramified-section certificate: S4 fails coprimality and the center gate") {
    Bundle b = bundle("S4");
    RamifiedSectionCertificate cert = verify_ramified_section(b.G, b.cd, b.tbl, b.recs);
    CHECK(cert.applicable);
    CHECK(cert.fitting_order == 4);
    CHECK(cert.center_order == 1);
    CHECK(cert.section_order == 4);
    CHECK(cert.center_cyclic);      // trivial center
    CHECK(cert.section_is_chief);   // V4 is minimal normal
    CHECK(!cert.coprime);           // gcd(4, 6) = 2
    CHECK(!cert.fitting_center_is_center); // Z(V4) = V4 > 1
    CHECK(!cert.hypotheses_hold);
    CHECK(cert.expected_codegree == 0);
    CHECK(cert.witnesses.empty());
    // S4/V4 = S3 happens to have no order-6 element
    CHECK(cert.quotient_spectrum_misses_full_pi);
}

TEST_CASE("ramified-section certificate: abelian Fitting subgroups fail the gate") {
    // literal hypotheses (1)(2)(3) can all hold while Z(F) = F != Z(G)
    Bundle t = bundle(build_torus_T());
    RamifiedSectionCertificate ct = verify_ramified_section(t.G, t.cd, t.tbl, t.recs);
    CHECK(ct.applicable);
    CHECK(ct.fitting_order == 33);
    CHECK(ct.center_order == 3);
    CHECK(ct.section_order == 11);
    CHECK(ct.center_cyclic);
    CHECK(ct.section_is_chief);
    CHECK(ct.coprime);
    CHECK(!ct.fitting_center_is_center);
    CHECK(!ct.hypotheses_hold);
    CHECK(ct.expected_codegree == 0);
    CHECK(ct.witnesses.empty());
    CHECK(!ct.quotient_spectrum_misses_full_pi); // quotient C5 has an order-5 element

    Bundle s3 = bundle("S3");
    RamifiedSectionCertificate c3 = verify_ramified_section(s3.G, s3.cd, s3.tbl, s3.recs);
    CHECK(c3.applicable);
    CHECK(c3.center_cyclic);
    CHECK(c3.section_is_chief);
    CHECK(c3.coprime);
    CHECK(!c3.fitting_center_is_center);
    CHECK(!c3.hypotheses_hold);

    Bundle a4 = bundle("A4");
    RamifiedSectionCertificate c4 = verify_ramified_section(a4.G, a4.cd, a4.tbl, a4.recs);
    CHECK(c4.applicable);
    CHECK(c4.coprime); // gcd(4, 3) = 1
    CHECK(!c4.fitting_center_is_center);
    CHECK(!c4.hypotheses_hold);
}

TEST_CASE("ramified-section certificate: positive case") {
    // F = Q8, Z = C2, section of order 4 is chief, |Q8| coprime to 3
    Bundle b = bundle("SL23");
    RamifiedSectionCertificate cert = verify_ramified_section(b.G, b.cd, b.tbl, b.recs);
    CHECK(cert.applicable);
    CHECK(cert.center_cyclic);
    CHECK(cert.section_is_chief);
    CHECK(cert.coprime);
    CHECK(cert.fitting_center_is_center);
    CHECK(cert.hypotheses_hold);
    CHECK(cert.fitting_order == 8);
    CHECK(cert.center_order == 2);
    CHECK(cert.section_order == 4);
    CHECK(cert.expected_codegree == 12); // 24 / sqrt(4)
    REQUIRE(cert.witnesses.size() == 3);
    for (size_t chi : cert.witnesses) {
        CHECK(b.recs[chi].degree == 2);
        CHECK(b.recs[chi].kernel_order == 1);
        CHECK(b.recs[chi].codegree == 12);
    }
    // pi(12) = {2,3} = pi(24): the consequence check is satisfiable here,
    // and indeed the quotient C3 does reach its full prime set
    CHECK(witnesses_have_full_prime_support(cert, b.recs, b.G.order()));
    CHECK(!cert.quotient_spectrum_misses_full_pi);
}

TEST_CASE("dihedral consequence check by hand") {
    // the faithful degree-2 character of D8 has cod 4 and pi(4) = pi(8)
    Bundle b = bundle("D8");
    size_t found = 0;
    for (const CodegreeRecord& rec : b.recs) {
        if (rec.degree != 2) continue;
        CHECK(rec.kernel_order == 1);
        CHECK(rec.codegree == 4);
        CHECK(rec.primes == pi_set(8));
        ++found;
    }
    CHECK(found == 1);
}
