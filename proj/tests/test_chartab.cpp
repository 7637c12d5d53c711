#include "doctest.h"

#include "cgl/chartab.hpp"
#include "cgl/constructors.hpp"
#include "cgl/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace cgl;

namespace {

std::multiset<uint64_t> degree_multiset(const CharacterTable& tbl) {
    std::multiset<uint64_t> out;
    for (size_t i = 0; i < tbl.num_chars(); ++i) out.insert(tbl.degree(i));
    return out;
}

} // namespace

TEST_CASE("splitting prime lower bound") {
    CHECK(dixon_prime_lower_bound(6, 3) == 5);    // ceil(2*sqrt(6))
    CHECK(dixon_prime_lower_bound(8, 5) == 6);
    CHECK(dixon_prime_lower_bound(4, 1) == 4);    // exact square
    CHECK(dixon_prime_lower_bound(12, 12) == 12); // class count dominates
    CHECK(dixon_prime_lower_bound(165, 21) == 26);
    CHECK(dixon_prime_lower_bound(337920, 53) == 1163);
}

TEST_CASE("splitting primes chosen per group") {
    // ell is the smallest prime = 1 mod exp(G) above the bound
    CHECK(character_table(build_corpus_group("S3")).ell == 7);
    CHECK(character_table(build_corpus_group("C_6")).ell == 7);
    CHECK(character_table(build_corpus_group("D8")).ell == 13);
    CHECK(character_table(build_corpus_group("Q8")).ell == 13);
    CHECK(character_table(build_corpus_group("A4")).ell == 13);
    CHECK(character_table(build_corpus_group("S4")).ell == 13);
    CHECK(character_table(build_corpus_group("SL23")).ell == 13);
    CHECK(character_table(build_corpus_group("C_12")).ell == 13);
    CHECK(character_table(build_corpus_group("extraspecial_p_small")).ell == 13);
}

TEST_CASE("class matrix structure constants") {
    FiniteGroup S3 = build_corpus_group("S3");
    ClassData cd = conjugacy_classes(S3);

    // identity class: permutation-free delta
    ClassMatrix M0 = class_matrix(S3, cd, 0);
    for (size_t j = 0; j < 3; ++j) {
        for (size_t k = 0; k < 3; ++k) CHECK(M0.a[j][k] == (j == k ? 1 : 0));
    }
    // counting identity: sum_k a_ijk |C_k| = |C_i| |C_j|
    for (uint32_t i = 0; i < 3; ++i) {
        ClassMatrix M = class_matrix(S3, cd, i);
        CHECK(M.i == i);
        for (size_t j = 0; j < 3; ++j) {
            uint64_t total = 0;
            for (size_t k = 0; k < 3; ++k) total += M.a[j][k] * cd.sizes[k];
            CHECK(total == cd.sizes[i] * cd.sizes[j]);
        }
    }

    // hand-counted row for the transposition class of S3
    uint32_t tc = cd.class_of_key(S3, S3.generators()[0]);
    uint32_t cc = cd.class_of_key(S3, S3.generators()[1]);
    ClassMatrix Mt = class_matrix(S3, cd, tc);
    CHECK(Mt.a[tc][0] == 3);  // x * x^-1 over the 3 transpositions
    CHECK(Mt.a[tc][tc] == 0); // product of distinct transpositions rotates
    CHECK(Mt.a[tc][cc] == 3);
    CHECK(Mt.a[cc][tc] == 2); // one transposition per rotation hits the rep

    // the class algebra is commutative: matrices commute pairwise
    FiniteGroup S4 = build_corpus_group("S4");
    ClassData cd4 = conjugacy_classes(S4);
    std::vector<ClassMatrix> mats;
    for (uint32_t i = 0; i < 5; ++i) mats.push_back(class_matrix(S4, cd4, i));
    auto mulmat = [&](const ClassMatrix& A, const ClassMatrix& B) {
        std::vector<std::vector<uint64_t>> c(5, std::vector<uint64_t>(5, 0));
        for (size_t i = 0; i < 5; ++i) {
            for (size_t k = 0; k < 5; ++k) {
                for (size_t j = 0; j < 5; ++j) c[i][j] += A.a[i][k] * B.a[k][j];
            }
        }
        return c;
    };
    for (size_t a = 0; a < 5; ++a) {
        for (size_t b = a + 1; b < 5; ++b) {
            CHECK(mulmat(mats[a], mats[b]) == mulmat(mats[b], mats[a]));
        }
    }
}

TEST_CASE("degree recovery from a known eigenvector") {
    // S3 mod 7: the degree-2 character has omega_j = |C_j| chi(g_j) / chi(1)
    FiniteGroup S3 = build_corpus_group("S3");
    ClassData cd = conjugacy_classes(S3);
    PrimeFieldCtx P = prime_field_with_root(6, dixon_prime_lower_bound(6, 3));
    CHECK(P.ell == 7);
    uint32_t tc = cd.class_of_key(S3, S3.generators()[0]);
    uint32_t cc = cd.class_of_key(S3, S3.generators()[1]);
    std::vector<uint64_t> w(3);
    w[0] = 1;
    w[tc] = 0;        // 3 * 0 / 2
    w[cc] = P.ell - 1; // 2 * (-1) / 2
    std::vector<uint64_t> trivial(3);
    trivial[0] = 1;
    trivial[tc] = 3;
    trivial[cc] = 2;
    std::vector<uint64_t> ds = recover_degrees({w, trivial}, cd, P);
    CHECK(ds == std::vector<uint64_t>{2, 1});
}

TEST_CASE("table shapes and degrees across the corpus") {
    std::map<std::string, std::multiset<uint64_t>> want = {
        {"S3", {1, 1, 2}},
        {"D8", {1, 1, 1, 1, 2}},
        {"Q8", {1, 1, 1, 1, 2}},
        {"A4", {1, 1, 1, 3}},
        {"S4", {1, 1, 2, 3, 3}},
        {"SL23", {1, 1, 1, 2, 2, 2, 3}},
        {"extraspecial_p_small", {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3}},
    };
    for (const auto& [name, degs] : want) {
        INFO(name);
        FiniteGroup G = build_corpus_group(name);
        CharacterTable tbl = character_table(G);
        CHECK(tbl.group_order == G.order());
        CHECK(tbl.num_chars() == tbl.num_classes());
        CHECK(degree_multiset(tbl) == degs);
        uint64_t sq = 0;
        for (size_t i = 0; i < tbl.num_chars(); ++i) sq += tbl.degree(i) * tbl.degree(i);
        CHECK(sq == G.order());
        // rows are sorted with degrees ascending
        for (size_t i = 1; i < tbl.num_chars(); ++i) CHECK(tbl.degree(i - 1) <= tbl.degree(i));
        // trivial character present: all-one row
        bool found_trivial = false;
        for (size_t i = 0; i < tbl.num_chars() && !found_trivial; ++i) {
            bool allone = true;
            for (size_t c = 0; c < tbl.num_classes() && allone; ++c) {
                allone = tbl.rows[i][c].is_integer(1);
            }
            found_trivial = allone;
        }
        CHECK(found_trivial);
    }
}

TEST_CASE("torus table") {
    FiniteGroup T = build_torus_T();
    CharacterTable tbl = character_table(T);
    CHECK(tbl.ell == 331);
    CHECK(tbl.exponent == 165);
    CHECK(tbl.num_classes() == 21);
    std::multiset<uint64_t> degs = degree_multiset(tbl);
    CHECK(degs.count(1) == 15);
    CHECK(degs.count(5) == 6);
}

TEST_CASE("thread count does not change the table") {
    FiniteGroup S4 = build_corpus_group("S4");
    CharacterTable a = character_table(S4, 1);
    CharacterTable b = character_table(S4, 4);
    REQUIRE(a.num_chars() == b.num_chars());
    CHECK(a.ell == b.ell);
    CHECK(a.z == b.z);
    for (size_t i = 0; i < a.num_chars(); ++i) {
        for (size_t c = 0; c < a.num_classes(); ++c) {
            CHECK(a.rows[i][c].c == b.rows[i][c].c); // identical m-vectors, not just equal values
        }
    }
}

TEST_CASE("invariant battery rejects a corrupt table") {
    CharacterTable tbl = character_table(build_corpus_group("S4"));
    CHECK_NOTHROW(verify_table_invariants(tbl));
    CharacterTable bad = tbl;
    // doubling one row breaks its norm
    for (auto& v : bad.rows[3]) v = v + v;
    CHECK_THROWS_AS(verify_table_invariants(bad), InternalError);

    CharacterTable bad2 = tbl;
    std::swap(bad2.rows[0][1], bad2.rows[0][2]);
    bool caught = false;
    try {
        verify_table_invariants(bad2);
        // a swap may happen to preserve all invariants only if values match
        caught = (bad2.rows[0][1] - bad2.rows[0][2]).is_zero();
    } catch (const InternalError&) {
        caught = true;
    }
    CHECK(caught);
}

TEST_CASE("conjugate symmetry of values") {
    CharacterTable tbl = character_table(build_corpus_group("SL23"));
    for (size_t i = 0; i < tbl.num_chars(); ++i) {
        for (size_t c = 0; c < tbl.num_classes(); ++c) {
            CyclotomicValue conj = tbl.rows[i][tbl.inverse_class[c]].conj();
            CHECK((tbl.rows[i][c] - conj).is_zero());
        }
    }
}
