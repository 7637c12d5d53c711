#include "doctest.h"

#include "cgl/constructors.hpp"
#include "cgl/group.hpp"

#include <algorithm>
#include <vector>

using namespace cgl;

// Structural facts about the flagship order-337920 group, all checked
// against independently computed values. One enumeration shared per file.

namespace {

struct Flagship {
    FiniteGroup G;
    ClassData cd;
    Flagship() : G(build_paper_G()), cd(conjugacy_classes(G)) {}
};

Flagship& flagship() {
    static Flagship f;
    return f;
}

} // namespace

TEST_CASE("order and class count") {
    Flagship& f = flagship();
    CHECK(f.G.order() == 337920);
    CHECK(f.cd.num_classes() == 53);
    uint64_t total = 0;
    for (uint64_t s : f.cd.sizes) total += s;
    CHECK(total == 337920);
    CHECK(f.cd.exponent == 660);
}

TEST_CASE("center") {
    Flagship& f = flagship();
    Subgroup Z = center(f.G);
    CHECK(Z.order() == 2);
    CyclicCheck cy = is_cyclic(Z);
    CHECK(cy.cyclic);
    CHECK(element_order(f.G, cy.witness) == 2);
}

TEST_CASE("fitting subgroup is the extraspecial normal 2-subgroup") {
    Flagship& f = flagship();
    Subgroup F = fitting_subgroup(f.G, f.cd);
    CHECK(F.order() == 2048);
    CHECK(is_normal(f.G, F));
    CHECK(is_nilpotent_subgroup(f.G, F));

    // keys are t_index * 2048 + a * 1024 + u, so F is the torus-trivial block
    for (ekey k : F.member_keys) CHECK(k < 2048);
    CHECK(F.member_keys.size() == 2048);

    Subgroup Z = center(f.G);
    for (ekey z : Z.member_keys) CHECK(F.contains_key(z));

    // p-cores: the Fitting subgroup is exactly the 2-core
    CHECK(p_core(f.G, f.cd, 2).same_set(F));
    CHECK(p_core(f.G, f.cd, 3).order() == 1);
    CHECK(p_core(f.G, f.cd, 5).order() == 1);
    CHECK(p_core(f.G, f.cd, 11).order() == 1);

    // class fusion inside F: 9 classes with sizes 1, 1, 66, 330 x 6
    std::vector<uint64_t> fsizes;
    for (size_t c = 0; c < f.cd.num_classes(); ++c) {
        if (F.contains_key(f.cd.representatives[c])) fsizes.push_back(f.cd.sizes[c]);
    }
    std::sort(fsizes.begin(), fsizes.end());
    CHECK(fsizes == std::vector<uint64_t>{1, 1, 66, 330, 330, 330, 330, 330, 330});
}

TEST_CASE("center of the Fitting subgroup is the center") {
    Flagship& f = flagship();
    Subgroup F = fitting_subgroup(f.G, f.cd);
    uint64_t central = 0;
    for (ekey x : F.member_keys) {
        bool c = true;
        for (ekey y : F.member_keys) {
            if (f.G.mul(x, y) != f.G.mul(y, x)) {
                c = false;
                break;
            }
        }
        if (c) ++central;
    }
    CHECK(central == 2);
}

TEST_CASE("certificate-shaped structure") {
    Flagship& f = flagship();
    Subgroup F = fitting_subgroup(f.G, f.cd);
    Subgroup Z = center(f.G);
    CHECK(is_chief_factor_above_center(f.G, F, Z));
    CHECK(hall_coprime_check(f.G, F)); // 2048 vs 165
}

TEST_CASE("element order spectrum") {
    Flagship& f = flagship();
    SpectrumReport spec = element_order_spectrum(f.cd);
    std::vector<uint64_t> want = {1, 2, 3, 4, 5, 6, 10, 11, 15, 20, 22, 30, 33, 66};
    CHECK(spec.orders == want);
    // no element order is divisible by all of 2, 3, 5, 11
    for (uint64_t o : spec.orders) CHECK(o % (2 * 3 * 5 * 11) != 0);
    std::vector<std::vector<uint64_t>> maximal = {{2, 3, 5}, {2, 3, 11}};
    CHECK(spec.maximal_pi_sets == maximal);
}

TEST_CASE("quotient by the Fitting subgroup") {
    Flagship& f = flagship();
    Subgroup F = fitting_subgroup(f.G, f.cd);
    FiniteGroup Q = quotient_group(f.G, F);
    CHECK(Q.order() == 165);
    ClassData qcd = conjugacy_classes(Q);
    CHECK(qcd.num_classes() == 21);
    SpectrumReport qspec = element_order_spectrum(qcd);
    CHECK(qspec.orders == std::vector<uint64_t>{1, 3, 5, 11, 15, 33});
}
