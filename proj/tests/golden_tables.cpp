#include "golden_tables.hpp"

#include "cgl/constructors.hpp"
#include "cgl/cyclotomic.hpp"
#include "cgl/errors.hpp"

#include <numeric>
#include <string>

namespace cgl::golden {

namespace {

ekey gpow(const FiniteGroup& G, ekey x, uint64_t n) {
    ekey r = G.id();
    for (uint64_t i = 0; i < n; ++i) r = G.mul(r, x);
    return r;
}

Value iv(int64_t n) { return n == 0 ? Value{} : Value{{n, 0}}; }
Value zp(uint64_t k, int64_t coeff = 1) { return Value{{coeff, k}}; }

GoldenTable s3_table() {
    GoldenTable gt;
    gt.name = "S3";
    gt.group = build_corpus_group("S3");
    gt.exponent = 6;
    ekey t = gt.group.generators()[0]; // (01)
    ekey c = gt.group.generators()[1]; // (012)
    gt.classes = {{gt.group.id(), 1, 1}, {t, 3, 2}, {c, 2, 3}};
    gt.rows = {
        {iv(1), iv(1), iv(1)},
        {iv(1), iv(-1), iv(1)},
        {iv(2), iv(0), iv(-1)},
    };
    return gt;
}

GoldenTable d8_table() {
    GoldenTable gt;
    gt.name = "D8";
    gt.group = build_corpus_group("D8");
    const FiniteGroup& G = gt.group;
    gt.exponent = 4;
    ekey r = G.generators()[0]; // (0123)
    ekey s = G.generators()[1]; // (02)
    ekey r2 = G.mul(r, r);
    ekey rs = G.mul(r, s);
    gt.classes = {{G.id(), 1, 1}, {r2, 1, 2}, {r, 2, 4}, {s, 2, 2}, {rs, 2, 2}};
    gt.rows = {
        {iv(1), iv(1), iv(1), iv(1), iv(1)},
        {iv(1), iv(1), iv(1), iv(-1), iv(-1)},
        {iv(1), iv(1), iv(-1), iv(1), iv(-1)},
        {iv(1), iv(1), iv(-1), iv(-1), iv(1)},
        {iv(2), iv(-2), iv(0), iv(0), iv(0)},
    };
    return gt;
}

GoldenTable q8_table() {
    GoldenTable gt;
    gt.name = "Q8";
    gt.group = build_corpus_group("Q8");
    const FiniteGroup& G = gt.group;
    gt.exponent = 4;
    ekey i = G.generators()[0];
    ekey j = G.generators()[1];
    ekey m1 = G.mul(i, i); // -1
    ekey k = G.mul(i, j);
    gt.classes = {{G.id(), 1, 1}, {m1, 1, 2}, {i, 2, 4}, {j, 2, 4}, {k, 2, 4}};
    gt.rows = {
        {iv(1), iv(1), iv(1), iv(1), iv(1)},
        {iv(1), iv(1), iv(1), iv(-1), iv(-1)},
        {iv(1), iv(1), iv(-1), iv(1), iv(-1)},
        {iv(1), iv(1), iv(-1), iv(-1), iv(1)},
        {iv(2), iv(-2), iv(0), iv(0), iv(0)},
    };
    return gt;
}

GoldenTable a4_table() {
    GoldenTable gt;
    gt.name = "A4";
    gt.group = build_corpus_group("A4");
    const FiniteGroup& G = gt.group;
    gt.exponent = 6;
    ekey a = G.generators()[0];  // (012)
    ekey dt = G.generators()[1]; // (01)(23)
    ekey a2 = G.mul(a, a);
    const Value w = zp(2);  // zeta_3
    const Value w2 = zp(4); // zeta_3^2
    gt.classes = {{G.id(), 1, 1}, {dt, 3, 2}, {a, 4, 3}, {a2, 4, 3}};
    gt.rows = {
        {iv(1), iv(1), iv(1), iv(1)},
        {iv(1), iv(1), w, w2},
        {iv(1), iv(1), w2, w},
        {iv(3), iv(-1), iv(0), iv(0)},
    };
    return gt;
}

GoldenTable s4_table() {
    GoldenTable gt;
    gt.name = "S4";
    gt.group = build_corpus_group("S4");
    const FiniteGroup& G = gt.group;
    gt.exponent = 12;
    ekey t = G.generators()[0];  // (01)
    ekey f = G.generators()[1];  // (0123)
    ekey dt = G.mul(f, f);       // (02)(13)
    ekey c3 = G.mul(t, f);       // (123)
    gt.classes = {{G.id(), 1, 1}, {t, 6, 2}, {dt, 3, 2}, {c3, 8, 3}, {f, 6, 4}};
    gt.rows = {
        {iv(1), iv(1), iv(1), iv(1), iv(1)},
        {iv(1), iv(-1), iv(1), iv(1), iv(-1)},
        {iv(2), iv(0), iv(2), iv(-1), iv(0)},
        {iv(3), iv(1), iv(-1), iv(0), iv(-1)},
        {iv(3), iv(-1), iv(-1), iv(0), iv(1)},
    };
    return gt;
}

GoldenTable sl23_table() {
    GoldenTable gt;
    gt.name = "SL23";
    gt.group = build_corpus_group("SL23");
    const FiniteGroup& G = gt.group;
    gt.exponent = 12;
    ekey s = G.generators()[0]; // [[1,1],[0,1]], order 3
    ekey t = G.generators()[1]; // [[0,-1],[1,0]], order 4
    ekey m1 = G.mul(t, t);      // -1
    ekey s2 = G.mul(s, s);
    ekey ms = G.mul(m1, s);
    ekey ms2 = G.mul(m1, s2);
    const Value w = zp(4);  // zeta_3
    const Value w2 = zp(8); // zeta_3^2
    gt.classes = {{G.id(), 1, 1}, {m1, 1, 2}, {t, 6, 4},   {s, 4, 3},
                  {s2, 4, 3},     {ms, 4, 6}, {ms2, 4, 6}};
    gt.rows = {
        {iv(1), iv(1), iv(1), iv(1), iv(1), iv(1), iv(1)},
        {iv(1), iv(1), iv(1), w, w2, w, w2},
        {iv(1), iv(1), iv(1), w2, w, w2, w},
        {iv(3), iv(3), iv(-1), iv(0), iv(0), iv(0), iv(0)},
        {iv(2), iv(-2), iv(0), iv(-1), iv(-1), iv(1), iv(1)},
        {iv(2), iv(-2), iv(0), zp(4, -1), zp(8, -1), w, w2},
        {iv(2), iv(-2), iv(0), zp(8, -1), zp(4, -1), w2, w},
    };
    return gt;
}

// Heisenberg group of order 27: the center {1, z, z^2} carries the two
// degree-3 characters; the 8 noncentral classes are the nontrivial cosets
// of the center, coordinatized by (a, h) with exemplar key 3a + h.
GoldenTable h27_table() {
    GoldenTable gt;
    gt.name = "extraspecial_p_small";
    gt.group = build_corpus_group("extraspecial_p_small");
    const FiniteGroup& G = gt.group;
    gt.exponent = 3;
    ekey z = G.generators()[1]; // (0,1;0), central
    ekey z2 = G.mul(z, z);
    gt.classes = {{G.id(), 1, 1}, {z, 1, 3}, {z2, 1, 3}};
    std::vector<std::pair<uint64_t, uint64_t>> cosets; // (a, h) != (0, 0)
    for (uint64_t a = 0; a < 3; ++a) {
        for (uint64_t h = 0; h < 3; ++h) {
            if (a == 0 && h == 0) continue;
            cosets.push_back({a, h});
            gt.classes.push_back({ekey(3 * a + h), 3, 3});
        }
    }
    for (uint64_t r = 0; r < 3; ++r) {
        for (uint64_t s = 0; s < 3; ++s) {
            std::vector<Value> row = {iv(1), iv(1), iv(1)};
            for (auto [a, h] : cosets) row.push_back(zp((r * a + s * h) % 3));
            gt.rows.push_back(std::move(row));
        }
    }
    std::vector<Value> d3a = {iv(3), zp(1, 3), zp(2, 3)};
    std::vector<Value> d3b = {iv(3), zp(2, 3), zp(1, 3)};
    d3a.resize(11, Value{});
    d3b.resize(11, Value{});
    gt.rows.push_back(std::move(d3a));
    gt.rows.push_back(std::move(d3b));
    return gt;
}

// T = C33 : C5 with sigma m sigma^-1 = m^4. Conjugation multiplies exponents
// of m by powers of 4 (orbits {11}, {22}, and six 5-orbits with smallest
// elements 1,2,3,5,6,7) and shifts the m-part by (1-4^j)Z33 = 3Z33 on the
// nontrivial sigma-cosets, so those classes are indexed by (j, b mod 3).
// Linear characters factor through T/<m^3> = C15; the six degree-5 rows are
// induced from the characters psi_c(m) = zeta_33^c of C33 and vanish off C33.
GoldenTable torus_table() {
    GoldenTable gt;
    gt.name = "T";
    gt.group = build_torus_T();
    const FiniteGroup& G = gt.group;
    gt.exponent = 165;
    ekey m = G.generators()[0];
    ekey s = G.generators()[1];

    const std::vector<uint64_t> nreps = {0, 11, 22, 1, 2, 3, 5, 6, 7};
    for (uint64_t k : nreps) {
        uint64_t size = (k % 11 == 0) ? 1 : 5;
        uint64_t order = 33 / std::gcd<uint64_t>(33, k);
        gt.classes.push_back({gpow(G, m, k), size, order});
    }
    std::vector<std::pair<uint64_t, uint64_t>> mixed; // (j, b)
    for (uint64_t j = 1; j <= 4; ++j) {
        for (uint64_t b = 0; b < 3; ++b) {
            mixed.push_back({j, b});
            gt.classes.push_back({G.mul(gpow(G, m, b), gpow(G, s, j)), 11,
                                  b % 3 == 0 ? uint64_t(5) : uint64_t(15)});
        }
    }

    // zeta_3 = zeta_165^55, zeta_5 = zeta_165^33, zeta_33 = zeta_165^5
    for (uint64_t a = 0; a < 3; ++a) {
        for (uint64_t b5 = 0; b5 < 5; ++b5) {
            std::vector<Value> row;
            for (uint64_t k : nreps) row.push_back(zp(55 * ((a * k) % 3)));
            for (auto [j, b] : mixed) {
                row.push_back(zp((55 * ((a * b) % 3) + 33 * ((b5 * j) % 5)) % 165));
            }
            gt.rows.push_back(std::move(row));
        }
    }
    const uint64_t p4[5] = {1, 4, 16, 31, 25}; // powers of 4 mod 33
    for (uint64_t c : {1, 2, 3, 5, 6, 7}) {
        std::vector<Value> row;
        for (uint64_t k : nreps) {
            Value v;
            for (uint64_t q : p4) v.push_back({1, 5 * ((c * q * k) % 33)});
            row.push_back(std::move(v));
        }
        row.resize(21, Value{});
        gt.rows.push_back(std::move(row));
    }
    return gt;
}

} // namespace

GoldenTable cyclic_table(uint64_t n) {
    GoldenTable gt;
    gt.name = "C_" + std::to_string(n);
    gt.group = build_corpus_group(gt.name);
    gt.exponent = n;
    for (uint64_t k = 0; k < n; ++k) {
        gt.classes.push_back({ekey(k), 1, n / std::gcd(n, k == 0 ? n : k)});
    }
    for (uint64_t a = 0; a < n; ++a) {
        std::vector<Value> row;
        for (uint64_t k = 0; k < n; ++k) row.push_back(zp((a * k) % n));
        gt.rows.push_back(std::move(row));
    }
    return gt;
}

GoldenTable named_table(const std::string& name) {
    if (name == "S3") return s3_table();
    if (name == "D8") return d8_table();
    if (name == "Q8") return q8_table();
    if (name == "A4") return a4_table();
    if (name == "S4") return s4_table();
    if (name == "SL23") return sl23_table();
    if (name == "extraspecial_p_small") return h27_table();
    if (name == "T") return torus_table();
    throw InputError("no golden table for: " + name);
}

std::vector<GoldenTable> all_tables() {
    std::vector<GoldenTable> out;
    for (uint64_t n = 1; n <= 12; ++n) out.push_back(cyclic_table(n));
    for (const char* name : {"S3", "D8", "Q8", "A4", "S4", "SL23", "extraspecial_p_small", "T"}) {
        out.push_back(named_table(name));
    }
    return out;
}

namespace {

CyclotomicValue from_terms(const CycloCtx& ctx, const Value& v) {
    CyclotomicValue x(ctx);
    for (auto [coeff, k] : v) {
        internal_check(k < ctx.e, "golden exponent out of range");
        x.c[k] += coeff;
    }
    return x;
}

} // namespace

std::string self_check(const GoldenTable& gt) {
    size_t n = gt.classes.size();
    if (gt.rows.size() != n) return gt.name + ": row count differs from class count";
    uint64_t szsum = 0;
    for (const GoldenClass& cl : gt.classes) szsum += cl.size;
    if (szsum != gt.group.order()) return gt.name + ": class sizes do not sum to |G|";

    CycloCtx ctx(gt.exponent);
    std::vector<std::vector<CyclotomicValue>> m(n);
    for (size_t r = 0; r < n; ++r) {
        if (gt.rows[r].size() != n) return gt.name + ": ragged row " + std::to_string(r);
        for (size_t c = 0; c < n; ++c) m[r].push_back(from_terms(ctx, gt.rows[r][c]));
    }
    for (size_t r = 0; r < n; ++r) {
        for (size_t s = r; s < n; ++s) {
            std::vector<int64_t> acc(ctx.e, 0);
            for (size_t c = 0; c < n; ++c) {
                convolve_acc(acc, m[r][c], m[s][c].conj(), int64_t(gt.classes[c].size));
            }
            if (r == s) acc[0] -= int64_t(gt.group.order());
            CyclotomicValue t(ctx);
            t.c = std::move(acc);
            if (!t.is_zero()) {
                return gt.name + ": rows " + std::to_string(r) + "," + std::to_string(s) +
                       " fail orthogonality";
            }
        }
    }
    return "";
}

std::string match_report(const GoldenTable& gt, const CharacterTable& tbl) {
    const FiniteGroup& G = gt.group;
    size_t n = gt.classes.size();
    ClassData cd = conjugacy_classes(G);
    if (cd.num_classes() != n) return gt.name + ": engine class count differs";
    if (tbl.num_classes() != n || tbl.num_chars() != n) return gt.name + ": table shape differs";
    if (tbl.group_order != G.order()) return gt.name + ": table order differs";
    if (tbl.exponent != gt.exponent) return gt.name + ": exponent differs";

    std::vector<uint32_t> col(n);
    std::vector<uint8_t> seen(n, 0);
    for (size_t i = 0; i < n; ++i) {
        const GoldenClass& gc = gt.classes[i];
        if (!G.contains(gc.exemplar)) return gt.name + ": exemplar is not a group element";
        uint32_t c = cd.class_of_key(G, gc.exemplar);
        if (seen[c]) return gt.name + ": two exemplars share a class";
        seen[c] = 1;
        col[i] = c;
        if (cd.sizes[c] != gc.size || tbl.class_sizes[c] != gc.size) {
            return gt.name + ": class size mismatch at exemplar " + std::to_string(i);
        }
        if (cd.element_orders[c] != gc.order || tbl.class_orders[c] != gc.order) {
            return gt.name + ": element order mismatch at exemplar " + std::to_string(i);
        }
    }

    std::vector<std::vector<CyclotomicValue>> gv(n, std::vector<CyclotomicValue>(n));
    for (size_t r = 0; r < n; ++r) {
        for (size_t i = 0; i < n; ++i) gv[r][col[i]] = from_terms(*tbl.cyclo, gt.rows[r][i]);
    }
    std::vector<uint8_t> used(n, 0);
    for (size_t r = 0; r < n; ++r) {
        bool found = false;
        for (size_t t = 0; t < n && !found; ++t) {
            if (used[t]) continue;
            bool eq = true;
            for (size_t c = 0; c < n && eq; ++c) eq = (gv[r][c] - tbl.rows[t][c]).is_zero();
            if (eq) {
                used[t] = 1;
                found = true;
            }
        }
        if (!found) {
            return gt.name + ": golden row " + std::to_string(r) + " matches no computed row";
        }
    }
    return "";
}

} // namespace cgl::golden
