#include "cgl/chartab.hpp"
#include "cgl/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace cgl {

ClassMatrix class_matrix(const FiniteGroup& G, const ClassData& cd, uint32_t i) {
    size_t r = cd.num_classes();
    ClassMatrix M;
    M.i = i;
    M.a.assign(r, std::vector<uint64_t>(r, 0));
    for (uint32_t xi : cd.members[i]) {
        ekey xinv = G.inv(G.elements()[xi]);
        for (size_t k = 0; k < r; ++k) {
            ekey y = G.mul(xinv, cd.representatives[k]);
            ++M.a[cd.class_of_index[G.index_of(y)]][k];
        }
    }
    // column 0 counts solutions of xy = identity
    for (size_t j = 0; j < r; ++j) {
        uint64_t expect = (j == cd.inverse_class[i]) ? cd.sizes[i] : 0;
        internal_check(M.a[j][0] == expect, "class matrix column 0 is wrong");
    }
    return M;
}

uint64_t dixon_prime_lower_bound(uint64_t group_order, uint64_t num_classes) {
    // exact ceil(2 sqrt(n)) = ceil(sqrt(4n))
    uint64_t m = 4 * group_order;
    uint64_t c = uint64_t(std::sqrt((long double)m));
    while (c * c > m) --c;
    while ((c + 1) * (c + 1) <= m) ++c;
    if (c * c < m) ++c;
    // the characteristic-polynomial recurrence divides by 1..r, so the prime
    // must also exceed the class count
    return std::max(c, num_classes);
}

namespace {

struct Subspace {
    // basis vectors as rows, reduced: unit leading pivots, zeros at the other
    // pivot coordinates
    std::vector<std::vector<uint64_t>> basis;
    std::vector<size_t> pivots;
    size_t dim() const { return basis.size(); }
};

Subspace make_subspace(std::vector<std::vector<uint64_t>> vecs, const PrimeFieldCtx& F) {
    Subspace S;
    size_t r = vecs.empty() ? 0 : vecs[0].size();
    for (auto& v : vecs) {
        for (size_t t = 0; t < S.basis.size(); ++t) {
            uint64_t c = v[S.pivots[t]];
            if (c == 0) continue;
            for (size_t i = 0; i < r; ++i) v[i] = F.sub(v[i], F.mul(c, S.basis[t][i]));
        }
        size_t piv = r;
        for (size_t i = 0; i < r; ++i) {
            if (v[i] != 0) { piv = i; break; }
        }
        internal_check(piv != r, "dependent vectors fed to subspace basis");
        uint64_t inv = F.inverse(v[piv]);
        for (size_t i = 0; i < r; ++i) v[i] = F.mul(v[i], inv);
        // clear this pivot column from earlier rows
        for (size_t t = 0; t < S.basis.size(); ++t) {
            uint64_t c = S.basis[t][piv];
            if (c == 0) continue;
            for (size_t i = 0; i < r; ++i) {
                S.basis[t][i] = F.sub(S.basis[t][i], F.mul(c, v[i]));
            }
        }
        S.basis.push_back(std::move(v));
        S.pivots.push_back(piv);
    }
    return S;
}

// coefficients of the characteristic polynomial of R (monic, degree m):
// charpoly(x) = x^m + c[1] x^(m-1) + ... + c[m]
std::vector<uint64_t> charpoly_mod(const std::vector<std::vector<uint64_t>>& R,
                                   const PrimeFieldCtx& F) {
    size_t m = R.size();
    internal_check(m < F.ell, "splitting prime too small for the matrix dimension");
    std::vector<uint64_t> c(m + 1, 0);
    c[0] = 1;
    std::vector<std::vector<uint64_t>> Mk(m, std::vector<uint64_t>(m, 0));
    for (size_t i = 0; i < m; ++i) Mk[i][i] = 1; // M_0 = I
    for (size_t k = 1; k <= m; ++k) {
        // M_k = R * (M_{k-1} + c_{k-1} I) ... using the running Mk as M_{k-1}
        if (k > 1) {
            for (size_t i = 0; i < m; ++i) Mk[i][i] = F.add(Mk[i][i], c[k - 1]);
        }
        std::vector<std::vector<uint64_t>> next(m, std::vector<uint64_t>(m, 0));
        for (size_t i = 0; i < m; ++i) {
            for (size_t t = 0; t < m; ++t) {
                uint64_t v = R[i][t];
                if (v == 0) continue;
                for (size_t j = 0; j < m; ++j) {
                    next[i][j] = F.add(next[i][j], F.mul(v, Mk[t][j]));
                }
            }
        }
        Mk = std::move(next);
        uint64_t tr = 0;
        for (size_t i = 0; i < m; ++i) tr = F.add(tr, Mk[i][i]);
        c[k] = F.mul(F.sub(0, tr), F.inverse(k % F.ell));
    }
    return c;
}

// kernel basis of (R - a*I) over GF(ell)
std::vector<std::vector<uint64_t>> eigen_kernel(std::vector<std::vector<uint64_t>> A, uint64_t a,
                                                const PrimeFieldCtx& F) {
    size_t m = A.size();
    for (size_t i = 0; i < m; ++i) A[i][i] = F.sub(A[i][i], a);
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < m && row < m; ++col) {
        size_t sel = row;
        while (sel < m && A[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(A[sel], A[row]);
        uint64_t inv = F.inverse(A[row][col]);
        for (size_t j = 0; j < m; ++j) A[row][j] = F.mul(A[row][j], inv);
        for (size_t i = 0; i < m; ++i) {
            if (i == row || A[i][col] == 0) continue;
            uint64_t f = A[i][col];
            for (size_t j = 0; j < m; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[row][j]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<uint8_t> is_pivot(m, 0);
    for (size_t c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<uint64_t>> kernel;
    for (size_t free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint64_t> v(m, 0);
        v[free] = 1;
        for (size_t t = 0; t < pivot_col.size(); ++t) {
            v[pivot_col[t]] = F.sub(0, A[t][free]);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// splits one invariant subspace by one matrix; returns eigenspace pieces
std::vector<Subspace> split_one(const Subspace& S, const std::vector<std::vector<uint64_t>>& M,
                                const PrimeFieldCtx& F) {
    size_t m = S.dim();
    size_t r = S.basis[0].size();
    // images of the basis under M, and their coordinates in the basis
    std::vector<std::vector<uint64_t>> R(m, std::vector<uint64_t>(m, 0));
    for (size_t s = 0; s < m; ++s) {
        std::vector<uint64_t> w(r, 0);
        for (size_t j = 0; j < r; ++j) {
            uint64_t acc = 0;
            for (size_t k = 0; k < r; ++k) {
                if (M[j][k] && S.basis[s][k]) acc = F.add(acc, F.mul(M[j][k] % F.ell, S.basis[s][k]));
            }
            w[j] = acc;
        }
        // reduced bases read coordinates straight off the pivot positions
        for (size_t t = 0; t < m; ++t) R[t][s] = w[S.pivots[t]];
        for (size_t t = 0; t < m; ++t) {
            if (R[t][s] == 0) continue;
            for (size_t j = 0; j < r; ++j) w[j] = F.sub(w[j], F.mul(R[t][s], S.basis[t][j]));
        }
        for (size_t j = 0; j < r; ++j) {
            internal_check(w[j] == 0, "class matrix does not stabilize the common eigenspace");
        }
    }

    auto cp = charpoly_mod(R, F);
    std::vector<uint64_t> roots;
    for (uint64_t a = 0; a < F.ell; ++a) {
        uint64_t v = 0;
        for (size_t k = 0; k <= m; ++k) v = F.add(F.mul(v, a), cp[k]);
        if (v == 0) roots.push_back(a);
    }

    std::vector<Subspace> pieces;
    size_t total = 0;
    for (uint64_t a : roots) {
        auto ker = eigen_kernel(R, a, F);
        if (ker.empty()) continue;
        total += ker.size();
        std::vector<std::vector<uint64_t>> vecs;
        for (const auto& kv : ker) {
            std::vector<uint64_t> v(r, 0);
            for (size_t t = 0; t < m; ++t) {
                if (kv[t] == 0) continue;
                for (size_t j = 0; j < r; ++j) {
                    v[j] = F.add(v[j], F.mul(kv[t], S.basis[t][j]));
                }
            }
            vecs.push_back(std::move(v));
        }
        pieces.push_back(make_subspace(std::move(vecs), F));
    }
    internal_check(total == m, "class algebra failed to diagonalize over the splitting prime");
    return pieces;
}

} // namespace

std::vector<std::vector<uint64_t>> split_eigenspaces(const ClassMatrixStream& stream, size_t r,
                                                     const PrimeFieldCtx& ctx) {
    std::vector<Subspace> spaces;
    {
        std::vector<std::vector<uint64_t>> idv(r, std::vector<uint64_t>(r, 0));
        for (size_t i = 0; i < r; ++i) idv[i][i] = 1;
        spaces.push_back(make_subspace(std::move(idv), ctx));
    }
    auto all_done = [&spaces] {
        return std::all_of(spaces.begin(), spaces.end(),
                           [](const Subspace& s) { return s.dim() == 1; });
    };

    auto apply_matrix = [&](const std::vector<std::vector<uint64_t>>& M) {
        std::vector<Subspace> next;
        for (auto& S : spaces) {
            if (S.dim() == 1) {
                next.push_back(std::move(S));
            } else {
                for (auto& piece : split_one(S, M, ctx)) next.push_back(std::move(piece));
            }
        }
        spaces = std::move(next);
    };

    for (uint32_t i : stream.order) {
        if (all_done()) break;
        apply_matrix(stream.get(i).a);
    }

    // deterministic random combinations as a last resort if single class
    // matrices stop separating characters
    if (!all_done()) {
        std::mt19937_64 rng(0);
        for (int attempt = 0; attempt < 64 && !all_done(); ++attempt) {
            std::vector<std::vector<uint64_t>> combo(r, std::vector<uint64_t>(r, 0));
            for (uint32_t i : stream.order) {
                uint64_t c = rng() % ctx.ell;
                if (c == 0) continue;
                auto M = stream.get(i);
                for (size_t j = 0; j < r; ++j) {
                    for (size_t k = 0; k < r; ++k) {
                        combo[j][k] = ctx.add(combo[j][k], ctx.mul(c, M.a[j][k] % ctx.ell));
                    }
                }
            }
            apply_matrix(combo);
        }
        internal_check(all_done(), "eigen splitting stalled with all class matrices consumed");
    }

    internal_check(spaces.size() == r, "wrong number of common eigenvectors");
    std::vector<std::vector<uint64_t>> out;
    for (const auto& S : spaces) {
        std::vector<uint64_t> v = S.basis[0];
        internal_check(v[0] != 0, "eigenvector vanishes at the identity class");
        uint64_t inv = ctx.inverse(v[0]);
        for (auto& x : v) x = ctx.mul(x, inv);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<uint64_t> recover_degrees(const std::vector<std::vector<uint64_t>>& eigvecs,
                                      const ClassData& cd, const PrimeFieldCtx& ctx) {
    size_t r = cd.num_classes();
    uint64_t n = cd.group_order % ctx.ell;
    std::vector<uint64_t> degrees;
    for (const auto& v : eigvecs) {
        uint64_t s = 0;
        for (size_t j = 0; j < r; ++j) {
            uint64_t term = ctx.mul(v[j], v[cd.inverse_class[j]]);
            s = ctx.add(s, ctx.mul(term, ctx.inverse(cd.sizes[j] % ctx.ell)));
        }
        internal_check(s != 0, "degree recovery hit a zero norm");
        uint64_t d2 = ctx.mul(n, ctx.inverse(s));
        uint64_t d = 0;
        for (uint64_t cand = 1; 2 * cand < ctx.ell; ++cand) {
            if (ctx.mul(cand % ctx.ell, cand % ctx.ell) == d2) { d = cand; break; }
        }
        internal_check(d != 0, "no degree square root below ell/2");
        internal_check(cd.group_order % d == 0, "recovered degree does not divide the group order");
        degrees.push_back(d);
    }
    return degrees;
}

std::vector<CyclotomicValue> lift_values(const std::vector<uint64_t>& eigvec, uint64_t d,
                                         const ClassData& cd, const PrimeFieldCtx& ctx,
                                         std::shared_ptr<const CycloCtx> cyclo) {
    size_t r = cd.num_classes();
    uint64_t e = cd.exponent;
    internal_check(ctx.e == e, "prime field root order must equal the exponent");
    // modular character values per class
    std::vector<uint64_t> f(r);
    for (size_t j = 0; j < r; ++j) {
        f[j] = ctx.mul(d % ctx.ell, ctx.mul(eigvec[j], ctx.inverse(cd.sizes[j] % ctx.ell)));
    }
    std::vector<CyclotomicValue> row;
    for (size_t j = 0; j < r; ++j) {
        uint64_t o = cd.element_orders[j];
        uint64_t zo = ctx.pow(ctx.z, e / o);          // order-o root
        uint64_t zo_inv = ctx.inverse(zo);
        uint64_t o_inv = ctx.inverse(o % ctx.ell);
        CyclotomicValue val(*cyclo);
        uint64_t total = 0;
        uint64_t check = 0; // reassemble f[j] from the multiplicities
        uint64_t zt = 1;    // zo^t
        for (uint64_t t = 0; t < o; ++t) {
            // m_t = o^{-1} sum_s f(g^s) zo^{-ts}
            uint64_t acc = 0;
            uint64_t w = 1; // zo^{-ts}
            uint64_t step = ctx.pow(zo_inv, t);
            for (uint64_t s = 0; s < o; ++s) {
                acc = ctx.add(acc, ctx.mul(f[cd.power_map[j][s]], w));
                w = ctx.mul(w, step);
            }
            uint64_t m = ctx.mul(acc, o_inv);
            internal_check(m <= d, "lifted multiplicity out of range");
            if (m != 0) val.c[(t * (e / o)) % e] = int64_t(m);
            total += m;
            check = ctx.add(check, ctx.mul(m, zt));
            zt = ctx.mul(zt, zo);
        }
        internal_check(total == d, "lifted multiplicities do not sum to the degree");
        internal_check(check == f[j], "lifted value disagrees with its modular image");
        row.push_back(std::move(val));
    }
    return row;
}

uint64_t CharacterTable::degree(size_t i) const {
    // lifting makes the identity-class value the plain integer vector (d,0,..)
    const auto& v = rows[i][0];
    internal_check(!v.c.empty() && v.c[0] > 0, "character degree is not a positive integer");
    for (size_t k = 1; k < v.c.size(); ++k) {
        internal_check(v.c[k] == 0, "identity-class value is not a plain integer");
    }
    return uint64_t(v.c[0]);
}

namespace {

// orthogonality checks are independent per pair; spread them over threads
void run_parallel(size_t count, int threads, const std::function<void(size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    size_t nt = std::min<size_t>(size_t(threads), count);
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(nt);
    for (size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= count) break;
                    fn(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

} // namespace

void verify_table_invariants(const CharacterTable& tbl, int threads) {
    size_t r = tbl.num_classes();
    internal_check(tbl.num_chars() == r, "character count must equal class count");
    uint64_t sum_sq = 0;
    for (size_t i = 0; i < r; ++i) {
        uint64_t d = tbl.degree(i);
        internal_check(tbl.group_order % d == 0, "degree does not divide group order");
        sum_sq += d * d;
    }
    internal_check(sum_sq == tbl.group_order, "sum of squared degrees must be |G|");

    // conjugate symmetry: value at the inverse class is the conjugate vector
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < r; ++j) {
            internal_check(tbl.rows[i][tbl.inverse_class[j]].c == tbl.rows[i][j].conj().c,
                           "value at inverse class is not the conjugate");
        }
    }

    const CycloCtx& cc = *tbl.cyclo;
    size_t e = cc.e;
    // row orthogonality: sum_j |C_j| chi_a(g_j) chi_b(g_j^{-1}) = [a=b] |G|
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < r; ++a) {
        for (size_t b = a; b < r; ++b) pairs.emplace_back(a, b);
    }
    run_parallel(pairs.size(), threads, [&](size_t pi) {
        auto [a, b] = pairs[pi];
        std::vector<int64_t> acc(e, 0);
        for (size_t j = 0; j < r; ++j) {
            convolve_acc(acc, tbl.rows[a][j], tbl.rows[b][tbl.inverse_class[j]],
                         int64_t(tbl.class_sizes[j]));
        }
        if (a == b) acc[0] -= int64_t(tbl.group_order);
        internal_check(cc.is_zero(acc), "row orthogonality failed");
    });
    // column orthogonality: sum_chi chi(g_j) conj(chi(g_k)) = [j=k] |G|/|C_j|
    run_parallel(pairs.size(), threads, [&](size_t pi) {
        auto [j, k] = pairs[pi];
        std::vector<int64_t> acc(e, 0);
        for (size_t i = 0; i < r; ++i) {
            convolve_acc(acc, tbl.rows[i][j], tbl.rows[i][k].conj(), 1);
        }
        if (j == k) acc[0] -= int64_t(tbl.group_order / tbl.class_sizes[j]);
        internal_check(cc.is_zero(acc), "column orthogonality failed");
    });
}

CharacterTable character_table(const FiniteGroup& G, int threads) {
    ClassData cd = conjugacy_classes(G);
    size_t r = cd.num_classes();
    PrimeFieldCtx ctx =
        prime_field_with_root(cd.exponent, dixon_prime_lower_bound(G.order(), r));

    ClassMatrixStream stream;
    for (uint32_t i = 1; i < r; ++i) stream.order.push_back(i);
    std::stable_sort(stream.order.begin(), stream.order.end(),
                     [&cd](uint32_t a, uint32_t b) { return cd.sizes[a] < cd.sizes[b]; });
    stream.get = [&G, &cd](uint32_t i) { return class_matrix(G, cd, i); };

    auto eigvecs = split_eigenspaces(stream, r, ctx);
    auto degrees = recover_degrees(eigvecs, cd, ctx);

    CharacterTable tbl;
    tbl.group_order = G.order();
    tbl.exponent = cd.exponent;
    tbl.ell = ctx.ell;
    tbl.z = ctx.z;
    tbl.class_sizes = cd.sizes;
    tbl.class_orders = cd.element_orders;
    tbl.power_map = cd.power_map;
    tbl.inverse_class = cd.inverse_class;
    tbl.cyclo = std::make_shared<CycloCtx>(cd.exponent);
    for (size_t i = 0; i < r; ++i) {
        tbl.rows.push_back(lift_values(eigvecs[i], degrees[i], cd, ctx, tbl.cyclo));
    }
    std::sort(tbl.rows.begin(), tbl.rows.end(),
              [](const std::vector<CyclotomicValue>& x, const std::vector<CyclotomicValue>& y) {
                  for (size_t j = 0; j < x.size(); ++j) {
                      if (x[j].c != y[j].c) return x[j].c < y[j].c;
                  }
                  return false;
              });
    // rows are sorted by degree first: the value at class 0 is the constant
    // vector (d, 0, ..., 0), so lexicographic order on class 0 is degree order
    verify_table_invariants(tbl, threads);
    return tbl;
}

} // namespace cgl
