// Group cohomology H^0..H^2 via the normalized bar resolution. Cochains are
// normalized (they vanish on tuples containing the identity), which cuts
// C^n(G,M) down to (|G|-1)^n * dim M coordinates. Two engines compute the
// same numbers:
//   - an explicit sparse-coboundary path for small groups (the test oracle),
//   - a generator-parameter propagation path that scales to |G| ~ 120 at
//     degree 2 and to products of simple groups at degree 1.
// Both use the fact that a normalized cochain f has df = 0 as soon as
// df(s, ...) = 0 for every generator s: the simplicial identity propagates
// vanishing over word length in the first argument.
//
// Modules are this library's right modules; cohomology acts through the
// associated left action g |> v = v * M_(g^-1).
#pragma once

#include "progen/chief.hpp"
#include "progen/homs.hpp"
#include "progen/projective.hpp"

namespace progen {

namespace cohom_detail {

struct Ctx {
    const GModule* M;
    const ElementTable* T;
    size_t N;            // |G|
    size_t dm;           // dim M
    const Field* F;
    std::vector<Mat> left;       // per element e: matrix of v -> e |> v  (= rho(e^-1))
    std::vector<uint32_t> sgen;  // distinct nontrivial generator element indices

    explicit Ctx(const GModule& mod, size_t enum_cap) : M(&mod) {
        T = &mod.group().elements(enum_cap);
        N = T->size();
        dm = mod.dim();
        F = &mod.field();
        std::vector<Mat> elmats = element_matrices(mod);
        left.reserve(N);
        for (uint32_t e = 0; e < N; ++e) left.push_back(elmats[T->inverse(e)]);
        std::vector<uint32_t> seen;
        for (size_t gi = 0; gi < mod.group().gens().size(); ++gi) {
            uint32_t e = *T->index_of(mod.group().gens()[gi]);
            if (e == 0) continue;  // identity generators act trivially on cochains
            if (std::find(seen.begin(), seen.end(), e) == seen.end()) seen.push_back(e);
        }
        sgen = std::move(seen);
    }
};

// Left BFS tree over nontrivial elements: x = s * w with w strictly closer to
// the identity. parent[x] = w, via[x] = generator element index s.
struct LeftTree {
    std::vector<uint32_t> order;  // nontrivial elements in BFS discovery order
    std::vector<uint32_t> parent, via;
    std::vector<bool> is_root;  // roots are the generator elements themselves
};

inline LeftTree left_tree(const Ctx& c) {
    LeftTree t;
    t.parent.assign(c.N, UINT32_MAX);
    t.via.assign(c.N, UINT32_MAX);
    t.is_root.assign(c.N, false);
    std::vector<bool> seen(c.N, false);
    seen[0] = true;
    for (uint32_t s : c.sgen) {
        if (!seen[s]) {
            seen[s] = true;
            t.is_root[s] = true;
            t.order.push_back(s);
        }
    }
    for (size_t i = 0; i < t.order.size(); ++i) {
        uint32_t w = t.order[i];
        for (uint32_t s : c.sgen) {
            uint32_t x = c.T->mult(s, w);
            if (!seen[x]) {
                seen[x] = true;
                t.parent[x] = w;
                t.via[x] = s;
                t.order.push_back(x);
            }
        }
    }
    if (t.order.size() != c.N - 1) throw ComputeError("cohomology: generators do not generate");
    return t;
}

// Right multiply each dm-wide block of every row by L (block-diagonal action).
inline Mat apply_block_diag(const Mat& slice, const Mat& L, size_t blocks, size_t dm) {
    const Field& F = slice.field();
    Mat out(F, slice.rows(), slice.cols());
    for (size_t r = 0; r < slice.rows(); ++r) {
        for (size_t b = 0; b < blocks; ++b) {
            for (size_t j = 0; j < dm; ++j) {
                fel c = slice.get(r, b * dm + j);
                if (!c) continue;
                for (size_t k = 0; k < dm; ++k) {
                    fel v = L.get(j, k);
                    if (v) out.set(r, b * dm + k, F.add(out.get(r, b * dm + k), F.mul(c, v)));
                }
            }
        }
    }
    return out;
}

}  // namespace cohom_detail

// dim M^G over the base field: {v : v*(M_g - I) = 0 for every generator}.
inline size_t h0_dim(const GModule& M, size_t enum_cap = Caps::global().element_enum) {
    (void)enum_cap;
    if (M.dim() == 0) return 0;
    const Field& F = M.field();
    size_t d = M.dim();
    if (M.num_gens() == 0) return d;
    Mat stack(F, d, M.num_gens() * d);  // horizontal stack of (M_g - I)
    for (size_t gi = 0; gi < M.num_gens(); ++gi)
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                fel v = M.gen_matrix(gi).get(i, j);
                stack.set(i, gi * d + j, F.sub(v, i == j ? 1 : 0));
            }
    return stack.kernel_left().rows();
}

// ---- degree 1: derivations by parameter propagation ---------------------------

struct Z1Data {
    size_t dim_z1 = 0;
    size_t params = 0;                  // |S'| * dim M
    std::vector<uint32_t> param_elems;  // generator element per block
    Mat z_basis;                        // rows: parameter vectors spanning Z^1
    std::vector<Mat> value;             // per element: params x dm matrix F_e with f(e) = P * F_e
};

inline Z1Data z1_solve(const GModule& M, size_t enum_cap = Caps::global().element_enum) {
    using namespace cohom_detail;
    Ctx c(M, enum_cap);
    Z1Data out;
    out.param_elems = c.sgen;
    size_t D = c.sgen.size() * c.dm;
    out.params = D;
    if (c.N <= 1 || c.dm == 0 || D == 0) {
        out.dim_z1 = 0;
        out.z_basis = Mat(*c.F, 0, D);
        return out;
    }
    LeftTree tree = left_tree(c);
    std::vector<Mat> F_e(c.N, Mat(*c.F, 0, 0));
    F_e[0] = Mat(*c.F, D, c.dm);  // f(1) = 0
    auto block_of = [&](uint32_t s) {
        for (size_t i = 0; i < c.sgen.size(); ++i)
            if (c.sgen[i] == s) return i;
        throw ComputeError("z1_solve: unknown generator");
    };
    // roots: f(s) = parameter block s
    for (uint32_t x : tree.order) {
        if (tree.is_root[x]) {
            Mat m(*c.F, D, c.dm);
            size_t b = block_of(x);
            for (size_t j = 0; j < c.dm; ++j) m.set(b * c.dm + j, j, 1);
            F_e[x] = std::move(m);
        } else {
            // x = s*w: f(x) = f(s) + s |> f(w) = F_s + F_w * left[s]
            uint32_t s = tree.via[x], w = tree.parent[x];
            F_e[x] = F_e[s] + F_e[w] * c.left[s];
        }
    }
    // constraints from non-tree edges: f(s*x) - f(s) - (s |> f(x)) = 0
    EchelonBasis cons(*c.F, D);
    for (uint32_t s : c.sgen) {
        for (uint32_t x = 1; x < c.N; ++x) {
            uint32_t sx = c.T->mult(s, x);
            if (sx != 0 && tree.via[sx] == s && tree.parent[sx] == x) continue;  // tree edge
            Mat R = F_e[sx] - F_e[s] - F_e[x] * c.left[s];
            for (size_t j = 0; j < c.dm; ++j) {
                std::vector<fel> col(D);
                bool nz = false;
                for (size_t r = 0; r < D; ++r) {
                    col[r] = R.get(r, j);
                    nz = nz || col[r];
                }
                if (nz) cons.insert_codes(col);
            }
        }
    }
    Mat consrows = cons.basis_matrix();
    out.z_basis = consrows.rows() ? consrows.kernel_right() : Mat::identity(*c.F, D);
    out.dim_z1 = out.z_basis.rows();
    out.value = std::move(F_e);
    return out;
}

inline size_t h1_dim_prop(const GModule& M, size_t enum_cap = Caps::global().element_enum) {
    if (M.dim() == 0 || M.group().order_u64() == 1) return 0;
    Z1Data z = z1_solve(M, enum_cap);
    size_t b1 = M.dim() - h0_dim(M, enum_cap);
    return z.dim_z1 - b1;
}

// ---- degree 2: slice propagation -----------------------------------------------

struct Z2Data {
    size_t dim_z2 = 0;
    size_t params = 0;  // |S'| * (N-1) * dm
    Mat z_basis;        // rows: parameter vectors spanning Z^2
    // f(x, y) for a parameter vector P: block y of P * slice[x]
    std::vector<Mat> slice;  // per element x: params x ((N-1)*dm)
};

inline Z2Data z2_solve(const GModule& M, size_t enum_cap = Caps::global().element_enum,
                       bool keep_slices = false) {
    using namespace cohom_detail;
    Ctx c(M, enum_cap);
    Z2Data out;
    size_t cols = (c.N - 1) * c.dm;  // slice coordinates: y in G\1 times module
    size_t D = c.sgen.size() * cols;
    out.params = D;
    if (c.N <= 1 || c.dm == 0 || D == 0) {
        out.z_basis = Mat(*c.F, 0, D);
        return out;
    }
    LeftTree tree = left_tree(c);
    auto block_of = [&](uint32_t s) {
        for (size_t i = 0; i < c.sgen.size(); ++i)
            if (c.sgen[i] == s) return i;
        throw ComputeError("z2_solve: unknown generator");
    };
    // parameter index for f(s, z)[j]: (block(s)*(N-1) + (z-1))*dm + j
    auto pidx = [&](uint32_t s, uint32_t z, size_t j) {
        return (block_of(s) * (c.N - 1) + (z - 1)) * c.dm + j;
    };

    std::vector<Mat> slice(c.N, Mat(*c.F, 0, 0));
    slice[0] = Mat(*c.F, D, cols);  // f(1, .) = 0
    // mult-table row scratch
    std::vector<uint32_t> wy(c.N);
    for (uint32_t x : tree.order) {
        if (tree.is_root[x]) {
            Mat m(*c.F, D, cols);
            for (uint32_t y = 1; y < c.N; ++y)
                for (size_t j = 0; j < c.dm; ++j) m.set(pidx(x, y, j), (y - 1) * c.dm + j, 1);
            slice[x] = std::move(m);
            continue;
        }
        uint32_t s = tree.via[x], w = tree.parent[x];
        // f(s*w, y) = s |> f(w, y) + f(s, w*y) - f(s, w)
        Mat m = apply_block_diag(slice[w], c.left[s], c.N - 1, c.dm);
        for (uint32_t y = 1; y < c.N; ++y) wy[y] = c.T->mult(w, y);
        for (uint32_t y = 1; y < c.N; ++y) {
            for (size_t j = 0; j < c.dm; ++j) {
                if (wy[y] != 0)
                    m.set(pidx(s, wy[y], j), (y - 1) * c.dm + j,
                          c.F->add(m.get(pidx(s, wy[y], j), (y - 1) * c.dm + j), 1));
                m.set(pidx(s, w, j), (y - 1) * c.dm + j,
                      c.F->sub(m.get(pidx(s, w, j), (y - 1) * c.dm + j), 1));
            }
        }
        slice[x] = std::move(m);
    }
    // consistency on non-tree edges
    EchelonBasis cons(*c.F, D);
    for (uint32_t s : c.sgen) {
        for (uint32_t x = 1; x < c.N; ++x) {
            uint32_t sx = c.T->mult(s, x);
            if (sx != 0 && tree.via[sx] == s && tree.parent[sx] == x) continue;
            Mat expect = apply_block_diag(slice[x], c.left[s], c.N - 1, c.dm);
            for (uint32_t y = 1; y < c.N; ++y) wy[y] = c.T->mult(x, y);
            for (uint32_t y = 1; y < c.N; ++y)
                for (size_t j = 0; j < c.dm; ++j) {
                    if (wy[y] != 0)
                        expect.set(pidx(s, wy[y], j), (y - 1) * c.dm + j,
                                   c.F->add(expect.get(pidx(s, wy[y], j), (y - 1) * c.dm + j), 1));
                    expect.set(pidx(s, x, j), (y - 1) * c.dm + j,
                               c.F->sub(expect.get(pidx(s, x, j), (y - 1) * c.dm + j), 1));
                }
            Mat R = expect - slice[sx];
            for (size_t col = 0; col < cols; ++col) {
                std::vector<fel> cv(D);
                bool nz = false;
                for (size_t r = 0; r < D; ++r) {
                    cv[r] = R.get(r, col);
                    nz = nz || cv[r];
                }
                if (nz) cons.insert_codes(cv);
            }
        }
    }
    Mat consrows = cons.basis_matrix();
    out.z_basis = consrows.rows() ? consrows.kernel_right() : Mat::identity(*c.F, D);
    out.dim_z2 = out.z_basis.rows();
    if (keep_slices) out.slice = std::move(slice);
    return out;
}

inline size_t h2_dim_prop(const GModule& M, size_t enum_cap = Caps::global().element_enum) {
    if (M.dim() == 0 || M.group().order_u64() == 1) return 0;
    Z2Data z2 = z2_solve(M, enum_cap);
    Z1Data z1 = z1_solve(M, enum_cap);
    size_t N = M.group().elements().size();
    size_t c1 = (N - 1) * M.dim();
    size_t b2 = c1 - z1.dim_z1;
    return z2.dim_z2 - b2;
}

// ---- explicit sparse coboundary engine (small-group oracle) --------------------

// Normalized cochain index: tuples over G\1 (element index minus one), then
// the module coordinate.
inline size_t cochain_dim(size_t N, size_t dm, size_t degree) {
    size_t d = dm;
    for (size_t i = 0; i < degree; ++i) d *= (N - 1);
    return d;
}

// Full coboundary d^n : C^n -> C^(n+1) as a sparse matrix (rows = C^(n+1)
// coordinates, cols = C^n coordinates). Intended for small groups.
inline SparseMat coboundary_matrix(const GModule& M, size_t degree,
                                   size_t enum_cap = Caps::global().element_enum) {
    using namespace cohom_detail;
    Ctx c(M, enum_cap);
    size_t n = degree;
    size_t in_dim = cochain_dim(c.N, c.dm, n);
    size_t out_dim = cochain_dim(c.N, c.dm, n + 1);
    SparseMat d(*c.F, out_dim, in_dim);
    // iterate over all (n+1)-tuples of nontrivial elements
    std::vector<uint32_t> t(n + 1, 1);
    auto tuple_index = [&](const std::vector<uint32_t>& tup, size_t from, size_t count) {
        size_t idx = 0;
        for (size_t i = from; i < from + count; ++i) idx = idx * (c.N - 1) + (tup[i] - 1);
        return idx;
    };
    for (;;) {
        size_t row_base = tuple_index(t, 0, n + 1) * c.dm;
        // term 0: g_0 |> f(g_1..g_n)
        {
            size_t col_base = tuple_index(t, 1, n) * c.dm;
            const Mat& L = c.left[t[0]];
            for (size_t j = 0; j < c.dm; ++j)
                for (size_t k = 0; k < c.dm; ++k) {
                    fel v = L.get(j, k);  // f-coordinate j contributes to value k
                    if (v) d.add(row_base + k, col_base + j, v);
                }
        }
        // terms i = 1..n: (-1)^i f(..., g_(i-1) g_i, ...)
        fel sign = c.F->neg(1);
        for (size_t i = 1; i <= n; ++i) {
            uint32_t merged = c.T->mult(t[i - 1], t[i]);
            if (merged != 0) {
                std::vector<uint32_t> tup;
                for (size_t k = 0; k < n + 1; ++k) {
                    if (k == i - 1) tup.push_back(merged);
                    else if (k != i) tup.push_back(t[k]);
                }
                size_t col_base = tuple_index(tup, 0, n) * c.dm;
                for (size_t j = 0; j < c.dm; ++j) d.add(row_base + j, col_base + j, sign);
            }
            sign = c.F->neg(sign);
        }
        // last term: (-1)^(n+1) f(g_0..g_(n-1))
        {
            size_t col_base = tuple_index(t, 0, n) * c.dm;
            for (size_t j = 0; j < c.dm; ++j) d.add(row_base + j, col_base + j, sign);
        }
        // next tuple
        size_t pos = 0;
        while (pos < n + 1) {
            if (++t[pos] < c.N) break;
            t[pos] = 1;
            ++pos;
        }
        if (pos == n + 1) break;
    }
    return d;
}

// Generator-restricted constraint matrix for ker d^n: rows only for tuples
// whose first entry is a generator. Same kernel as the full coboundary.
inline SparseMat coboundary_matrix_restricted(const GModule& M, size_t degree,
                                              size_t enum_cap = Caps::global().element_enum) {
    using namespace cohom_detail;
    Ctx c(M, enum_cap);
    size_t n = degree;
    size_t in_dim = cochain_dim(c.N, c.dm, n);
    size_t tuples = 1;
    for (size_t i = 0; i < n; ++i) tuples *= (c.N - 1);
    size_t rows = c.sgen.size() * tuples * c.dm;
    SparseMat d(*c.F, rows, in_dim);
    std::vector<uint32_t> t(n + 1, 1);
    auto tuple_index = [&](const std::vector<uint32_t>& tup, size_t from, size_t count) {
        size_t idx = 0;
        for (size_t i = from; i < from + count; ++i) idx = idx * (c.N - 1) + (tup[i] - 1);
        return idx;
    };
    for (size_t si = 0; si < c.sgen.size(); ++si) {
        t[0] = c.sgen[si];
        std::vector<uint32_t> rest(n, 1);
        for (;;) {
            for (size_t i = 0; i < n; ++i) t[i + 1] = rest[i];
            size_t row_base = (si * tuples + tuple_index(t, 1, n)) * c.dm;
            {
                size_t col_base = tuple_index(t, 1, n) * c.dm;
                const Mat& L = c.left[t[0]];
                for (size_t j = 0; j < c.dm; ++j)
                    for (size_t k = 0; k < c.dm; ++k) {
                        fel v = L.get(j, k);
                        if (v) d.add(row_base + k, col_base + j, v);
                    }
            }
            fel sign = c.F->neg(1);
            for (size_t i = 1; i <= n; ++i) {
                uint32_t merged = c.T->mult(t[i - 1], t[i]);
                if (merged != 0) {
                    std::vector<uint32_t> tup;
                    for (size_t k = 0; k < n + 1; ++k) {
                        if (k == i - 1) tup.push_back(merged);
                        else if (k != i) tup.push_back(t[k]);
                    }
                    size_t col_base = tuple_index(tup, 0, n) * c.dm;
                    for (size_t j = 0; j < c.dm; ++j) d.add(row_base + j, col_base + j, sign);
                }
                sign = c.F->neg(sign);
            }
            {
                size_t col_base = tuple_index(t, 0, n) * c.dm;
                for (size_t j = 0; j < c.dm; ++j) d.add(row_base + j, col_base + j, sign);
            }
            if (n == 0) break;
            size_t pos = 0;
            while (pos < n) {
                if (++rest[pos] < c.N) break;
                rest[pos] = 1;
                ++pos;
            }
            if (pos == n) break;
        }
    }
    return d;
}

// h^n via explicit sparse ranks; the oracle path for small groups.
// rank(d^(n-1)) is computed on the full coboundary, rank(d^n) on the
// generator-restricted rows (same kernel, fewer rows).
inline size_t h_dim_explicit(const GModule& M, size_t n,
                             size_t enum_cap = Caps::global().element_enum) {
    if (M.dim() == 0 || M.group().order_u64() == 1) return n == 0 ? M.dim() : 0;
    if (n == 0) return h0_dim(M, enum_cap);
    size_t N = M.group().elements(enum_cap).size();
    size_t cn = cochain_dim(N, M.dim(), n);
    SparseMat dn = coboundary_matrix_restricted(M, n, enum_cap);
    size_t zn = cn - dn.rank();
    size_t rank_prev =
        n == 1 ? M.dim() - h0_dim(M, enum_cap) : coboundary_matrix(M, n - 1, enum_cap).rank();
    return zn - rank_prev;
}

// ---- the public h_dim -----------------------------------------------------------

// Base-field dimension of H^n(G, M) for n in {0,1,2}.
inline size_t h_dim(const GModule& M, size_t n, size_t bar_cap = Caps::global().bar_columns,
                    size_t enum_cap = Caps::global().element_enum) {
    if (n > 2) throw std::invalid_argument("h_dim: bar path only covers degrees 0..2");
    if (M.dim() == 0 || M.group().order_u64() == 1) return n == 0 ? M.dim() : 0;
    size_t N = M.group().elements(enum_cap).size();
    double cols = std::pow(static_cast<double>(N - 1), static_cast<double>(n)) * M.dim();
    if (cols > static_cast<double>(bar_cap)) throw CapExceeded("h_dim: bar cap exceeded");
    if (n == 0) return h0_dim(M, enum_cap);
    if (n == 1) return h1_dim_prop(M, enum_cap);
    return h2_dim_prop(M, enum_cap);
}

// |H^n| = q^h_dim as the module order the growth sums use.
inline BigInt h_order(const GModule& M, size_t n) {
    return BigInt::pow(BigInt(M.field().q()), h_dim(M, n));
}

// ---- derived quantities ----------------------------------------------------------

// h'_G(M): h^1 of the induced faithful module over G/C_G(M), in base-field
// dimensions.
inline size_t h_prime_dim(const GModule& M, size_t enum_cap = Caps::global().element_enum) {
    if (M.dim() == 0) return 0;
    FaithfulQuotient fq = faithful_quotient(M, enum_cap);
    return h_dim(fq.module, 1);
}

struct H1Decomposition {
    size_t h1;       // dim over End_G(M)
    size_t delta;    // non-Frattini chief factor count
    size_t h_prime;  // dim over End_G(M)
    uint32_t endo_degree;
    bool consistent;  // h1 == delta + h_prime
};

// The h^1 = delta + h' decomposition for an irreducible module M. All three
// numbers are dimensions over End_G(M), so base-field dims are divided by f.
inline H1Decomposition h1_decomposition(const PermGroup& G, const GModule& M, uint64_t seed = 2024) {
    unsigned long long qm = endo_size(M, seed);
    uint32_t f = 0;
    unsigned long long t = qm;
    while (t > 1) { t /= M.field().q(); ++f; }
    size_t h1b = h_dim(M, 1);
    size_t hpb = h_prime_dim(M);
    if (h1b % f || hpb % f) throw ComputeError("h1_decomposition: dimension not divisible by endo degree");
    H1Decomposition out;
    out.endo_degree = f;
    out.h1 = h1b / f;
    out.h_prime = hpb / f;
    out.delta = delta(G, M, seed);
    out.consistent = out.h1 == out.delta + out.h_prime;
    return out;
}

// Schur-multiplier p-rank of a perfect group: dim H^2(G, F_p).
inline size_t schur_p_rank(const PermGroup& G, uint32_t p) {
    if (!G.is_perfect()) throw std::invalid_argument("schur_p_rank: group is not perfect");
    return h_dim(trivial_module(G, Field::get(p)), 2);
}

// Growth table: per irreducible-class order k, the sum of (|H^m| - 1), the
// count of classes with nonzero H^m, and the class labels involved.
struct GrowthTable {
    uint32_t prime = 0;
    size_t degree = 0;
    struct Row {
        BigInt sum;
        size_t nonzero = 0;
        size_t total = 0;
        std::vector<std::string> nonzero_labels;
    };
    std::map<std::string, Row> rows;  // key: decimal order
};

inline GrowthTable growth_sums(const PermGroup& G, uint32_t p, size_t degree, const IrrCensus& census) {
    (void)G;  // the census already carries the group action
    GrowthTable table;
    table.prime = p;
    table.degree = degree;
    for (const IrrClass& c : census.classes) {
        std::string key = c.order().str();
        auto& row = table.rows[key];
        ++row.total;
        size_t h = h_dim(c.module, degree);
        if (h > 0) {
            ++row.nonzero;
            row.nonzero_labels.push_back(c.label);
            row.sum += BigInt::pow(BigInt(c.module.field().q()), h) - BigInt(1);
        }
    }
    return table;
}

// Per-class dim H^2 / dim M report (base-field dims), with the maximum ratio.
struct H2RatioReport {
    struct Entry {
        std::string label;
        size_t dim, h2;
    };
    std::vector<Entry> entries;
    // max ratio as a fraction h2/dim
    size_t max_h2 = 0, max_dim = 1;
    bool ratio_at_most(size_t bound) const {
        for (const auto& e : entries)
            if (e.h2 > bound * e.dim) return false;
        return true;
    }
};

inline H2RatioReport h2_ratio_report(const PermGroup& G, const IrrCensus& census, size_t max_dim = SIZE_MAX) {
    (void)G;
    H2RatioReport rep;
    for (const IrrClass& c : census.classes) {
        if (c.module.dim() > max_dim) continue;
        size_t h2 = h_dim(c.module, 2);
        rep.entries.push_back({c.label, c.module.dim(), h2});
        // track the max of h2/dim as a fraction
        if (rep.entries.size() == 1 || h2 * rep.max_dim > rep.max_h2 * c.module.dim()) {
            rep.max_h2 = h2;
            rep.max_dim = c.module.dim();
        }
    }
    return rep;
}

// ---- 2-cocycles and extensions ---------------------------------------------------

// Dense table of a normalized 2-cocycle: f[(x-1)*(N-1)+(y-1)] in M.
struct Cocycle2 {
    const GModule* M;
    std::vector<std::vector<fel>> table;  // (N-1)^2 entries

    const std::vector<fel>& at(uint32_t x, uint32_t y, size_t N) const {
        return table[(x - 1) * (N - 1) + (y - 1)];
    }
};

// Check the 2-cocycle identity on generator-led triples (equivalent to the
// full identity for normalized cochains).
inline bool is_2cocycle(const GModule& M, const Cocycle2& f, size_t enum_cap = Caps::global().element_enum) {
    using namespace cohom_detail;
    Ctx c(M, enum_cap);
    std::vector<fel> zero(c.dm, 0);
    auto val = [&](uint32_t x, uint32_t y) -> std::vector<fel> {
        if (x == 0 || y == 0) return zero;
        return f.table[(x - 1) * (c.N - 1) + (y - 1)];
    };
    for (uint32_t s : c.sgen)
        for (uint32_t x = 1; x < c.N; ++x)
            for (uint32_t y = 1; y < c.N; ++y) {
                // s|>f(x,y) - f(sx,y) + f(s,xy) - f(s,x) = 0
                std::vector<fel> acc = c.left[s].apply_row(val(x, y));
                std::vector<fel> t1 = val(c.T->mult(s, x), y);
                std::vector<fel> t2 = val(s, c.T->mult(x, y));
                std::vector<fel> t3 = val(s, x);
                for (size_t j = 0; j < c.dm; ++j) {
                    fel v = c.F->add(c.F->sub(acc[j], t1[j]), c.F->sub(t2[j], t3[j]));
                    if (v) return false;
                }
            }
    return true;
}

// Materialize the cocycle table for a parameter vector from z2_solve.
inline Cocycle2 cocycle_from_params(const GModule& M, const Z2Data& z2, const std::vector<fel>& P,
                                    size_t enum_cap = Caps::global().element_enum) {
    const ElementTable& T = M.group().elements(enum_cap);
    size_t N = T.size(), dm = M.dim();
    Cocycle2 f;
    f.M = &M;
    f.table.assign((N - 1) * (N - 1), std::vector<fel>(dm, 0));
    const Field& F = M.field();
    for (uint32_t x = 1; x < N; ++x) {
        const Mat& S = z2.slice[x];
        // row vector P times S
        Mat acc(F, 1, S.cols());
        for (size_t r = 0; r < S.rows(); ++r)
            if (P[r]) acc.row_axpy(0, S, r, P[r]);
        for (uint32_t y = 1; y < N; ++y)
            for (size_t j = 0; j < dm; ++j) f.table[(x - 1) * (N - 1) + (y - 1)][j] = acc.get(0, (y - 1) * dm + j);
    }
    return f;
}

// Is f a coboundary? Solve d^1 u = f.
inline bool is_coboundary(const GModule& M, const Cocycle2& f, size_t enum_cap = Caps::global().element_enum) {
    const ElementTable& T = M.group().elements(enum_cap);
    size_t N = T.size(), dm = M.dim();
    SparseMat d1 = coboundary_matrix(M, 1, enum_cap);
    std::vector<fel> rhs(cochain_dim(N, dm, 2), 0);
    for (uint32_t x = 1; x < N; ++x)
        for (uint32_t y = 1; y < N; ++y)
            for (size_t j = 0; j < dm; ++j)
                rhs[((x - 1) * (N - 1) + (y - 1)) * dm + j] = f.table[(x - 1) * (N - 1) + (y - 1)][j];
    Mat dd = d1.to_dense();
    return dd.solve_right(rhs).has_value();
}

// A 2-cocycle representing a nonzero class, if one exists.
inline std::optional<Cocycle2> nontrivial_cocycle(const GModule& M,
                                                  size_t enum_cap = Caps::global().element_enum) {
    Z2Data z2 = z2_solve(M, enum_cap, /*keep_slices=*/true);
    for (size_t r = 0; r < z2.z_basis.rows(); ++r) {
        Cocycle2 f = cocycle_from_params(M, z2, z2.z_basis.row_codes(r), enum_cap);
        if (!is_coboundary(M, f, enum_cap)) return f;
    }
    return std::nullopt;
}

// The extension group on pairs (m, g) with multiplication
// (m1, g1)(m2, g2) = (m1 + g1|>m2 + f(g1,g2), g1 g2), as a permutation group
// via its right regular action. Also decides splitness by enumerating
// homomorphic sections over generator values.
struct ExtensionResult {
    PermGroup E;
    bool split;
};

inline ExtensionResult extension_from_cocycle(const GModule& M, const Cocycle2& f,
                                              size_t order_cap = Caps::global().extension_order) {
    using namespace cohom_detail;
    Ctx c(M, Caps::global().element_enum);
    if (!is_2cocycle(M, f)) throw std::invalid_argument("extension_from_cocycle: not a 2-cocycle");
    const Field& F = *c.F;
    uint64_t msize = 1;
    for (size_t i = 0; i < c.dm; ++i) msize *= F.q();
    uint64_t esize = msize * c.N;
    if (esize > order_cap) throw CapExceeded("extension_from_cocycle: |G|*|M| over cap");

    auto mindex = [&](const std::vector<fel>& v) {
        uint64_t idx = 0;
        for (size_t i = c.dm; i-- > 0;) idx = idx * F.q() + v[i];
        return idx;
    };
    auto munrank = [&](uint64_t idx) {
        std::vector<fel> v(c.dm);
        for (size_t i = 0; i < c.dm; ++i) { v[i] = static_cast<fel>(idx % F.q()); idx /= F.q(); }
        return v;
    };
    std::vector<fel> zero(c.dm, 0);
    auto fval = [&](uint32_t g, uint32_t h) -> const std::vector<fel>& {
        if (g == 0 || h == 0) return zero;
        return f.table[(g - 1) * (c.N - 1) + (h - 1)];
    };
    auto pair_index = [&](uint64_t m, uint32_t g) { return g * msize + m; };

    // right multiplication by (m2, g2): (m1,g1) -> (m1 + g1|>m2 + f(g1,g2), g1 g2)
    auto rmul_perm = [&](const std::vector<fel>& m2, uint32_t g2) {
        std::vector<uint32_t> img(esize);
        for (uint32_t g1 = 0; g1 < c.N; ++g1) {
            std::vector<fel> g1m2 = c.left[g1].apply_row(m2);
            const std::vector<fel>& fv = fval(g1, g2);
            for (uint64_t m1i = 0; m1i < msize; ++m1i) {
                std::vector<fel> m1 = munrank(m1i);
                for (size_t j = 0; j < c.dm; ++j) m1[j] = F.add(m1[j], F.add(g1m2[j], fv[j]));
                img[pair_index(m1i, g1)] = static_cast<uint32_t>(pair_index(mindex(m1), c.T->mult(g1, g2)));
            }
        }
        return Perm(img);
    };

    std::vector<Perm> gens;
    for (uint32_t s : c.sgen) gens.push_back(rmul_perm(zero, s));
    for (size_t j = 0; j < c.dm; ++j) {
        std::vector<fel> e(c.dm, 0);
        e[j] = 1;
        gens.push_back(rmul_perm(e, 0));
    }
    PermGroup E(esize, gens, "ext");

    // split iff some homomorphic section exists: enumerate section values on
    // the generators and propagate along the right-multiplication BFS.
    bool split = false;
    uint64_t combos = 1;
    bool enumerable = true;
    for (size_t i = 0; i < c.sgen.size() && enumerable; ++i) {
        combos *= msize;
        if (combos > (1ull << 16)) enumerable = false;
    }
    if (!enumerable) throw CapExceeded("extension_from_cocycle: section search too large");
    for (uint64_t t = 0; t < combos && !split; ++t) {
        // candidate m_s per generator
        std::vector<std::vector<fel>> msec(c.N);
        std::vector<bool> have(c.N, false);
        msec[0] = zero;
        have[0] = true;
        uint64_t v = t;
        bool consistent = true;
        std::vector<std::vector<fel>> gensec(c.sgen.size());
        for (size_t i = 0; i < c.sgen.size(); ++i) { gensec[i] = munrank(v % msize); v /= msize; }
        // propagate: m_(w s) = m_w + w|>m_s + f(w, s)
        // walk elements in table BFS order (right multiplication words)
        for (uint32_t e = 0; e < c.N && consistent; ++e) {
            if (!have[e]) { consistent = false; break; }
            for (size_t gi = 0; gi < c.sgen.size(); ++gi) {
                uint32_t s = c.sgen[gi];
                uint32_t es = c.T->mult(e, s);
                std::vector<fel> val = c.left[e].apply_row(gensec[gi]);
                const std::vector<fel>& fv = fval(e, s);
                for (size_t j = 0; j < c.dm; ++j) val[j] = F.add(F.add(val[j], msec[e][j]), fv[j]);
                if (!have[es]) {
                    msec[es] = val;
                    have[es] = true;
                } else if (msec[es] != val) {
                    consistent = false;
                    break;
                }
            }
        }
        // BFS order caveat: table order guarantees parents precede children
        if (consistent) {
            // verify every element got a value (generators generate G)
            bool all = true;
            for (uint32_t e = 0; e < c.N; ++e) all = all && have[e];
            split = all;
        }
    }
    return ExtensionResult{std::move(E), split};
}

}  // namespace progen
