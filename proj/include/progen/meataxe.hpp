// Module decomposition machinery: polynomial arithmetic and factorization
// over F_q, Krylov minimal polynomials, chop (composition factors) with the
// Norton irreducibility certificate, isomorphism testing by standard bases,
// and endomorphism fields of irreducibles.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "progen/gmodule.hpp"

namespace progen {

// Polynomials over F_q: coefficient vector c0..cd with no trailing zeros.
using Poly = std::vector<fel>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline Poly poly_x() { return {0, 1}; }

inline Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

inline void poly_divmod(const Field& F, Poly a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    fel lead_inv = F.inv(b.back());
    while (a.size() >= b.size()) {
        fel c = F.mul(a.back(), lead_inv);
        size_t off = a.size() - b.size();
        if (c) {
            q[off] = c;
            for (size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(c, b[i]));
        }
        a.pop_back();
    }
    poly_trim(a);
    poly_trim(q);
    r = std::move(a);
}

inline Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(F, a, b, q, r);
    return r;
}
inline Poly poly_div(const Field& F, const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(F, a, b, q, r);
    return q;
}

inline Poly poly_make_monic(const Field& F, Poly p) {
    poly_trim(p);
    if (p.empty() || p.back() == 1) return p;
    fel inv = F.inv(p.back());
    for (fel& c : p) c = F.mul(c, inv);
    return p;
}

inline Poly poly_gcd(const Field& F, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(F, std::move(a));
}

inline Poly poly_derivative(const Field& F, const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(F.mul(p[i], F.from_int(i)));
    poly_trim(d);
    return d;
}

inline Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
    return poly_mod(F, poly_mul(F, a, b), m);
}

// base^e mod m with a 64-bit exponent.
inline Poly poly_powmod(const Field& F, Poly base, unsigned long long e, const Poly& m) {
    Poly r{1};
    base = poly_mod(F, base, m);
    while (e) {
        if (e & 1) r = poly_mulmod(F, r, base, m);
        base = poly_mulmod(F, base, base, m);
        e >>= 1;
    }
    return r;
}

// base^e mod m with a big exponent.
inline Poly poly_powmod_big(const Field& F, Poly base, BigInt e, const Poly& m) {
    Poly r{1};
    base = poly_mod(F, base, m);
    BigInt two(2), q, rem;
    while (!e.is_zero()) {
        BigInt::divmod(e, two, q, rem);
        if (!rem.is_zero()) r = poly_mulmod(F, r, base, m);
        base = poly_mulmod(F, base, base, m);
        e = q;
    }
    return r;
}

namespace detail {

// Equal-degree splitting (Cantor-Zassenhaus; trace method in char 2).
inline void edf(const Field& F, const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    if (poly_deg(f) == d) {
        out.push_back(poly_make_monic(F, f));
        return;
    }
    const uint32_t q = F.q();
    for (int attempt = 0; attempt < 200; ++attempt) {
        Poly r(static_cast<size_t>(poly_deg(f)), 0);
        for (fel& c : r) c = static_cast<fel>(rng.below(q));
        poly_trim(r);
        if (r.empty()) continue;
        Poly s;
        if (F.p() == 2) {
            // trace map sum r^(2^i), i < d*e
            Poly acc = poly_mod(F, r, f), term = acc;
            uint32_t steps = static_cast<uint32_t>(d) * F.e();
            for (uint32_t i = 1; i < steps; ++i) {
                term = poly_mulmod(F, term, term, f);
                // acc += term
                if (acc.size() < term.size()) acc.resize(term.size(), 0);
                for (size_t k = 0; k < term.size(); ++k) acc[k] = F.add(acc[k], term[k]);
                poly_trim(acc);
            }
            s = acc;
        } else {
            BigInt e = (BigInt::pow(BigInt(q), static_cast<unsigned long long>(d)) - BigInt(1)) / BigInt(2);
            s = poly_powmod_big(F, r, e, f);
            if (!s.empty()) s[0] = F.sub(s[0], 1);  // s - 1
            else s = Poly{F.neg(1)};
            poly_trim(s);
        }
        if (s.empty()) continue;
        Poly g = poly_gcd(F, s, f);
        if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(f)) {
            edf(F, g, d, rng, out);
            edf(F, poly_div(F, f, g), d, rng, out);
            return;
        }
    }
    throw ComputeError("edf: equal-degree splitting failed within retry budget");
}

}  // namespace detail

// Distinct irreducible factors of f with degree <= degree_cap, in ascending
// (degree, lex) order. Multiplicities are dropped. If stop_at_first is set,
// returns as soon as one factor is known.
namespace detail {

// Radical: the product of the distinct monic irreducible factors.
inline Poly poly_radical(const Field& F, Poly f) {
    f = poly_make_monic(F, f);
    if (poly_deg(f) <= 1) return f;
    Poly d = poly_derivative(F, f);
    if (d.empty()) {
        // f = h(x^p): take the p-th root coefficientwise (c -> c^(q/p))
        uint32_t p = F.p();
        Poly root;
        for (size_t i = 0; i < f.size(); i += p) root.push_back(F.pow(f[i], F.q() / p));
        return poly_radical(F, std::move(root));
    }
    Poly g = poly_gcd(F, f, d);
    if (poly_deg(g) < 1) return f;  // squarefree
    // every irreducible factor divides f/g or g; merge the two radicals
    Poly a = poly_radical(F, poly_div(F, f, g));
    Poly b = poly_radical(F, g);
    Poly gc = poly_gcd(F, a, b);
    return poly_make_monic(F, poly_div(F, poly_mul(F, a, b), gc));
}

}  // namespace detail

inline std::vector<Poly> poly_distinct_factors(const Field& F, Poly f, int degree_cap, Rng& rng,
                                               bool stop_at_first = false) {
    std::vector<Poly> out;
    poly_trim(f);
    if (poly_deg(f) < 1) return out;
    f = detail::poly_radical(F, std::move(f));
    if (poly_deg(f) < 1) return out;

    // distinct-degree factorization with early exit
    Poly x = poly_x();
    Poly h = x;
    const uint32_t q = F.q();
    for (int d = 1; poly_deg(f) >= 1 && d <= degree_cap; ++d) {
        if (2 * d > poly_deg(f)) {
            out.push_back(poly_make_monic(F, f));
            break;
        }
        h = poly_powmod(F, h, q, f);  // x^(q^d) mod f
        Poly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        poly_trim(hx);
        Poly g = poly_gcd(F, hx, f);
        if (poly_deg(g) >= 1) {
            detail::edf(F, g, d, rng, out);
            f = poly_div(F, f, g);
            h = poly_mod(F, h, f);
            if (stop_at_first) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- Krylov minimal polynomials ---------------------------------------------

// Monic p of least degree with v * p(theta) = 0 (row-vector action). If
// krylov_out is given it receives v, v*theta, ..., v*theta^(deg-1).
inline Poly local_minpoly(const Mat& theta, const std::vector<fel>& v,
                          std::vector<std::vector<fel>>* krylov_out = nullptr) {
    const Field& F = theta.field();
    size_t n = theta.cols();
    EchelonBasis eb(F, n, n + 1);
    std::vector<fel> cur = v;
    if (krylov_out) krylov_out->clear();
    for (size_t k = 0; k <= n; ++k) {
        Mat scratch(F, 1, n), aug(F, 1, n + 1);
        scratch.set_row(0, cur);
        aug.set(0, k, 1);
        if (!eb.insert(scratch, 0, &aug, 0)) {
            Poly p = aug.row_codes(0);
            p.resize(k + 1);
            poly_trim(p);
            return p;
        }
        if (krylov_out) krylov_out->push_back(cur);
        cur = theta.apply_row(cur);
    }
    throw ComputeError("local_minpoly: no relation found (should be impossible)");
}

// Minimal polynomial of theta: lcm of local minimal polynomials at the
// standard basis vectors.
inline Poly minpoly(const Mat& theta) {
    const Field& F = theta.field();
    size_t n = theta.cols();
    Poly m{1};
    for (size_t i = 0; i < n; ++i) {
        std::vector<fel> e(n, 0);
        e[i] = 1;
        Poly p = local_minpoly(theta, e);
        Poly g = poly_gcd(F, m, p);
        m = poly_div(F, poly_mul(F, m, p), g);
        if (poly_deg(m) == static_cast<int>(n)) break;
    }
    return poly_make_monic(F, m);
}

// p(theta) by Horner.
inline Mat poly_eval_matrix(const Field& F, const Poly& p, const Mat& theta) {
    size_t n = theta.rows();
    Mat acc(F, n, n);
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * theta;
        for (size_t r = 0; r < n; ++r) acc.set(r, r, F.add(acc.get(r, r), p[i]));
    }
    return acc;
}

// Closure of seed rows under right multiplication by the given matrices.
inline Mat spin_matrices(const Field& F, size_t dim, const std::vector<const Mat*>& mats,
                         const std::vector<std::vector<fel>>& seeds) {
    EchelonBasis eb(F, dim);
    std::vector<std::vector<fel>> queue;
    for (const auto& s : seeds)
        if (eb.insert_codes(s)) queue.push_back(s);
    for (size_t i = 0; i < queue.size() && eb.size() < dim; ++i)
        for (const Mat* m : mats) {
            std::vector<fel> img = m->apply_row(queue[i]);
            if (eb.insert_codes(img)) queue.push_back(std::move(img));
        }
    return eb.basis_matrix();
}

// ---- chop --------------------------------------------------------------------

namespace detail {

struct SplitAttempt {
    bool split = false;
    bool certified_irreducible = false;
    Mat basis;  // proper nonzero invariant subspace when split
    SplitAttempt() : basis(Field::get(2), 0, 0) {}
};

// Enumerate nonzero vectors of a rowspace given by its basis rows.
template <typename Fn>
inline bool for_each_nonzero_combination(const Field& F, const Mat& basis, Fn fn) {
    size_t k = basis.rows();
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) {
        total *= F.q();
        if (total > (1ull << 20)) throw ComputeError("nullspace enumeration too large");
    }
    std::vector<fel> coef(k, 0);
    for (uint64_t t = 1; t < total; ++t) {
        uint64_t v = t;
        for (size_t i = 0; i < k; ++i) { coef[i] = static_cast<fel>(v % F.q()); v /= F.q(); }
        Mat acc(F, 1, basis.cols());
        for (size_t i = 0; i < k; ++i)
            if (coef[i]) acc.row_axpy(0, basis, i, coef[i]);
        if (!fn(acc.row_codes(0))) return false;
    }
    return true;
}

inline SplitAttempt try_split(const GModule& M, Rng& rng, size_t norton_dim_cap) {
    SplitAttempt res;
    const Field& F = M.field();
    size_t n = M.dim();
    std::vector<const Mat*> mats, tmats_ptr;
    for (size_t gi = 0; gi < M.num_gens(); ++gi) mats.push_back(&M.gen_matrix(gi));

    Mat theta = M.random_algebra_element(rng);
    std::vector<fel> v(n, 0);
    for (fel& c : v) c = static_cast<fel>(rng.below(F.q()));
    bool nz = false;
    for (fel c : v) nz = nz || c;
    if (!nz) v[rng.below(n)] = 1;

    std::vector<std::vector<fel>> krylov;
    Poly ploc = local_minpoly(theta, v, &krylov);
    std::vector<Poly> factors = poly_distinct_factors(F, ploc, 64, rng);
    if (factors.empty()) return res;

    // Kernel-vector splitting: w = v * (ploc/p)(theta) lies in ker p(theta).
    for (const Poly& p : factors) {
        Poly cof = poly_div(F, ploc, p);
        std::vector<fel> w(n, 0);
        Mat acc(F, 1, n);
        Mat scratch(F, 1, n);
        for (size_t i = 0; i < cof.size() && i < krylov.size(); ++i) {
            if (!cof[i]) continue;
            scratch.set_row(0, krylov[i]);
            acc.row_axpy(0, scratch, 0, cof[i]);
        }
        w = acc.row_codes(0);
        bool wz = true;
        for (fel c : w) wz = wz && !c;
        if (wz) continue;
        Mat W = spin_matrices(F, n, mats, {w});
        if (W.rows() > 0 && W.rows() < n) {
            res.split = true;
            res.basis = W;
            return res;
        }
    }

    // Norton certification on the smallest-degree factor with computable
    // kernels. Any failure to certify just means "try another element".
    if (n > norton_dim_cap) return res;
    std::vector<Mat> tmats;
    for (size_t gi = 0; gi < M.num_gens(); ++gi) tmats.push_back(M.gen_matrix(gi).transpose());
    for (const Mat& m : tmats) tmats_ptr.push_back(&m);
    for (const Poly& p : factors) {
        Mat z = poly_eval_matrix(F, p, theta);
        Mat nrow = z.kernel_left();   // {v : v z = 0}
        Mat ncol = z.kernel_right();  // {x : z x = 0}, rows are transposed columns
        size_t nullity = nrow.rows();
        if (nullity == 0) continue;
        auto spin_row_full = [&](const std::vector<fel>& seed) {
            Mat W = spin_matrices(F, n, mats, {seed});
            if (W.rows() < n) {
                res.split = true;
                res.basis = W;
                return false;
            }
            return true;
        };
        auto spin_col_full = [&](const std::vector<fel>& seed) {
            Mat U = spin_matrices(F, n, tmats_ptr, {seed});
            if (U.rows() < n) {
                res.split = true;
                res.basis = U.kernel_right();  // perp of the column-invariant space
                return false;
            }
            return true;
        };
        if (nullity == static_cast<size_t>(poly_deg(p))) {
            if (!spin_row_full(nrow.row_codes(0))) return res;
            if (!spin_col_full(ncol.row_codes(0))) return res;
            res.certified_irreducible = true;
            return res;
        }
        double count = std::pow(static_cast<double>(F.q()), static_cast<double>(nullity));
        if (count <= 4096.0) {
            bool all_full = for_each_nonzero_combination(F, nrow, spin_row_full);
            if (res.split) return res;
            if (all_full) {
                all_full = for_each_nonzero_combination(F, ncol, spin_col_full);
                if (res.split) return res;
                if (all_full) {
                    res.certified_irreducible = true;
                    return res;
                }
            }
        }
    }
    return res;
}

inline void chop_rec(const GModule& M, std::vector<GModule>& out, Rng& rng, size_t norton_dim_cap,
                     int budget) {
    if (M.dim() == 0) return;
    if (M.dim() == 1) {
        out.push_back(M);
        return;
    }
    for (int attempt = 0; attempt < budget; ++attempt) {
        SplitAttempt sa = try_split(M, rng, norton_dim_cap);
        if (sa.certified_irreducible) {
            out.push_back(M);
            return;
        }
        if (sa.split) {
            GModule sub = submodule(M, sa.basis);
            GModule quo = quotient_module(M, sa.basis);
            chop_rec(sub, out, rng, norton_dim_cap, budget);
            chop_rec(quo, out, rng, norton_dim_cap, budget);
            return;
        }
    }
    throw ComputeError("chop: failed to split or certify within retry budget");
}

}  // namespace detail

// Composition factors with multiplicity (as repeats), deterministic for a
// fixed seed. Order: recursion order (submodule side first).
inline std::vector<GModule> chop(const GModule& M, uint64_t seed = 12345,
                                 size_t chop_cap = Caps::global().chop) {
    double scale = std::log2(static_cast<double>(M.field().q()));
    if (static_cast<double>(M.dim()) * scale > static_cast<double>(chop_cap))
        throw CapExceeded("chop: dimension over cap");
    Rng rng = Rng::stream(seed, 0xC0FFEE);
    std::vector<GModule> out;
    detail::chop_rec(M, out, rng, 1024, 24);
    return out;
}

inline bool is_irreducible(const GModule& M, uint64_t seed = 12345) {
    if (M.dim() == 0) return false;
    if (M.dim() == 1) return true;
    Rng rng = Rng::stream(seed, 0x1BBE);
    for (int attempt = 0; attempt < 24; ++attempt) {
        detail::SplitAttempt sa = detail::try_split(M, rng, 1024);
        if (sa.split) return false;
        if (sa.certified_irreducible) return true;
    }
    throw ComputeError("is_irreducible: inconclusive within retry budget");
}

// ---- isomorphism testing ------------------------------------------------------

namespace detail {

// Deterministic-schedule spin from one seed; returns the ordered basis (not
// echelonized) or an empty matrix if the seed fails to generate.
inline Mat standard_basis(const GModule& M, const std::vector<fel>& seed) {
    const Field& F = M.field();
    size_t n = M.dim();
    EchelonBasis eb(F, n);
    Mat basis(F, n, n);
    size_t have = 0;
    if (!eb.insert_codes(seed)) return Mat(F, 0, n);
    basis.set_row(have++, seed);
    for (size_t i = 0; i < have && have < n; ++i)
        for (size_t gi = 0; gi < M.num_gens() && have < n; ++gi) {
            std::vector<fel> img = M.apply_gen(basis.row_codes(i), gi);
            if (eb.insert_codes(img)) basis.set_row(have++, img);
        }
    if (have < n) return Mat(F, 0, n);
    return basis;
}

// Action matrices rewritten in the given ordered basis.
inline std::vector<Mat> action_in_basis(const GModule& M, const Mat& basis) {
    Mat bt = basis.transpose();
    std::vector<Mat> reps;
    for (size_t gi = 0; gi < M.num_gens(); ++gi) {
        Mat r(M.field(), M.dim(), M.dim());
        for (size_t i = 0; i < M.dim(); ++i) {
            std::vector<fel> img = M.apply_gen(basis.row_codes(i), gi);
            auto coords = bt.solve_right(img);
            if (!coords) throw ComputeError("action_in_basis: vector outside basis span");
            r.set_row(i, *coords);
        }
        reps.push_back(std::move(r));
    }
    return reps;
}

}  // namespace detail

// G-isomorphism test for irreducible modules via standard bases.
inline bool is_iso(const GModule& A, const GModule& B, uint64_t seed = 999) {
    if (&A.field() != &B.field() || A.dim() != B.dim() || A.num_gens() != B.num_gens()) return false;
    if (A.dim() == 0) return true;
    const Field& F = A.field();
    Rng rng = Rng::stream(seed, 0x150150);
    for (int attempt = 0; attempt < 40; ++attempt) {
        // identical algebra-element recipe on both sides
        uint64_t recipe_seed = rng.next();
        Rng ra(recipe_seed), rb(recipe_seed);
        Mat thA = A.random_algebra_element(ra);
        Mat thB = B.random_algebra_element(rb);
        Poly mpA = minpoly(thA), mpB = minpoly(thB);
        if (mpA != mpB) return false;
        std::vector<Poly> factors = poly_distinct_factors(F, mpA, 64, rng);
        for (const Poly& p : factors) {
            Mat zA = poly_eval_matrix(F, p, thA);
            Mat zB = poly_eval_matrix(F, p, thB);
            Mat nA = zA.kernel_left(), nB = zB.kernel_left();
            if (nA.rows() != nB.rows()) return false;
            if (nA.rows() != static_cast<size_t>(poly_deg(p))) continue;  // want a 1-dim E-nullspace
            Mat basisA = detail::standard_basis(A, nA.row_codes(0));
            if (basisA.rows() == 0) continue;  // A not generated by the seed: unusable factor
            std::vector<Mat> repsA = detail::action_in_basis(A, basisA);
            bool matched = detail::for_each_nonzero_combination(F, nB, [&](const std::vector<fel>& w) {
                Mat basisB = detail::standard_basis(B, w);
                if (basisB.rows() == 0) return true;  // keep searching
                std::vector<Mat> repsB = detail::action_in_basis(B, basisB);
                for (size_t gi = 0; gi < repsA.size(); ++gi)
                    if (!(repsA[gi] == repsB[gi])) return true;
                return false;  // found a matching seed: stop
            });
            if (!matched) return true;  // enumeration stopped early: iso found
            return false;               // all candidate seeds exhausted: not iso
        }
    }
    throw ComputeError("is_iso: no usable separating element within retry budget");
}

// ---- endomorphism field -------------------------------------------------------

// F-basis of the commutant {X : A_g X = X A_g for all generators}.
inline std::vector<Mat> endo_basis(const GModule& M) {
    const Field& F = M.field();
    size_t n = M.dim();
    if (n == 0) return {};
    if (n > 128) throw CapExceeded("endo_basis: dimension over cap");
    size_t vars = n * n;
    size_t eqs = M.num_gens() * vars;
    Mat sys(F, std::max<size_t>(eqs, 1), vars);
    size_t row = 0;
    for (size_t g = 0; g < M.num_gens(); ++g) {
        const Mat& a = M.gen_matrix(g);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                // sum_j a[i][j] x[j][k] - x[i][j] a[j][k] = 0
                for (size_t j = 0; j < n; ++j) {
                    fel c1 = a.get(i, j);
                    if (c1) sys.set(row, j * n + k, F.add(sys.get(row, j * n + k), c1));
                    fel c2 = a.get(j, k);
                    if (c2) sys.set(row, i * n + j, F.sub(sys.get(row, i * n + j), c2));
                }
                ++row;
            }
    }
    Mat ker = sys.kernel_right();
    std::vector<Mat> basis;
    for (size_t r = 0; r < ker.rows(); ++r) {
        Mat X(F, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) X.set(i, j, ker.get(r, i * n + j));
        basis.push_back(std::move(X));
    }
    return basis;
}

// |End_G(M)| for irreducible M; verifies the commutant is a field by checking
// invertibility on basis elements and a few random combinations.
inline unsigned long long endo_size(const GModule& M, uint64_t seed = 4242) {
    if (M.dim() == 0) throw std::invalid_argument("endo_size: zero module");
    std::vector<Mat> basis = endo_basis(M);
    const Field& F = M.field();
    size_t f = basis.size();
    for (const Mat& X : basis)
        if (!X.is_zero() && !X.inverse()) throw ComputeError("endo_size: commutant is not a field (module not irreducible?)");
    Rng rng = Rng::stream(seed, 0xE4D0);
    for (int t = 0; t < 12; ++t) {
        Mat acc(F, M.dim(), M.dim());
        bool nz = false;
        for (size_t i = 0; i < f; ++i) {
            fel c = static_cast<fel>(rng.below(F.q()));
            if (c) {
                nz = true;
                for (size_t r = 0; r < M.dim(); ++r) acc.row_axpy(r, basis[i], r, c);
            }
        }
        if (nz && !acc.inverse()) throw ComputeError("endo_size: commutant is not a field (module not irreducible?)");
    }
    unsigned long long size = 1;
    for (size_t i = 0; i < f; ++i) size *= F.q();
    return size;
}

// Iso-invariant fingerprint used as a census pre-key: dimension plus minimal
// polynomials of a fixed word list in the generators.
inline std::string module_fingerprint(const GModule& M) {
    std::string s = "d" + std::to_string(M.dim());
    if (M.dim() == 0 || M.num_gens() == 0) return s;
    std::vector<std::vector<uint32_t>> words;
    if (M.num_gens() == 1) words = {{0}, {0, 0}, {0, 0, 0}};
    else words = {{0}, {1}, {0, 1}, {1, 0, 0}, {0, 1, 1}, {0, 1, 0, 1}};
    for (auto& w : words) {
        for (uint32_t& gi : w) gi = gi % static_cast<uint32_t>(M.num_gens());
        Poly mp = minpoly(M.word_matrix(w));
        s += ":";
        for (fel c : mp) s += std::to_string(c) + ",";
    }
    return s;
}

}  // namespace progen
