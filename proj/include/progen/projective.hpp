// Projective covers and minimal resolutions over F_q[G], by idempotent
// lifting on the regular module. The algebra context holds the census, the
// Jacobson radical, one lifted primitive idempotent per irreducible class,
// and the indecomposable projectives e_S A as submodules of the regular
// module. Hom spaces out of projectives use Hom(eA, N) = Ne.
#pragma once

#include "progen/homs.hpp"

namespace progen {

// Action matrices of every group element on a module, in element-table order.
inline std::vector<Mat> element_matrices(const GModule& N) {
    const ElementTable& T = N.group().elements();
    std::vector<Mat> mats;
    mats.reserve(T.size());
    mats.push_back(Mat::identity(N.field(), N.dim()));
    for (uint32_t e = 1; e < T.size(); ++e) {
        auto w = T.word(e);
        uint32_t parent = 0;
        for (size_t i = 0; i + 1 < w.size(); ++i) parent = T.rmul_gen(parent, w[i]);
        mats.push_back(mats[parent] * N.gen_matrix(w.back()));
    }
    return mats;
}

// rho_N(a) for an algebra element a given the per-element action matrices.
inline Mat algebra_action(const Field& F, const std::vector<fel>& a, const std::vector<Mat>& elmats,
                          size_t dim) {
    Mat acc(F, dim, dim);
    for (uint32_t g = 0; g < elmats.size(); ++g) {
        if (!a[g]) continue;
        for (size_t r = 0; r < dim; ++r) acc.row_axpy(r, elmats[g], r, a[g]);
    }
    return acc;
}

class ProjectiveContext {
public:
    ProjectiveContext(const PermGroup& G, const Field& F, uint64_t seed = 2024,
                      size_t cap = Caps::global().projective)
        : G_(G), F_(&F), census_(irr_census(G, F, seed)), reg_(regular_module(G, F)) {
        n_ = reg_.dim();
        if (n_ > cap) throw CapExceeded("ProjectiveContext: dim F_q[G] exceeds projective cap");
        T_ = &G_.elements();
        build_class_actions();
        build_radical();
        build_idempotents();
    }

    const PermGroup& group() const { return G_; }
    const Field& field() const { return *F_; }
    const IrrCensus& census() const { return census_; }
    const GModule& regular() const { return reg_; }
    const Mat& radical_basis() const { return rad_; }
    size_t algebra_dim() const { return n_; }

    struct Indecomposable {
        Mat basis;       // rows inside F^n
        GModule module;  // e_S A with its own coordinates
    };
    const Indecomposable& projective_indecomposable(size_t class_idx) const { return pims_[class_idx]; }
    const std::vector<fel>& idempotent(size_t class_idx) const { return idem_[class_idx]; }
    const Mat& class_element_matrix(size_t class_idx, uint32_t elem) const {
        return class_mats_[class_idx][elem];
    }

    std::vector<fel> algebra_mul(const std::vector<fel>& a, const std::vector<fel>& b) const {
        std::vector<fel> c(n_, 0);
        for (uint32_t i = 0; i < n_; ++i) {
            if (!a[i]) continue;
            for (uint32_t j = 0; j < n_; ++j)
                if (b[j]) {
                    uint32_t k = T_->mult(i, j);
                    c[k] = F_->add(c[k], F_->mul(a[i], b[j]));
                }
        }
        return c;
    }

    // rad(N) = N * rad(A) as an echelonized basis.
    Mat module_radical(const GModule& N, const std::vector<Mat>& elmats) const {
        EchelonBasis eb(*F_, N.dim());
        for (size_t r = 0; r < rad_.rows(); ++r) {
            Mat rho = algebra_action(*F_, rad_.row_codes(r), elmats, N.dim());
            for (size_t i = 0; i < N.dim(); ++i) eb.insert_codes(rho.row_codes(i));
        }
        return eb.basis_matrix();
    }

private:
    PermGroup G_;
    const Field* F_;
    IrrCensus census_;
    GModule reg_;
    const ElementTable* T_ = nullptr;
    size_t n_ = 0;
    Mat rad_{Field::get(2), 0, 0};
    std::vector<std::vector<Mat>> class_mats_;
    std::vector<std::vector<fel>> idem_;
    std::vector<Indecomposable> pims_;

    void build_class_actions() {
        for (const IrrClass& c : census_.classes) class_mats_.push_back(element_matrices(c.module));
    }

    // Stacked representation map L: a -> (rho_S(a))_S; radical = left kernel.
    Mat rep_map() const {
        size_t cols = 0;
        for (const IrrClass& c : census_.classes) cols += c.module.dim() * c.module.dim();
        Mat L(*F_, n_, cols);
        for (uint32_t g = 0; g < n_; ++g) {
            size_t off = 0;
            for (size_t s = 0; s < census_.classes.size(); ++s) {
                size_t d = census_.classes[s].module.dim();
                const Mat& m = class_mats_[s][g];
                for (size_t i = 0; i < d; ++i)
                    for (size_t j = 0; j < d; ++j) L.set(g, off + i * d + j, m.get(i, j));
                off += d * d;
            }
        }
        return L;
    }

    void build_radical() {
        Mat L = rep_map();
        rad_ = L.kernel_left();
        rad_.rref();
    }

    void build_idempotents() {
        Mat L = rep_map();
        Mat Lt = L.transpose();
        size_t cols = L.cols();
        for (size_t s = 0; s < census_.classes.size(); ++s) {
            const IrrClass& cls = census_.classes[s];
            size_t d = cls.module.dim();
            // E-projection onto the first E-line of S
            std::vector<Mat> ends = endo_basis(cls.module);
            EchelonBasis span(*F_, d);
            std::vector<std::vector<fel>> lines;  // F-basis grouped by E-line
            for (size_t v = 0; v < d && span.size() < d; ++v) {
                std::vector<fel> seedv(d, 0);
                seedv[v] = 1;
                if (span.contains(seedv)) continue;
                for (const Mat& E : ends) {
                    std::vector<fel> img = E.apply_row(seedv);
                    if (span.insert_codes(img)) lines.push_back(img);
                }
            }
            if (lines.size() != d) throw ComputeError("idempotent: endo lines do not fill the module");
            Mat B = Mat::from_rows(*F_, lines);
            auto Binv = B.inverse();
            if (!Binv) throw ComputeError("idempotent: line basis not invertible");
            Mat D(*F_, d, d);
            for (size_t i = 0; i < cls.f; ++i) D.set(i, i, 1);
            Mat pi = (*Binv) * D * B;  // row convention: v -> v*pi
            std::vector<fel> target(cols, 0);
            size_t off = 0;
            for (size_t t = 0; t < census_.classes.size(); ++t) {
                size_t dt = census_.classes[t].module.dim();
                if (t == s)
                    for (size_t i = 0; i < dt; ++i)
                        for (size_t j = 0; j < dt; ++j) target[off + i * dt + j] = pi.get(i, j);
                off += dt * dt;
            }
            auto a0 = Lt.solve_right(target);
            if (!a0) throw ComputeError("idempotent: semisimple component not hit (census incomplete?)");
            std::vector<fel> e = *a0;
            bool ok = false;
            for (int it = 0; it < 64; ++it) {
                std::vector<fel> e2 = algebra_mul(e, e);
                if (e2 == e) { ok = true; break; }
                std::vector<fel> e3 = algebra_mul(e2, e);
                std::vector<fel> next(n_);
                fel three = F_->from_int(3), two = F_->from_int(2);
                for (size_t i = 0; i < n_; ++i)
                    next[i] = F_->sub(F_->mul(three, e2[i]), F_->mul(two, e3[i]));
                e = std::move(next);
            }
            if (!ok) throw ComputeError("idempotent: lifting did not converge");
            idem_.push_back(e);
            Mat basis = spin(reg_, {e});  // right ideal e_S A
            Indecomposable pim{basis, submodule(reg_, basis)};
            pims_.push_back(std::move(pim));
        }
    }
};

struct ProjectiveCover {
    GModule P;
    Mat epi;                       // dim P x dim N
    std::vector<size_t> summands;  // census class index per summand
    Mat kernel_basis;              // rows in P-coordinates
};

inline ProjectiveCover projective_cover(const ProjectiveContext& ctx, const GModule& N) {
    const Field& F = ctx.field();
    if (N.dim() == 0) {
        ProjectiveCover pc{zero_module(ctx.group(), F), Mat(F, 0, 0), {}, Mat(F, 0, 0)};
        return pc;
    }
    std::vector<Mat> elmats = element_matrices(N);
    Mat radN = ctx.module_radical(N, elmats);
    GModule H = quotient_module(N, radN);
    Mat radN_r = radN;
    std::vector<size_t> piv;
    radN_r.rref(&piv);
    std::vector<bool> is_piv(N.dim(), false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<size_t> freecols;
    for (size_t c = 0; c < N.dim(); ++c)
        if (!is_piv[c]) freecols.push_back(c);
    auto to_head = [&](std::vector<fel> v) {
        for (size_t k = 0; k < piv.size(); ++k) {
            fel c = v[piv[k]];
            if (c)
                for (size_t j = 0; j < N.dim(); ++j) v[j] = F.sub(v[j], F.mul(c, radN_r.get(k, j)));
        }
        std::vector<fel> h(freecols.size());
        for (size_t k = 0; k < freecols.size(); ++k) h[k] = v[freecols[k]];
        return h;
    };

    // Greedy pick of hom seeds x in N e_S whose head images span head(N).
    // Each accepted pick contributes exactly one copy of S to head(P).
    EchelonBasis span(F, H.dim());
    std::vector<std::vector<fel>> queue;
    auto add_span = [&](const std::vector<fel>& h) {
        if (!span.insert_codes(h)) return false;
        queue.push_back(h);
        for (size_t i = queue.size() - 1; i < queue.size(); ++i)
            for (size_t gi = 0; gi < H.num_gens(); ++gi) {
                std::vector<fel> img = H.apply_gen(queue[i], gi);
                if (span.insert_codes(img)) queue.push_back(std::move(img));
            }
        return true;
    };

    std::vector<std::pair<size_t, std::vector<fel>>> picks;
    for (size_t s = 0; s < ctx.census().classes.size() && span.size() < H.dim(); ++s) {
        Mat rho_e = algebra_action(F, ctx.idempotent(s), elmats, N.dim());
        Mat ne = rho_e;
        size_t rank = ne.rref();
        for (size_t r = 0; r < rank; ++r) {
            std::vector<fel> x = ne.row_codes(r);
            std::vector<fel> h = to_head(x);
            bool nzh = false;
            for (fel c : h) nzh = nzh || c;
            if (!nzh) continue;
            if (add_span(h)) picks.emplace_back(s, x);
        }
    }
    if (span.size() != H.dim()) throw ComputeError("projective_cover: head not covered by idempotent images");

    GModule P = zero_module(ctx.group(), F);
    std::vector<size_t> summands;
    std::vector<Mat> epis;
    for (auto& [s, x] : picks) {
        const auto& pim = ctx.projective_indecomposable(s);
        // orbit of x under every element: x * rho_N(g)
        std::vector<std::vector<fel>> xg(elmats.size());
        for (uint32_t g = 0; g < elmats.size(); ++g) xg[g] = elmats[g].apply_row(x);
        Mat phi(F, pim.basis.rows(), N.dim());
        for (size_t r = 0; r < pim.basis.rows(); ++r) {
            std::vector<fel> b = pim.basis.row_codes(r);
            std::vector<fel> img(N.dim(), 0);
            for (uint32_t g = 0; g < xg.size(); ++g) {
                if (!b[g]) continue;
                for (size_t j = 0; j < N.dim(); ++j) img[j] = F.add(img[j], F.mul(b[g], xg[g][j]));
            }
            phi.set_row(r, img);
        }
        epis.push_back(std::move(phi));
        summands.push_back(s);
        P = P.dim() == 0 ? pim.module : direct_sum(P, pim.module);
    }
    Mat epi(F, P.dim(), N.dim());
    size_t off = 0;
    for (const Mat& phi : epis) {
        for (size_t r = 0; r < phi.rows(); ++r) epi.copy_row_from(off + r, phi, r);
        off += phi.rows();
    }
    if (epi.rank() != N.dim()) throw ComputeError("projective_cover: map is not surjective");
    Mat kerb = epi.kernel_left();

    // superfluous-kernel check: ker c rad P = P * rad(A)
    std::vector<Mat> pmats = element_matrices(P);
    Mat radP = ctx.module_radical(P, pmats);
    EchelonBasis radsp(F, P.dim());
    for (size_t r = 0; r < radP.rows(); ++r) radsp.insert_codes(radP.row_codes(r));
    for (size_t r = 0; r < kerb.rows(); ++r)
        if (!radsp.contains(kerb.row_codes(r)))
            throw ComputeError("projective_cover: kernel not superfluous");

    ProjectiveCover pc{std::move(P), std::move(epi), std::move(summands), std::move(kerb)};
    return pc;
}

// Minimal projective resolution data: P_i covers K_(i-1), boundaries are the
// composites P_i -> K_(i-1) c P_(i-1).
struct Resolution {
    std::vector<GModule> terms;                 // P_0, ..., P_n
    std::vector<std::vector<size_t>> summands;  // census classes per term
    std::vector<Mat> boundary;                  // boundary[i-1]: P_i -> P_(i-1)
    std::vector<Mat> kernels;                   // K_i basis rows in P_i coordinates
    std::vector<GModule> kernel_modules;        // K_i as modules
    bool minimal = true;
};

inline Resolution minimal_resolution_of(const ProjectiveContext& ctx, const GModule& N, size_t length) {
    Resolution res;
    ProjectiveCover pc = projective_cover(ctx, N);
    res.terms.push_back(pc.P);
    res.summands.push_back(pc.summands);
    res.kernels.push_back(pc.kernel_basis);
    res.kernel_modules.push_back(pc.kernel_basis.rows() ? submodule(pc.P, pc.kernel_basis)
                                                        : zero_module(ctx.group(), ctx.field()));
    for (size_t i = 1; i <= length; ++i) {
        const GModule& K = res.kernel_modules.back();
        ProjectiveCover cov = projective_cover(ctx, K);
        const Mat& kb = res.kernels.back();  // dim K x dim P_(i-1)
        Mat bd(ctx.field(), cov.P.dim(), res.terms.back().dim());
        for (size_t r = 0; r < cov.P.dim(); ++r)
            for (size_t k = 0; k < K.dim(); ++k) {
                fel c = cov.epi.get(r, k);
                if (c) bd.row_axpy(r, kb, k, c);
            }
        res.boundary.push_back(std::move(bd));
        res.terms.push_back(cov.P);
        res.summands.push_back(cov.summands);
        res.kernels.push_back(cov.kernel_basis);
        res.kernel_modules.push_back(cov.kernel_basis.rows() ? submodule(cov.P, cov.kernel_basis)
                                                             : zero_module(ctx.group(), ctx.field()));
    }
    return res;
}

inline Resolution minimal_resolution(const ProjectiveContext& ctx, size_t length) {
    return minimal_resolution_of(ctx, trivial_module(ctx.group(), ctx.field()), length);
}

// dim_F Hom(P_i, S) via Hom(eA, S) = S e. For a minimal resolution this is
// the base-field dimension of Ext^i(N, S).
inline size_t resolution_hom_dim(const ProjectiveContext& ctx, const Resolution& res, size_t i,
                                 size_t class_idx) {
    if (i >= res.summands.size()) return 0;
    const IrrClass& cls = ctx.census().classes[class_idx];
    size_t total = 0;
    for (size_t s : res.summands[i]) {
        const std::vector<fel>& e = ctx.idempotent(s);
        Mat rho(ctx.field(), cls.module.dim(), cls.module.dim());
        for (uint32_t g = 0; g < ctx.group().elements().size(); ++g) {
            if (!e[g]) continue;
            const Mat& mg = ctx.class_element_matrix(class_idx, g);
            for (size_t r = 0; r < rho.rows(); ++r) rho.row_axpy(r, mg, r, e[g]);
        }
        total += rho.rank();
    }
    return total;
}

// Ext^n(N, S) base-field dimension via a minimal resolution of N.
inline size_t ext_dim(const ProjectiveContext& ctx, const GModule& N, size_t class_idx, size_t n) {
    Resolution res = minimal_resolution_of(ctx, N, n);
    return resolution_hom_dim(ctx, res, n, class_idx);
}

}  // namespace progen
