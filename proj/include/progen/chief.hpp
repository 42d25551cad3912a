// Chief series of a finite permutation group, built bottom-up by repeatedly
// extracting a minimal normal subgroup of the current quotient. Abelian
// factors carry their conjugation module (over the original group, inflated
// through the quotient) and a non-Frattini flag.
#pragma once

#include <optional>

#include "progen/homs.hpp"
#include "progen/lattice.hpp"

namespace progen {

struct ChiefFactor {
    size_t order = 0;            // |H_i / H_(i-1)|
    bool abelian = false;
    uint32_t prime = 0;          // for abelian factors: order = prime^dim
    std::optional<GModule> module;  // conjugation module over G (abelian factors)
    bool non_frattini = false;
    std::vector<uint32_t> lower_elems, upper_elems;  // element sets in G
};

struct ChiefSeries {
    std::vector<ChiefFactor> factors;  // ascending from the trivial subgroup
};

namespace detail {

// Permutation of coset points given by right translation by a parent element.
inline Perm coset_translation(const QuotientGroup& qg, const ElementTable& T, uint32_t e) {
    std::vector<uint32_t> img(qg.coset_rep.size());
    for (uint32_t c = 0; c < qg.coset_rep.size(); ++c) img[c] = qg.proj[T.mult(qg.coset_rep[c], e)];
    return Perm(img);
}

}  // namespace detail

inline ChiefSeries chief_series(const PermGroup& G, size_t lattice_cap = Caps::global().lattice) {
    if (G.order() > BigInt(static_cast<unsigned long long>(lattice_cap)))
        throw CapExceeded("chief_series: group order exceeds lattice cap");
    const ElementTable& T = G.elements();
    ChiefSeries series;
    std::vector<uint32_t> K{0};

    while (K.size() < T.size()) {
        QuotientGroup qg = quotient_by(G, T, K);
        const PermGroup& Q = qg.Q;
        const ElementTable& TQ = Q.elements();

        // Minimal normal subgroup of Q: least single-element normal closure
        // under (order, lexicographic element list).
        std::optional<Subgroup> best;
        for (uint32_t x = 1; x < TQ.size(); ++x) {
            Subgroup cl = normal_closure_elems(Q, TQ, {x});
            if (!best || cl.elems.size() < best->elems.size() ||
                (cl.elems.size() == best->elems.size() && cl.elems < best->elems))
                best = std::move(cl);
        }
        const Subgroup& M = *best;

        ChiefFactor factor;
        factor.order = M.elems.size();
        factor.lower_elems = K;

        // abelian?
        factor.abelian = true;
        for (uint32_t a : M.elems)
            for (uint32_t b : M.elems)
                if (TQ.mult(a, b) != TQ.mult(b, a)) { factor.abelian = false; break; }

        // non-Frattini flag: M not contained in Phi(Q)
        {
            SubgroupLattice LQ(Q, lattice_cap);
            Subgroup phi = LQ.frattini();
            bool inside = true;
            for (uint32_t m : M.elems)
                if (!phi.contains_element(m)) { inside = false; break; }
            factor.non_frattini = !inside;
        }

        if (factor.abelian) {
            uint32_t p = 0;
            for (uint32_t d = 2; d <= factor.order; ++d)
                if (factor.order % d == 0) { p = d; break; }
            factor.prime = p;
            const Field& F = Field::get(p);
            // F_p-basis of the elementary abelian factor
            std::vector<uint32_t> basis;
            std::map<uint32_t, std::vector<fel>> coords;
            coords[0] = {};
            for (uint32_t x : M.elems) {
                if (coords.count(x)) continue;
                basis.push_back(x);
                // regenerate coordinates for the enlarged span
                std::map<uint32_t, std::vector<fel>> next;
                uint64_t total = 1;
                for (size_t i = 0; i < basis.size(); ++i) total *= p;
                for (uint64_t t = 0; t < total; ++t) {
                    uint64_t v = t;
                    uint32_t elem = 0;
                    std::vector<fel> cv(basis.size());
                    for (size_t i = 0; i < basis.size(); ++i) {
                        cv[i] = static_cast<fel>(v % p);
                        v /= p;
                        for (fel rep = 0; rep < cv[i]; ++rep) elem = TQ.mult(elem, basis[i]);
                    }
                    next.emplace(elem, std::move(cv));
                }
                coords = std::move(next);
            }
            size_t dim = basis.size();
            // conjugation action of each parent generator (as right action
            // x -> g^-1 x g) written in the basis
            std::vector<Mat> act;
            for (size_t gi = 0; gi < G.gens().size(); ++gi) {
                uint32_t gq = *TQ.index_of(detail::coset_translation(qg, T, *T.index_of(G.gens()[gi])));
                Mat m(F, dim, dim);
                for (size_t i = 0; i < dim; ++i) {
                    uint32_t img = TQ.conj(basis[i], gq);
                    const std::vector<fel>& cv = coords.at(img);
                    m.set_row(i, cv);
                }
                act.push_back(std::move(m));
            }
            factor.module = GModule(G, F, dim, std::move(act));
        }

        // Pull the factor back to the parent: elements mapping into M.
        std::vector<bool> inM(TQ.size(), false);
        for (uint32_t m : M.elems) inM[m] = true;
        std::vector<uint32_t> K2;
        for (uint32_t e = 0; e < T.size(); ++e) {
            auto qi = TQ.index_of(detail::coset_translation(qg, T, e));
            if (qi && inM[*qi]) K2.push_back(e);
        }
        std::sort(K2.begin(), K2.end());
        factor.upper_elems = K2;
        series.factors.push_back(std::move(factor));
        K = std::move(K2);
    }
    return series;
}

// delta_G(M): number of non-Frattini chief factors G-isomorphic to the
// irreducible module M. Factors in other characteristics never match.
inline size_t delta(const PermGroup& G, const GModule& M, const ChiefSeries& series,
                    uint64_t seed = 2024) {
    (void)G;
    size_t count = 0;
    for (const ChiefFactor& f : series.factors) {
        if (!f.abelian || !f.non_frattini || !f.module) continue;
        if (f.module->field().q() != M.field().q()) continue;
        if (f.module->dim() != M.dim()) continue;
        if (is_iso(*f.module, M, seed)) ++count;
    }
    return count;
}

inline size_t delta(const PermGroup& G, const GModule& M, uint64_t seed = 2024) {
    return delta(G, M, chief_series(G), seed);
}

// ---- centralizer kernel and faithful quotient --------------------------------

// Elements acting as the identity matrix on the module.
inline std::vector<uint32_t> centralizer_kernel(const GModule& M,
                                                size_t cap = Caps::global().element_enum) {
    const PermGroup& G = M.group();
    const ElementTable& T = G.elements(cap);
    // carry matrices along the BFS order: elem e = parent * gen
    std::vector<Mat> mats;
    mats.reserve(T.size());
    mats.push_back(Mat::identity(M.field(), M.dim()));
    std::vector<uint32_t> kernel{0};
    for (uint32_t e = 1; e < T.size(); ++e) {
        auto w = T.word(e);
        // parent of e is the element with word w minus last letter
        Mat m = mats[0];
        {
            uint32_t parent = 0;
            for (size_t i = 0; i + 1 < w.size(); ++i) parent = T.rmul_gen(parent, w[i]);
            m = mats[parent] * M.gen_matrix(w.back());
        }
        if (m == mats[0]) kernel.push_back(e);
        mats.push_back(std::move(m));
    }
    return kernel;
}

// The module viewed over G / C_G(M): the quotient's generator list parallels
// the parent's, so the matrices carry over unchanged.
struct FaithfulQuotient {
    QuotientGroup quotient;
    GModule module;
};

inline FaithfulQuotient faithful_quotient(const GModule& M, size_t cap = Caps::global().element_enum) {
    const PermGroup& G = M.group();
    const ElementTable& T = G.elements(cap);
    std::vector<uint32_t> kernel = centralizer_kernel(M, cap);
    QuotientGroup qg = quotient_by(G, T, kernel);
    std::vector<Mat> act;
    for (size_t gi = 0; gi < M.num_gens(); ++gi) act.push_back(M.gen_matrix(gi));
    GModule qm(qg.Q, M.field(), M.dim(), std::move(act));
    return FaithfulQuotient{std::move(qg), std::move(qm)};
}

}  // namespace progen
