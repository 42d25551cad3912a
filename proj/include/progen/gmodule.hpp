// Modules over finite group algebras F_q[G]. Vectors are rows; a generator g
// with matrix M_g acts on the right, v -> v*M_g, and M_(gh) = M_g*M_h. All
// module theory downstream (spinning, heads, censuses, probabilities) is for
// these right modules; cohomology converts to the associated left action by
// inverting generator matrices.
#pragma once

#include <optional>
#include <vector>

#include "progen/group.hpp"
#include "progen/matrix.hpp"
#include "progen/rng.hpp"

namespace progen {

class GModule {
public:
    GModule(PermGroup group, const Field& F, size_t dim, std::vector<Mat> action)
        : G_(std::move(group)), F_(&F), dim_(dim), action_(std::move(action)) {
        if (action_.size() != G_.gens().size())
            throw std::invalid_argument("GModule: need one matrix per generator");
        for (const Mat& m : action_) {
            if (m.rows() != dim_ || m.cols() != dim_ || &m.field() != F_)
                throw std::invalid_argument("GModule: bad action matrix shape/field");
            if (dim_ && !m.inverse()) throw std::invalid_argument("GModule: action matrix not invertible");
        }
    }

    const PermGroup& group() const { return G_; }
    const Field& field() const { return *F_; }
    size_t dim() const { return dim_; }
    const Mat& gen_matrix(size_t i) const { return action_[i]; }
    size_t num_gens() const { return action_.size(); }

    const Mat& gen_matrix_inv(size_t i) const {
        if (inv_.empty()) {
            inv_.reserve(action_.size());
            for (const Mat& m : action_) inv_.push_back(*m.inverse());
        }
        return inv_[i];
    }

    // |M| = q^dim as a BigInt.
    BigInt order() const { return BigInt::pow(BigInt(F_->q()), dim_); }

    std::vector<fel> apply_gen(const std::vector<fel>& v, size_t gi) const {
        return action_[gi].apply_row(v);
    }
    std::vector<fel> apply_word(std::vector<fel> v, const std::vector<uint32_t>& word) const {
        for (uint32_t gi : word) v = action_[gi].apply_row(v);
        return v;
    }
    // Action of a group element via its table word.
    std::vector<fel> apply_element(const std::vector<fel>& v, uint32_t elem_idx) const {
        return apply_word(v, G_.elements().word(elem_idx));
    }

    Mat word_matrix(const std::vector<uint32_t>& word) const {
        Mat m = Mat::identity(*F_, dim_);
        for (uint32_t gi : word) m = m * action_[gi];
        return m;
    }
    Mat element_matrix(uint32_t elem_idx) const { return word_matrix(G_.elements().word(elem_idx)); }

    // Random element of the group algebra image: a short sum of random words.
    Mat random_algebra_element(Rng& rng) const {
        Mat acc(*F_, dim_, dim_);
        size_t terms = 2 + rng.below(3);
        for (size_t t = 0; t < terms; ++t) {
            std::vector<uint32_t> w;
            if (!action_.empty()) {
                size_t len = 1 + rng.below(5);
                for (size_t i = 0; i < len; ++i) w.push_back(static_cast<uint32_t>(rng.below(action_.size())));
            }
            fel c = static_cast<fel>(1 + rng.below(F_->q() - 1));
            Mat wm = word_matrix(w);
            for (size_t r = 0; r < dim_; ++r) acc.row_axpy(r, wm, r, c);
        }
        return acc;
    }

    // Relation spot check: random words evaluating to the identity permutation
    // must evaluate to the identity matrix.
    bool check_relations(Rng& rng, size_t samples = 30) const {
        if (action_.empty() || dim_ == 0) return true;
        size_t checked = 0;
        Perm idp(G_.degree());
        for (size_t s = 0; s < samples * 10 && checked < samples; ++s) {
            std::vector<uint32_t> w;
            size_t len = 1 + rng.below(8);
            for (size_t i = 0; i < len; ++i) w.push_back(static_cast<uint32_t>(rng.below(action_.size())));
            Perm p(G_.degree());
            for (uint32_t gi : w) p = p * G_.gens()[gi];
            uint64_t ord = p.order();
            // close the word to the identity by repeating it ord times
            Mat wm = word_matrix(w);
            Mat acc = Mat::identity(*F_, dim_);
            for (uint64_t r = 0; r < ord; ++r) acc = acc * wm;
            ++checked;
            if (!(acc == Mat::identity(*F_, dim_))) return false;
        }
        return true;
    }

private:
    PermGroup G_;
    const Field* F_;
    size_t dim_;
    std::vector<Mat> action_;
    mutable std::vector<Mat> inv_;
};

// ---- standard constructions ------------------------------------------------

inline GModule trivial_module(const PermGroup& G, const Field& F) {
    std::vector<Mat> act(G.gens().size(), Mat::identity(F, 1));
    return GModule(G, F, 1, std::move(act));
}

inline GModule zero_module(const PermGroup& G, const Field& F) {
    std::vector<Mat> act(G.gens().size(), Mat(F, 0, 0));
    return GModule(G, F, 0, std::move(act));
}

// Right regular module on the element basis: e_x * g = e_(xg).
inline GModule regular_module(const PermGroup& G, const Field& F,
                              size_t cap = Caps::global().chop) {
    (void)cap;  // sizing is enforced by chop and the element table
    const ElementTable& T = G.elements();
    size_t n = T.size();
    std::vector<Mat> act;
    for (size_t gi = 0; gi < G.gens().size(); ++gi) {
        Mat m(F, n, n);
        for (uint32_t x = 0; x < n; ++x) m.set(x, T.rmul_gen(x, static_cast<uint32_t>(gi)), 1);
        act.push_back(std::move(m));
    }
    return GModule(G, F, n, std::move(act));
}

// Kernel of the augmentation F_q[G] -> F_q on the basis {x - 1 : x != 1}.
inline GModule augmentation_module(const PermGroup& G, const Field& F) {
    const ElementTable& T = G.elements();
    size_t n = T.size();
    if (n == 1) return zero_module(G, F);
    std::vector<Mat> act;
    for (size_t gi = 0; gi < G.gens().size(); ++gi) {
        Mat m(F, n - 1, n - 1);
        for (uint32_t x = 1; x < n; ++x) {
            uint32_t xg = T.rmul_gen(x, static_cast<uint32_t>(gi));
            uint32_t g = T.rmul_gen(0, static_cast<uint32_t>(gi));
            // (x-1)*g = (xg-1) - (g-1)
            if (xg != 0) m.set(x - 1, xg - 1, F.add(m.get(x - 1, xg - 1), 1));
            if (g != 0) m.set(x - 1, g - 1, F.sub(m.get(x - 1, g - 1), 1));
        }
        act.push_back(std::move(m));
    }
    return GModule(G, F, n - 1, std::move(act));
}

inline GModule direct_sum(const GModule& a, const GModule& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("direct_sum: field mismatch");
    if (a.num_gens() != b.num_gens()) throw std::invalid_argument("direct_sum: generator count mismatch");
    size_t d = a.dim() + b.dim();
    std::vector<Mat> act;
    for (size_t gi = 0; gi < a.num_gens(); ++gi) {
        Mat m(a.field(), d, d);
        for (size_t i = 0; i < a.dim(); ++i)
            for (size_t j = 0; j < a.dim(); ++j) m.set(i, j, a.gen_matrix(gi).get(i, j));
        for (size_t i = 0; i < b.dim(); ++i)
            for (size_t j = 0; j < b.dim(); ++j) m.set(a.dim() + i, a.dim() + j, b.gen_matrix(gi).get(i, j));
        act.push_back(std::move(m));
    }
    return GModule(a.group(), a.field(), d, std::move(act));
}

inline GModule power_module(const GModule& a, size_t n) {
    if (n == 0) return zero_module(a.group(), a.field());
    GModule r = a;
    for (size_t i = 1; i < n; ++i) r = direct_sum(r, a);
    return r;
}

// Dual (contragredient) right module: matrices become inverse-transposes.
inline GModule dual_module(const GModule& a) {
    std::vector<Mat> act;
    for (size_t gi = 0; gi < a.num_gens(); ++gi) act.push_back(a.gen_matrix_inv(gi).transpose());
    return GModule(a.group(), a.field(), a.dim(), std::move(act));
}

// Outer tensor product over G x H (direct_product group order: G gens then H
// gens). Requires the same field.
inline GModule tensor_outer(const GModule& mg, const GModule& mh) {
    if (&mg.field() != &mh.field()) throw std::invalid_argument("tensor_outer: field mismatch");
    PermGroup GH = direct_product(mg.group(), mh.group());
    size_t d = mg.dim() * mh.dim();
    Mat idg = Mat::identity(mg.field(), mg.dim());
    Mat idh = Mat::identity(mh.field(), mh.dim());
    std::vector<Mat> act;
    for (size_t gi = 0; gi < mg.num_gens(); ++gi) act.push_back(mg.gen_matrix(gi).kron(idh));
    for (size_t hi = 0; hi < mh.num_gens(); ++hi) act.push_back(idg.kron(mh.gen_matrix(hi)));
    return GModule(GH, mg.field(), d, std::move(act));
}

// Inner tensor product of two modules over the same group.
inline GModule tensor_inner(const GModule& a, const GModule& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("tensor_inner: field mismatch");
    std::vector<Mat> act;
    for (size_t gi = 0; gi < a.num_gens(); ++gi) act.push_back(a.gen_matrix(gi).kron(b.gen_matrix(gi)));
    return GModule(a.group(), a.field(), a.dim() * b.dim(), std::move(act));
}

// Restriction along a subgroup whose generators are given as words in the
// parent group's generators.
inline GModule restrict_module(const GModule& m, const PermGroup& H,
                               const std::vector<std::vector<uint32_t>>& gen_words) {
    if (gen_words.size() != H.gens().size())
        throw std::invalid_argument("restrict_module: need a word per subgroup generator");
    std::vector<Mat> act;
    for (const auto& w : gen_words) {
        // verify the word really evaluates to the subgroup generator
        Perm p(m.group().degree());
        for (uint32_t gi : w) {
            if (gi >= m.num_gens()) throw std::invalid_argument("restrict_module: word index out of range");
            p = p * m.group().gens()[gi];
        }
        if (!(p == H.gens()[act.size()]))
            throw std::invalid_argument("restrict_module: generator word unavailable/incorrect");
        act.push_back(m.word_matrix(w));
    }
    return GModule(H, m.field(), m.dim(), std::move(act));
}

// Find words for subgroup generators by BFS over the parent's element table.
inline std::vector<std::vector<uint32_t>> generator_words(const PermGroup& G, const PermGroup& H) {
    const ElementTable& T = G.elements();
    std::vector<std::vector<uint32_t>> words;
    for (const Perm& h : H.gens()) {
        auto idx = T.index_of(h);
        if (!idx) throw std::invalid_argument("generator_words: subgroup generator not in parent");
        words.push_back(T.word(*idx));
    }
    return words;
}

// Scalar extension along F_p -> F_{p^f} (same matrices, codes re-interpreted;
// prime-subfield codes embed as themselves).
inline GModule extend_scalars(const GModule& m, const Field& E) {
    if (E.p() != m.field().p()) throw std::invalid_argument("extend_scalars: characteristic mismatch");
    if (m.field().e() != 1 && &m.field() != &E)
        throw std::invalid_argument("extend_scalars: base must be the prime field");
    std::vector<Mat> act;
    for (size_t gi = 0; gi < m.num_gens(); ++gi) {
        Mat n(E, m.dim(), m.dim());
        for (size_t i = 0; i < m.dim(); ++i)
            for (size_t j = 0; j < m.dim(); ++j) n.set(i, j, m.gen_matrix(gi).get(i, j));
        act.push_back(std::move(n));
    }
    return GModule(m.group(), E, m.dim(), std::move(act));
}

// ---- spinning ---------------------------------------------------------------

// Least submodule containing the seeds, as a fully reduced echelon basis.
inline Mat spin(const GModule& m, const std::vector<std::vector<fel>>& seeds) {
    EchelonBasis eb(m.field(), m.dim());
    std::vector<std::vector<fel>> queue;
    for (const auto& s : seeds) {
        if (s.size() != m.dim()) throw std::invalid_argument("spin: seed dimension mismatch");
        if (eb.insert_codes(s)) queue.push_back(s);
    }
    for (size_t i = 0; i < queue.size() && eb.size() < m.dim(); ++i) {
        for (size_t gi = 0; gi < m.num_gens(); ++gi) {
            std::vector<fel> img = m.apply_gen(queue[i], gi);
            if (eb.insert_codes(img)) queue.push_back(std::move(img));
        }
    }
    return eb.basis_matrix();
}

inline bool is_submodule_basis(const GModule& m, const Mat& basis) {
    EchelonBasis eb(m.field(), m.dim());
    for (size_t i = 0; i < basis.rows(); ++i) eb.insert_codes(basis.row_codes(i));
    for (size_t i = 0; i < basis.rows(); ++i)
        for (size_t gi = 0; gi < m.num_gens(); ++gi)
            if (!eb.contains(m.apply_gen(basis.row_codes(i), gi))) return false;
    return true;
}

// Express rows of (basis * M_g) in basis coordinates: the restricted action.
inline GModule submodule(const GModule& m, const Mat& basis_in) {
    Mat basis = basis_in;
    std::vector<size_t> piv;
    size_t r = basis.rref(&piv);
    basis = basis.take_rows(r);
    std::vector<Mat> act;
    for (size_t gi = 0; gi < m.num_gens(); ++gi) {
        Mat a(m.field(), r, r);
        for (size_t i = 0; i < r; ++i) {
            std::vector<fel> img = m.apply_gen(basis.row_codes(i), gi);
            // coordinates against the rref basis: coefficient at pivot columns
            for (size_t k = 0; k < r; ++k) {
                fel c = img[piv[k]];
                a.set(i, k, c);
                if (c) {
                    const Field& F = m.field();
                    for (size_t j = 0; j < m.dim(); ++j)
                        img[j] = F.sub(img[j], F.mul(c, basis.get(k, j)));
                }
            }
            for (fel v : img)
                if (v) throw ComputeError("submodule: basis is not G-invariant");
        }
        act.push_back(std::move(a));
    }
    return GModule(m.group(), m.field(), r, std::move(act));
}

// Quotient by the submodule spanned by basis_in; coordinates are the
// non-pivot columns.
inline GModule quotient_module(const GModule& m, const Mat& basis_in) {
    Mat basis = basis_in;
    std::vector<size_t> piv;
    size_t r = basis.rref(&piv);
    basis = basis.take_rows(r);
    std::vector<bool> is_piv(m.dim(), false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<size_t> freecols;
    for (size_t c = 0; c < m.dim(); ++c)
        if (!is_piv[c]) freecols.push_back(c);
    size_t qd = freecols.size();
    const Field& F = m.field();
    std::vector<Mat> act;
    for (size_t gi = 0; gi < m.num_gens(); ++gi) {
        Mat a(F, qd, qd);
        for (size_t i = 0; i < qd; ++i) {
            std::vector<fel> v(m.dim(), 0);
            v[freecols[i]] = 1;
            std::vector<fel> img = m.apply_gen(v, gi);
            // reduce modulo the submodule
            for (size_t k = 0; k < r; ++k) {
                fel c = img[piv[k]];
                if (c)
                    for (size_t j = 0; j < m.dim(); ++j) img[j] = F.sub(img[j], F.mul(c, basis.get(k, j)));
            }
            for (size_t k = 0; k < qd; ++k) a.set(i, k, img[freecols[k]]);
        }
        act.push_back(std::move(a));
    }
    return GModule(m.group(), F, qd, std::move(act));
}

}  // namespace progen
