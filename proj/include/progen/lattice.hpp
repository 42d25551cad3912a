// Subgroup lattices of small groups: complete enumeration by cyclic-extension
// closure, Mobius values, maximal subgroups, the Frattini subgroup, and
// quotient group construction. Everything here works on element indices of a
// parent group's ElementTable and is limited by the lattice cap.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "progen/group.hpp"

namespace progen {

// Subgroup of a fixed parent group, as a sorted vector of element indices.
struct Subgroup {
    std::vector<uint32_t> elems;  // sorted, always contains 0 (identity)
    std::vector<uint32_t> gens;   // element indices that generate it

    size_t order() const { return elems.size(); }
    bool contains_element(uint32_t e) const {
        return std::binary_search(elems.begin(), elems.end(), e);
    }
    bool contains(const Subgroup& other) const {
        return std::includes(elems.begin(), elems.end(), other.elems.begin(), other.elems.end());
    }
};

// Closure of a seed set under multiplication, via the element table.
inline std::vector<uint32_t> subgroup_closure(const ElementTable& T, std::vector<uint32_t> seed) {
    std::vector<bool> in(T.size(), false);
    std::vector<uint32_t> members{0};
    in[0] = true;
    std::vector<uint32_t> gens;
    for (uint32_t s : seed)
        if (!in[s]) { in[s] = true; members.push_back(s); gens.push_back(s); }
    // Orbit algorithm: right-words in the generators exhaust the subgroup
    // (inverses are positive powers in a finite group).
    for (size_t i = 0; i < members.size(); ++i) {
        for (uint32_t g : gens) {
            uint32_t m = T.mult(members[i], g);
            if (!in[m]) { in[m] = true; members.push_back(m); }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

inline Subgroup make_subgroup(const ElementTable& T, std::vector<uint32_t> gens) {
    Subgroup s;
    s.elems = subgroup_closure(T, gens);
    s.gens = std::move(gens);
    return s;
}

// Normal closure of seed under the whole parent group (generators of the
// parent act by conjugation).
inline Subgroup normal_closure_elems(const PermGroup& G, const ElementTable& T,
                                     const std::vector<uint32_t>& seed) {
    std::vector<bool> in(T.size(), false);
    std::vector<uint32_t> members{0};
    in[0] = true;
    std::vector<uint32_t> work;
    auto push = [&](uint32_t e) {
        if (!in[e]) {
            in[e] = true;
            members.push_back(e);
            work.push_back(e);
        }
    };
    for (uint32_t s : seed) push(s);
    std::vector<uint32_t> genidx;
    for (size_t gi = 0; gi < G.gens().size(); ++gi) {
        auto idx = T.index_of(G.gens()[gi]);
        genidx.push_back(*idx);
    }
    while (!work.empty()) {
        uint32_t x = work.back();
        work.pop_back();
        for (uint32_t g : genidx) push(T.conj(x, g));
        // close under products with current members
        size_t n = members.size();
        for (size_t i = 0; i < n; ++i) {
            uint32_t m = T.mult(members[i], x);
            if (!in[m]) push(m);
            m = T.mult(x, members[i]);
            if (!in[m]) push(m);
        }
    }
    std::sort(members.begin(), members.end());
    Subgroup s;
    s.elems = std::move(members);
    s.gens = seed;
    return s;
}

class SubgroupLattice {
public:
    explicit SubgroupLattice(const PermGroup& G, size_t cap = Caps::global().lattice) : G_(&G) {
        if (G.order() > BigInt(static_cast<unsigned long long>(cap)))
            throw CapExceeded("SubgroupLattice: group order exceeds lattice cap");
        T_ = &G.elements(cap);
        build();
    }

    const PermGroup& group() const { return *G_; }
    const ElementTable& table() const { return *T_; }
    size_t size() const { return subs_.size(); }
    const Subgroup& at(size_t i) const { return subs_[i]; }
    size_t top() const { return top_; }
    size_t bottom() const { return bottom_; }

    long long mobius(size_t i) const { return mobius_[i]; }

    std::vector<size_t> maximal_subgroups() const {
        std::vector<size_t> maxs;
        for (size_t i = 0; i < subs_.size(); ++i) {
            if (i == top_) continue;
            bool maximal = true;
            for (size_t j = 0; j < subs_.size() && maximal; ++j) {
                if (j == i || j == top_) continue;
                if (subs_[i].order() < subs_[j].order() && subs_[j].contains(subs_[i])) maximal = false;
            }
            if (maximal) maxs.push_back(i);
        }
        return maxs;
    }

    Subgroup frattini() const {
        std::vector<size_t> maxs = maximal_subgroups();
        if (maxs.empty()) {  // trivial group
            Subgroup s;
            s.elems = {0};
            return s;
        }
        std::vector<uint32_t> inter = subs_[maxs[0]].elems;
        for (size_t k = 1; k < maxs.size(); ++k) {
            std::vector<uint32_t> next;
            std::set_intersection(inter.begin(), inter.end(), subs_[maxs[k]].elems.begin(),
                                  subs_[maxs[k]].elems.end(), std::back_inserter(next));
            inter = std::move(next);
        }
        Subgroup s;
        s.elems = std::move(inter);
        s.gens.assign(s.elems.begin(), s.elems.end());
        return s;
    }

    bool is_normal(size_t i) const { return is_normal(subs_[i]); }
    bool is_normal(const Subgroup& H) const {
        for (uint32_t g : gen_idx_)
            for (uint32_t h : H.elems)
                if (!H.contains_element(T_->conj(h, g))) return false;
        return true;
    }

    // Index of a subgroup given by its element set, if present.
    std::optional<size_t> find(const std::vector<uint32_t>& elems) const {
        auto it = index_.find(elems);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<uint32_t>& parent_gen_indices() const { return gen_idx_; }

private:
    const PermGroup* G_;
    const ElementTable* T_;
    std::vector<Subgroup> subs_;
    std::map<std::vector<uint32_t>, size_t> index_;
    std::vector<long long> mobius_;
    std::vector<uint32_t> gen_idx_;
    size_t top_ = 0, bottom_ = 0;

    void build() {
        const ElementTable& T = *T_;
        for (const Perm& g : G_->gens()) gen_idx_.push_back(*T.index_of(g));

        auto add = [&](Subgroup s) -> size_t {
            auto it = index_.find(s.elems);
            if (it != index_.end()) return it->second;
            size_t id = subs_.size();
            index_[s.elems] = id;
            subs_.push_back(std::move(s));
            return id;
        };

        Subgroup triv;
        triv.elems = {0};
        add(triv);

        // Elements of prime-power order suffice as extension steps: every
        // subgroup is generated by the prime-power parts of its elements.
        // One representative per cyclic subgroup keeps the pair count down.
        std::vector<uint32_t> candidates;
        std::map<std::vector<uint32_t>, uint32_t> cyclic_seen;
        for (uint32_t e = 1; e < T.size(); ++e) {
            uint64_t ord = T.perm(e).order();
            uint64_t p = 0;
            for (uint64_t d = 2; d * d <= ord; ++d)
                if (ord % d == 0) { p = d; break; }
            if (p == 0) p = ord;
            uint64_t t = ord;
            while (t % p == 0) t /= p;
            if (t != 1) continue;
            std::vector<uint32_t> cyc = subgroup_closure(T, {e});
            if (cyclic_seen.emplace(std::move(cyc), e).second) candidates.push_back(e);
        }

        // Cyclic-extension closure to a fixpoint.
        for (size_t i = 0; i < subs_.size(); ++i) {
            for (uint32_t c : candidates) {
                if (subs_[i].contains_element(c)) continue;
                std::vector<uint32_t> seed = subs_[i].gens;
                seed.push_back(c);
                Subgroup ext;
                ext.elems = subgroup_closure(T, seed);
                ext.gens = std::move(seed);
                add(std::move(ext));
            }
        }

        top_ = *find_full();
        bottom_ = index_.at(std::vector<uint32_t>{0});
        compute_mobius();
    }

    std::optional<size_t> find_full() const {
        for (size_t i = 0; i < subs_.size(); ++i)
            if (subs_[i].order() == T_->size()) return i;
        return std::nullopt;
    }

    void compute_mobius() {
        // mu(H,G): process by descending order; mu(G,G)=1, and for H < G:
        // sum over K >= H of mu(K,G) equals 0.
        size_t n = subs_.size();
        std::vector<size_t> by_order(n);
        std::iota(by_order.begin(), by_order.end(), 0);
        std::sort(by_order.begin(), by_order.end(), [&](size_t a, size_t b) {
            return subs_[a].order() > subs_[b].order();
        });
        mobius_.assign(n, 0);
        mobius_[top_] = 1;
        for (size_t idx : by_order) {
            if (idx == top_) continue;
            long long acc = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == idx) continue;
                if (subs_[j].order() > subs_[idx].order() && subs_[j].contains(subs_[idx]))
                    acc += mobius_[j];
            }
            mobius_[idx] = -acc;
        }
    }
};

// Quotient group G/N for a normal subgroup given by element indices. The
// quotient permutes the right cosets of N; its generator list parallels the
// parent's generator list (identity images are kept).
struct QuotientGroup {
    PermGroup Q;
    std::vector<uint32_t> proj;       // parent element index -> coset point
    std::vector<uint32_t> coset_rep;  // coset point -> least parent element index
};

inline QuotientGroup quotient_by(const PermGroup& G, const ElementTable& T,
                                 const std::vector<uint32_t>& normal_elems) {
    std::vector<uint32_t> cosetid(T.size(), UINT32_MAX);
    std::vector<uint32_t> reps;
    for (uint32_t e = 0; e < T.size(); ++e) {
        if (cosetid[e] != UINT32_MAX) continue;
        uint32_t id = static_cast<uint32_t>(reps.size());
        reps.push_back(e);
        for (uint32_t n : normal_elems) cosetid[T.mult(n, e)] = id;  // coset N*e
        if (cosetid[e] != id) throw ComputeError("quotient_by: subgroup not normal or not closed");
    }
    size_t deg = reps.size();
    std::vector<Perm> qgens;
    for (size_t gi = 0; gi < G.gens().size(); ++gi) {
        uint32_t g = *T.index_of(G.gens()[gi]);
        std::vector<uint32_t> img(deg);
        for (uint32_t c = 0; c < deg; ++c) img[c] = cosetid[T.mult(reps[c], g)];
        qgens.emplace_back(img);
    }
    QuotientGroup qg;
    qg.Q = PermGroup(deg == 0 ? 1 : deg, std::move(qgens), G.name() + "/N");
    qg.proj = std::move(cosetid);
    qg.coset_rep = std::move(reps);
    return qg;
}

// Homomorphism f: H -> G specified by generator images. Enumerates the graph
// subgroup of H x G; exposes the kernel and surjectivity.
struct HomGraph {
    bool surjective;
    std::vector<uint32_t> kernel_elems;  // element indices in H's table
    std::vector<uint32_t> image_of;      // H element index -> G element index
};

inline HomGraph hom_graph(const PermGroup& H, const PermGroup& G, const std::vector<Perm>& gen_images,
                          size_t cap = Caps::global().element_enum) {
    if (gen_images.size() != H.gens().size())
        throw std::invalid_argument("hom_graph: need one image per generator");
    const ElementTable& TH = H.elements(cap);
    const ElementTable& TG = G.elements(cap);
    std::vector<uint32_t> gimg;
    for (const Perm& p : gen_images) {
        auto idx = TG.index_of(p);
        if (!idx) throw std::invalid_argument("hom_graph: generator image not in codomain");
        gimg.push_back(*idx);
    }
    std::vector<uint32_t> image_of(TH.size(), UINT32_MAX);
    image_of[0] = 0;
    // BFS along H's element words; conflicts mean the map is not well defined.
    for (uint32_t e = 1; e < TH.size(); ++e) {
        auto w = TH.word(e);
        uint32_t img = 0;
        for (uint32_t gi : w) img = TG.mult(img, gimg[gi]);
        image_of[e] = img;
    }
    // well-definedness check: multiplicativity on generator steps
    for (uint32_t e = 0; e < TH.size(); ++e)
        for (size_t gi = 0; gi < gimg.size(); ++gi)
            if (image_of[TH.rmul_gen(e, static_cast<uint32_t>(gi))] != TG.mult(image_of[e], gimg[gi]))
                throw std::invalid_argument("hom_graph: generator images do not define a homomorphism");
    std::vector<bool> hit(TG.size(), false);
    HomGraph hg;
    for (uint32_t e = 0; e < TH.size(); ++e) {
        hit[image_of[e]] = true;
        if (image_of[e] == 0) hg.kernel_elems.push_back(e);
    }
    hg.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    hg.image_of = std::move(image_of);
    return hg;
}

// ker f subseteq Phi(H) for a surjective homomorphism f: H -> G.
inline bool is_frattini_cover(const PermGroup& H, const PermGroup& G, const std::vector<Perm>& gen_images,
                              size_t lattice_cap = Caps::global().lattice) {
    HomGraph hg = hom_graph(H, G, gen_images);
    if (!hg.surjective) throw std::invalid_argument("is_frattini_cover: map is not surjective");
    SubgroupLattice L(H, lattice_cap);
    Subgroup phi = L.frattini();
    for (uint32_t k : hg.kernel_elems)
        if (!phi.contains_element(k)) return false;
    return true;
}

}  // namespace progen
