// Finite permutation groups. A PermGroup carries its generators plus two
// lazily built caches: a stabilizer chain (order, membership, uniform
// sampling at any size we handle) and an element table (BFS enumeration with
// generator words, for groups up to the enumeration cap).
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "progen/bigint.hpp"
#include "progen/perm.hpp"
#include "progen/rng.hpp"

namespace progen {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct ComputeError : std::runtime_error {
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic Schreier-Sims stabilizer chain with Schreier-vector
// transversals (transversal elements are rebuilt on demand). Level l's
// orbit is computed under every strong generator fixing the first l base
// points, i.e. the generators stored at levels >= l.
class StabChain {
public:
    explicit StabChain(size_t degree, const std::vector<Perm>& gens) : degree_(degree) {
        for (const Perm& g : gens) add(g);
        close();
    }

    BigInt order() const {
        BigInt o{1};
        for (const auto& lv : levels_) o *= BigInt(static_cast<unsigned long long>(lv.orbit.size()));
        return o;
    }
    unsigned long long order_u64() const { return order().to_u64(); }

    bool contains(const Perm& g) const {
        auto [res, lvl] = sift(g, 0);
        return res.is_identity();
    }

    size_t depth() const { return levels_.size(); }

    Perm random_element(Rng& rng) const {
        Perm g(degree_);
        for (size_t l = levels_.size(); l-- > 0;) {
            const auto& orb = levels_[l].orbit;
            uint32_t pt = orb[rng.below(orb.size())];
            g = g * transversal(l, pt);
        }
        return g;
    }

private:
    struct Level {
        uint32_t base = 0;
        std::vector<Perm> own_gens;                // strong generators first placed here
        std::vector<Perm> acting, acting_inv;      // union of own_gens over levels >= this
        std::vector<uint32_t> orbit;               // BFS order; orbit[0] == base
        std::vector<int32_t> svec;                 // point -> acting index, -1 root, -2 outside
    };

    size_t degree_;
    std::vector<Level> levels_;

    void recompute_orbits() {
        for (size_t l = levels_.size(); l-- > 0;) {
            Level& lv = levels_[l];
            lv.acting.clear();
            lv.acting_inv.clear();
            for (size_t j = l; j < levels_.size(); ++j)
                for (const Perm& g : levels_[j].own_gens) {
                    lv.acting.push_back(g);
                    lv.acting_inv.push_back(g.inverse());
                }
            lv.svec.assign(degree_, -2);
            lv.orbit.clear();
            lv.svec[lv.base] = -1;
            lv.orbit.push_back(lv.base);
            for (size_t i = 0; i < lv.orbit.size(); ++i) {
                uint32_t pt = lv.orbit[i];
                for (size_t gi = 0; gi < lv.acting.size(); ++gi) {
                    uint32_t im = lv.acting[gi][pt];
                    if (lv.svec[im] == -2) {
                        lv.svec[im] = static_cast<int32_t>(gi);
                        lv.orbit.push_back(im);
                    }
                }
            }
        }
    }

    Perm transversal(size_t l, uint32_t pt) const {
        const Level& lv = levels_[l];
        std::vector<uint32_t> path;
        while (pt != lv.base) {
            int32_t gi = lv.svec[pt];
            path.push_back(static_cast<uint32_t>(gi));
            pt = lv.acting_inv[gi][pt];
        }
        Perm u(degree_);
        for (size_t i = path.size(); i-- > 0;) u = u * lv.acting[path[i]];
        return u;
    }

    // Returns (residue, level index where sifting stopped).
    std::pair<Perm, size_t> sift(Perm g, size_t from) const {
        for (size_t l = from; l < levels_.size(); ++l) {
            uint32_t pt = g[levels_[l].base];
            if (pt == levels_[l].base) continue;
            if (levels_[l].svec[pt] == -2) return {g, l};
            g = g * transversal(l, pt).inverse();
        }
        return {g, levels_.size()};
    }

    // Sift g and place a nonzero residue as a strong generator. Returns true
    // if the chain grew.
    bool add(const Perm& g) {
        if (g.is_identity()) return false;
        auto [res, depth] = sift(g, 0);
        if (res.is_identity()) return false;
        if (depth == levels_.size()) {
            Level lv;
            for (uint32_t i = 0; i < degree_; ++i)
                if (res[i] != i) { lv.base = i; break; }
            levels_.push_back(std::move(lv));
        }
        levels_[depth].own_gens.push_back(res);
        recompute_orbits();
        return true;
    }

    // Iterate Schreier-generator verification over all levels to a fixpoint.
    void close() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t l = 0; l < levels_.size() && !changed; ++l) {
                const Level& lv = levels_[l];
                for (size_t oi = 0; oi < lv.orbit.size() && !changed; ++oi) {
                    uint32_t pt = lv.orbit[oi];
                    Perm u = transversal(l, pt);
                    for (size_t gi = 0; gi < lv.acting.size() && !changed; ++gi) {
                        uint32_t im = lv.acting[gi][pt];
                        Perm schreier = u * lv.acting[gi] * transversal(l, im).inverse();
                        changed = add(schreier);
                    }
                }
            }
        }
    }
};

// BFS element enumeration of a small group: element list with generator
// words, right/left multiplication-by-generator tables and inverses.
class ElementTable {
public:
    ElementTable(size_t degree, const std::vector<Perm>& gens, size_t cap) {
        std::map<std::vector<uint32_t>, uint32_t> index;
        Perm id(degree);
        elems_.push_back(id);
        index[id.images()] = 0;
        parent_.push_back({0, 0});
        rmul_.assign(gens.size(), {});
        for (size_t i = 0; i < elems_.size(); ++i) {
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                Perm next = elems_[i] * gens[gi];
                auto it = index.find(next.images());
                uint32_t idx;
                if (it == index.end()) {
                    if (elems_.size() >= cap) throw CapExceeded("ElementTable: enumeration cap exceeded");
                    idx = static_cast<uint32_t>(elems_.size());
                    elems_.push_back(next);
                    index[next.images()] = idx;
                    parent_.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(gi)});
                } else {
                    idx = it->second;
                }
                rmul_[gi].push_back(idx);
            }
        }
        size_t n = elems_.size();
        lmul_.assign(gens.size(), std::vector<uint32_t>(n));
        inv_.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            inv_[i] = index.at(elems_[i].inverse().images());
            for (size_t gi = 0; gi < gens.size(); ++gi)
                lmul_[gi][i] = index.at((gens[gi] * elems_[i]).images());
        }
        index_ = std::move(index);
    }

    size_t size() const { return elems_.size(); }
    const Perm& perm(uint32_t i) const { return elems_[i]; }
    uint32_t inverse(uint32_t i) const { return inv_[i]; }
    uint32_t rmul_gen(uint32_t i, uint32_t gen) const { return rmul_[gen][i]; }
    uint32_t lmul_gen(uint32_t gen, uint32_t i) const { return lmul_[gen][i]; }

    std::optional<uint32_t> index_of(const Perm& p) const {
        auto it = index_.find(p.images());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Word in generator indices with elems[i] = g_{w0} * g_{w1} * ... (left
    // to right products).
    std::vector<uint32_t> word(uint32_t i) const {
        std::vector<uint32_t> w;
        while (i != 0) {
            w.push_back(parent_[i].second);
            i = parent_[i].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

    // Index of elems[i] * elems[j], via j's generator word.
    uint32_t mult(uint32_t i, uint32_t j) const {
        uint32_t m = i;
        uint32_t cur = j;
        thread_local std::vector<uint32_t> w;
        w.clear();
        while (cur != 0) {
            w.push_back(parent_[cur].second);
            cur = parent_[cur].first;
        }
        for (size_t k = w.size(); k-- > 0;) m = rmul_[w[k]][m];
        return m;
    }
    uint32_t conj(uint32_t x, uint32_t by) const { return mult(mult(inv_[by], x), by); }

private:
    std::vector<Perm> elems_;
    std::vector<std::pair<uint32_t, uint32_t>> parent_;  // (parent element, generator)
    std::vector<std::vector<uint32_t>> rmul_, lmul_;
    std::vector<uint32_t> inv_;
    std::map<std::vector<uint32_t>, uint32_t> index_;
};

struct Caps {
    size_t lattice = 500;
    size_t element_enum = 10000;
    size_t chop = 4096;           // over F2; scaled by log2(q)
    size_t projective = 300;      // dim F_q[G]
    size_t bar_columns = 200000;  // (|G|-1)^n * dim M
    unsigned long long tuple_enum = 1ull << 24;
    size_t extension_order = 10000;
    static Caps& global() {
        static Caps c;
        return c;
    }
};

class PermGroup {
public:
    PermGroup() : degree_(1) {}
    PermGroup(size_t degree, std::vector<Perm> gens, std::string name = "")
        : degree_(degree), gens_(std::move(gens)), name_(std::move(name)) {
        for (const Perm& g : gens_)
            if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
    }

    size_t degree() const { return degree_; }
    const std::vector<Perm>& gens() const { return gens_; }
    const std::string& name() const { return name_; }

    const StabChain& chain() const {
        if (!chain_) chain_ = std::make_shared<StabChain>(degree_, gens_);
        return *chain_;
    }
    BigInt order() const { return chain().order(); }
    unsigned long long order_u64() const { return chain().order_u64(); }
    bool contains(const Perm& g) const { return g.degree() == degree_ && chain().contains(g); }
    Perm random_element(Rng& rng) const { return chain().random_element(rng); }

    const ElementTable& elements(size_t cap = Caps::global().element_enum) const {
        if (!table_) table_ = std::make_shared<ElementTable>(degree_, gens_, cap);
        return *table_;
    }
    bool has_element_table() const { return static_cast<bool>(table_); }

    // Subgroup of the same degree generated by the given permutations.
    static PermGroup generated(size_t degree, std::vector<Perm> gens, std::string name = "") {
        return PermGroup(degree, std::move(gens), std::move(name));
    }

    // <gens ∪ conjugates> = smallest normal subgroup of *this containing gens.
    PermGroup normal_closure(const std::vector<Perm>& seed) const {
        std::vector<Perm> closure_gens;
        for (const Perm& s : seed)
            if (!s.is_identity()) closure_gens.push_back(s);
        StabChain hc(degree_, closure_gens);
        for (size_t i = 0; i < closure_gens.size(); ++i) {
            for (const Perm& g : gens_) {
                Perm c = closure_gens[i].conj(g);
                if (!hc.contains(c)) {
                    closure_gens.push_back(c);
                    hc = StabChain(degree_, closure_gens);
                }
            }
        }
        return PermGroup(degree_, std::move(closure_gens));
    }

    PermGroup derived_subgroup() const {
        std::vector<Perm> comms;
        for (const Perm& a : gens_)
            for (const Perm& b : gens_) {
                Perm c = a.inverse() * b.inverse() * a * b;
                if (!c.is_identity()) comms.push_back(c);
            }
        return normal_closure(comms);
    }
    bool is_perfect() const {
        if (order() == BigInt(1)) return true;
        return derived_subgroup().order() == order();
    }

    bool is_normal_in(const PermGroup& G) const {
        for (const Perm& h : gens_)
            for (const Perm& g : G.gens())
                if (!contains(h.conj(g))) return false;
        return true;
    }

private:
    size_t degree_;
    std::vector<Perm> gens_;
    std::string name_;
    mutable std::shared_ptr<StabChain> chain_;
    mutable std::shared_ptr<ElementTable> table_;
};

// ---- named constructors --------------------------------------------------

inline PermGroup trivial_group() { return PermGroup(1, {}, "1"); }

inline PermGroup cyclic_group(uint32_t n) {
    if (n <= 1) return trivial_group();
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return PermGroup(n, {Perm(img)}, "C" + std::to_string(n));
}

inline PermGroup dihedral_group(uint32_t n) {  // order 2n, n >= 3
    if (n < 3) throw std::invalid_argument("dihedral_group: need n >= 3");
    std::vector<uint32_t> rot(n), refl(n);
    for (uint32_t i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return PermGroup(n, {Perm(rot), Perm(refl)}, "D" + std::to_string(n));
}

inline PermGroup symmetric_group(uint32_t n) {
    if (n <= 1) return trivial_group();
    std::vector<uint32_t> cyc(n), tr(n);
    for (uint32_t i = 0; i < n; ++i) { cyc[i] = (i + 1) % n; tr[i] = i; }
    tr[0] = 1;
    tr[1] = 0;
    if (n == 2) return PermGroup(2, {Perm(tr)}, "S2");
    return PermGroup(n, {Perm(tr), Perm(cyc)}, "S" + std::to_string(n));
}

inline PermGroup alternating_group(uint32_t n) {
    if (n < 3) return trivial_group();
    std::vector<uint32_t> three(n);
    for (uint32_t i = 0; i < n; ++i) three[i] = i;
    three[0] = 1; three[1] = 2; three[2] = 0;
    if (n == 3) return PermGroup(3, {Perm(three)}, "A3");
    std::vector<uint32_t> big(n);
    for (uint32_t i = 0; i < n; ++i) big[i] = i;
    if (n % 2 == 1) {
        for (uint32_t i = 0; i < n; ++i) big[i] = (i + 1) % n;  // n-cycle, even
    } else {
        for (uint32_t i = 1; i < n; ++i) big[i] = 1 + (i % (n - 1));  // (n-1)-cycle on 1..n-1
    }
    return PermGroup(n, {Perm(three), Perm(big)}, "A" + std::to_string(n));
}

inline PermGroup klein_four_group() {
    return PermGroup(4, {Perm(std::vector<uint32_t>{1, 0, 3, 2}), Perm(std::vector<uint32_t>{2, 3, 0, 1})}, "C2xC2");
}

inline PermGroup quaternion_group() {
    // Right regular action on 1,i,j,k,-1,-i,-j,-k.
    std::vector<uint32_t> mi{1, 4, 7, 2, 5, 0, 3, 6};  // x -> x*i
    std::vector<uint32_t> mj{2, 3, 4, 5, 6, 7, 0, 1};  // x -> x*j
    return PermGroup(8, {Perm(mi), Perm(mj)}, "Q8");
}

inline PermGroup direct_product(const PermGroup& A, const PermGroup& B, std::string name = "") {
    size_t d = A.degree() + B.degree();
    std::vector<Perm> gens;
    for (const Perm& g : A.gens()) {
        std::vector<uint32_t> img(d);
        for (size_t i = 0; i < A.degree(); ++i) img[i] = g[i];
        for (size_t i = 0; i < B.degree(); ++i) img[A.degree() + i] = static_cast<uint32_t>(A.degree() + i);
        gens.emplace_back(img);
    }
    for (const Perm& g : B.gens()) {
        std::vector<uint32_t> img(d);
        for (size_t i = 0; i < A.degree(); ++i) img[i] = static_cast<uint32_t>(i);
        for (size_t i = 0; i < B.degree(); ++i) img[A.degree() + i] = static_cast<uint32_t>(A.degree() + g[i]);
        gens.emplace_back(img);
    }
    if (name.empty()) name = A.name() + "x" + B.name();
    return PermGroup(d, std::move(gens), std::move(name));
}

// SL(2,5) acting on the 24 nonzero row vectors of F5^2: the double cover of
// A5 realized concretely.
inline PermGroup sl25_group() {
    auto idx = [](uint32_t x, uint32_t y) {  // nonzero (x,y), 0-based dense index
        uint32_t k = x * 5 + y;
        return k - 1;  // (0,0) excluded; all others shift down by one
    };
    auto act = [&](int a, int b, int c, int d) {  // (x,y) -> (x,y)*[[a,b],[c,d]]
        std::vector<uint32_t> img(24);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) {
                if (x == 0 && y == 0) continue;
                uint32_t nx = static_cast<uint32_t>(((x * a + y * c) % 5 + 5) % 5);
                uint32_t ny = static_cast<uint32_t>(((x * b + y * d) % 5 + 5) % 5);
                img[idx(static_cast<uint32_t>(x), static_cast<uint32_t>(y))] = idx(nx, ny);
            }
        return Perm(img);
    };
    return PermGroup(24, {act(1, 1, 0, 1), act(0, -1, 1, 0)}, "SL25");
}

// Registry of named groups addressable by id strings.
inline PermGroup named_group(const std::string& id) {
    if (id == "1" || id == "C1" || id == "triv") return trivial_group();
    if (id == "Q8") return quaternion_group();
    if (id == "V4" || id == "C2xC2") return klein_four_group();
    if (id == "C2xC4") return direct_product(cyclic_group(2), cyclic_group(4), "C2xC4");
    if (id == "SL25") return sl25_group();
    if (id.size() > 1 && (id[0] == 'C' || id[0] == 'D' || id[0] == 'S' || id[0] == 'A')) {
        bool digits = true;
        for (size_t i = 1; i < id.size(); ++i) digits = digits && id[i] >= '0' && id[i] <= '9';
        if (digits) {
            uint32_t n = static_cast<uint32_t>(std::stoul(id.substr(1)));
            switch (id[0]) {
                case 'C': return cyclic_group(n);
                case 'D': return dihedral_group(n);
                case 'S': return symmetric_group(n);
                case 'A': return alternating_group(n);
            }
        }
    }
    auto x = id.find('x');
    if (x != std::string::npos)
        return direct_product(named_group(id.substr(0, x)), named_group(id.substr(x + 1)), id);
    throw std::invalid_argument("named_group: unknown id '" + id + "'");
}

}  // namespace progen
