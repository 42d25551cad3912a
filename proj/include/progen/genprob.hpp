// Exact and Monte-Carlo generation probabilities for groups, plus normal
// generation. On a finite group the normalized Haar measure is the uniform
// counting measure, so every exact probability is a rational count/|G|^k.
#pragma once

#include <cmath>

#include "progen/lattice.hpp"
#include "progen/rational.hpp"

namespace progen {

// P(G,k) as the Mobius-weighted sum over the subgroup lattice:
// sum_H mu(H,G) |H|^k / |G|^k.
inline ExactProbability gen_prob_exact(const SubgroupLattice& L, unsigned k) {
    BigInt num(0);
    for (size_t i = 0; i < L.size(); ++i) {
        BigInt term = BigInt::pow(BigInt(static_cast<unsigned long long>(L.at(i).order())), k);
        num += BigInt(static_cast<long long>(L.mobius(i))) * term;
    }
    BigInt den = BigInt::pow(BigInt(static_cast<unsigned long long>(L.table().size())), k);
    return ExactProbability(num, den);
}

inline ExactProbability gen_prob_exact(const PermGroup& G, unsigned k,
                                       size_t cap = Caps::global().lattice) {
    if (G.order_u64() == 1) return ExactProbability(1);
    SubgroupLattice L(G, cap);
    return gen_prob_exact(L, k);
}

// Exhaustive oracle: count generating k-tuples directly.
inline ExactProbability gen_prob_exhaustive(const PermGroup& G, unsigned k,
                                            unsigned long long cap = Caps::global().tuple_enum) {
    const ElementTable& T = G.elements();
    size_t n = T.size();
    double total_d = std::pow(static_cast<double>(n), static_cast<double>(k));
    if (total_d > static_cast<double>(cap)) throw CapExceeded("gen_prob_exhaustive: |G|^k over cap");
    std::vector<uint32_t> tuple(k, 0);
    unsigned long long hits = 0, total = 1;
    for (unsigned i = 0; i < k; ++i) total *= n;
    for (unsigned long long t = 0; t < total; ++t) {
        unsigned long long v = t;
        for (unsigned i = 0; i < k; ++i) { tuple[i] = static_cast<uint32_t>(v % n); v /= n; }
        if (subgroup_closure(T, tuple).size() == n) ++hits;
    }
    return ExactProbability(BigInt(hits), BigInt(total));
}

struct McEstimate {
    double estimate;
    double sigma;          // binomial standard error
    double ci_low, ci_high;  // 95% normal-approximation interval
    unsigned long long successes, trials;
};

// Monte-Carlo P(G,k): k chain-uniform elements per trial, success when the
// generated subgroup has full order. Deterministic for a fixed seed.
inline McEstimate gen_prob_mc(const PermGroup& G, unsigned k, unsigned long long trials, uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("gen_prob_mc: trials must be >= 1");
    Rng rng = Rng::stream(seed, 0);
    BigInt target = G.order();
    unsigned long long succ = 0;
    for (unsigned long long t = 0; t < trials; ++t) {
        std::vector<Perm> tuple;
        tuple.reserve(k);
        for (unsigned i = 0; i < k; ++i) tuple.push_back(G.random_element(rng));
        if (StabChain(G.degree(), tuple).order() == target) ++succ;
    }
    McEstimate e;
    e.successes = succ;
    e.trials = trials;
    e.estimate = static_cast<double>(succ) / static_cast<double>(trials);
    e.sigma = std::sqrt(std::max(e.estimate * (1 - e.estimate), 1e-12) / static_cast<double>(trials));
    e.ci_low = e.estimate - 1.96 * e.sigma;
    e.ci_high = e.estimate + 1.96 * e.sigma;
    return e;
}

// Normal closure of a tuple of elements of A inside G; exact
// P^G(A,k) = #{tuples in A^k with <tuple>^G = A} / |A|^k.
inline ExactProbability normal_gen_prob(const PermGroup& G, const Subgroup& A, unsigned k,
                                        unsigned long long cap = Caps::global().tuple_enum) {
    const ElementTable& T = G.elements();
    size_t a = A.elems.size();
    double total_d = std::pow(static_cast<double>(a), static_cast<double>(k));
    if (total_d > static_cast<double>(cap)) throw CapExceeded("normal_gen_prob: |A|^k over cap");
    unsigned long long total = 1;
    for (unsigned i = 0; i < k; ++i) total *= a;
    unsigned long long hits = 0;
    std::vector<uint32_t> seed(k);
    for (unsigned long long t = 0; t < total; ++t) {
        unsigned long long v = t;
        for (unsigned i = 0; i < k; ++i) { seed[i] = A.elems[v % a]; v /= a; }
        Subgroup cl = normal_closure_elems(G, T, seed);
        if (cl.elems == A.elems) ++hits;
    }
    return ExactProbability(BigInt(hits), BigInt(total));
}

// Monte-Carlo analog for |A|^k beyond the cap.
inline McEstimate normal_gen_prob_mc(const PermGroup& G, const Subgroup& A, unsigned k,
                                     unsigned long long trials, uint64_t seed) {
    const ElementTable& T = G.elements();
    Rng rng = Rng::stream(seed, 1);
    unsigned long long succ = 0;
    std::vector<uint32_t> tuple(k);
    for (unsigned long long t = 0; t < trials; ++t) {
        for (unsigned i = 0; i < k; ++i) tuple[i] = A.elems[rng.below(A.elems.size())];
        if (normal_closure_elems(G, T, tuple).elems == A.elems) ++succ;
    }
    McEstimate e;
    e.successes = succ;
    e.trials = trials;
    e.estimate = static_cast<double>(succ) / static_cast<double>(trials);
    e.sigma = std::sqrt(std::max(e.estimate * (1 - e.estimate), 1e-12) / static_cast<double>(trials));
    e.ci_low = e.estimate - 1.96 * e.sigma;
    e.ci_high = e.estimate + 1.96 * e.sigma;
    return e;
}

}  // namespace progen
