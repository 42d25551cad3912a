// Hom spaces into irreducibles and everything the generation-probability
// formulas need: head multiplicities, minimal generator numbers, the exact
// product formula for P(N,k) with its enumeration oracle, maximal-submodule
// counts, and Hom growth sums.
#pragma once

#include <map>

#include "progen/census.hpp"
#include "progen/rational.hpp"

namespace progen {

// Basis of Hom_G(N, M) as dimN x dimM matrices X with A_g X = X B_g.
inline std::vector<Mat> hom_basis(const GModule& N, const GModule& M) {
    if (&N.field() != &M.field()) throw std::invalid_argument("hom_basis: field mismatch");
    if (N.num_gens() != M.num_gens()) throw std::invalid_argument("hom_basis: generator mismatch");
    const Field& F = N.field();
    size_t n = N.dim(), m = M.dim();
    if (n == 0 || m == 0) return {};
    size_t vars = n * m;
    Mat sys(F, std::max<size_t>(N.num_gens() * vars, 1), vars);
    size_t row = 0;
    for (size_t g = 0; g < N.num_gens(); ++g) {
        const Mat& a = N.gen_matrix(g);
        const Mat& b = M.gen_matrix(g);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < m; ++k) {
                // sum_j a[i][j] x[j][k] - x[i][j] b[j][k] = 0
                for (size_t j = 0; j < n; ++j) {
                    fel c = a.get(i, j);
                    if (c) sys.set(row, j * m + k, F.add(sys.get(row, j * m + k), c));
                }
                for (size_t j = 0; j < m; ++j) {
                    fel c = b.get(j, k);
                    if (c) sys.set(row, i * m + j, F.sub(sys.get(row, i * m + j), c));
                }
                ++row;
            }
    }
    Mat ker = sys.kernel_right();
    std::vector<Mat> basis;
    for (size_t r = 0; r < ker.rows(); ++r) {
        Mat X(F, n, m);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) X.set(i, j, ker.get(r, i * m + j));
        basis.push_back(std::move(X));
    }
    return basis;
}

// Base-field dimension of Hom_G(N, M).
inline size_t hom_dim(const GModule& N, const GModule& M) {
    if (N.dim() == 0 || M.dim() == 0) return 0;
    return hom_basis(N, M).size();
}

// Multiplicity of the irreducible M in the head of N: every hom to an
// irreducible factors through the head, so i_N(M) = dim Hom(N,M) / f_M.
inline size_t i_mult(const GModule& N, const IrrClass& M) {
    size_t hd = hom_dim(N, M.module);
    if (hd % M.f != 0) throw ComputeError("i_mult: hom dimension not divisible by endo degree");
    return hd / M.f;
}

// Distinct composition factors of N as IrrClasses (multiplicity dropped).
inline std::vector<IrrClass> distinct_factors(const GModule& N, uint64_t seed = 2024) {
    if (N.dim() == 0) return {};
    auto [classes, mult] = dedup_classes(chop(N, seed), seed);
    sort_and_label(classes, N.field().q());
    return classes;
}

// d(N): least size of a generating set, as sup over head factors of
// ceil(i_N(M) / r(M)).
inline size_t min_generators(const GModule& N, uint64_t seed = 2024) {
    if (N.dim() == 0) return 0;
    size_t d = 0;
    for (const IrrClass& c : distinct_factors(N, seed)) {
        size_t i = i_mult(N, c);
        if (i == 0) continue;
        d = std::max(d, (i + c.r - 1) / c.r);
    }
    return d;
}

// Exact P(N,k) by the product formula over head factors:
// prod_M prod_(i=0..i_N(M)-1) (1 - q_M^i / |M|^k).
inline ExactProbability module_gen_prob(const GModule& N, unsigned k, uint64_t seed = 2024) {
    ExactProbability prob(1);
    if (N.dim() == 0) return prob;
    for (const IrrClass& c : distinct_factors(N, seed)) {
        size_t imult = i_mult(N, c);
        BigInt order_k = BigInt::pow(c.order(), k);
        BigInt qm(c.endo_size);
        BigInt qm_pow(1);
        for (size_t i = 0; i < imult; ++i) {
            prob = prob * ExactProbability(order_k - qm_pow, order_k);
            qm_pow = qm_pow * qm;
        }
        if (prob.is_zero()) return prob;
    }
    return prob;
}

namespace detail {

inline std::vector<fel> unrank_vector(const Field& F, size_t dim, unsigned long long idx) {
    std::vector<fel> v(dim);
    for (size_t i = 0; i < dim; ++i) { v[i] = static_cast<fel>(idx % F.q()); idx /= F.q(); }
    return v;
}

}  // namespace detail

// Enumeration oracle: exact count of generating k-tuples by spinning every
// tuple. Requires |N|^k within the tuple cap.
inline ExactProbability module_gen_prob_enum(const GModule& N, unsigned k,
                                             unsigned long long cap = Caps::global().tuple_enum) {
    if (N.dim() == 0) return ExactProbability(1);
    const Field& F = N.field();
    double size_d = std::pow(static_cast<double>(F.q()), static_cast<double>(N.dim()));
    double total_d = std::pow(size_d, static_cast<double>(k));
    if (total_d > static_cast<double>(cap)) throw CapExceeded("module_gen_prob_enum: |N|^k over cap");
    unsigned long long size = 1;
    for (size_t i = 0; i < N.dim(); ++i) size *= F.q();
    unsigned long long total = 1;
    for (unsigned i = 0; i < k; ++i) total *= size;
    unsigned long long hits = 0;
    std::vector<std::vector<fel>> seeds(k);
    for (unsigned long long t = 0; t < total; ++t) {
        unsigned long long v = t;
        for (unsigned i = 0; i < k; ++i) { seeds[i] = detail::unrank_vector(F, N.dim(), v % size); v /= size; }
        if (spin(N, seeds).rows() == N.dim()) ++hits;
    }
    return ExactProbability(BigInt(hits), BigInt(total));
}

// Monte-Carlo module generation probability (uniform tuples, spin test).
struct ModuleMcEstimate {
    double estimate, sigma;
    unsigned long long successes, trials;
};
inline ModuleMcEstimate module_gen_prob_mc(const GModule& N, unsigned k, unsigned long long trials,
                                           uint64_t seed) {
    Rng rng = Rng::stream(seed, 2);
    unsigned long long succ = 0;
    for (unsigned long long t = 0; t < trials; ++t) {
        std::vector<std::vector<fel>> seeds(k);
        for (unsigned i = 0; i < k; ++i) {
            seeds[i].resize(N.dim());
            for (fel& c : seeds[i]) c = static_cast<fel>(rng.below(N.field().q()));
        }
        if (N.dim() == 0 || spin(N, seeds).rows() == N.dim()) ++succ;
    }
    ModuleMcEstimate e;
    e.successes = succ;
    e.trials = trials;
    e.estimate = static_cast<double>(succ) / static_cast<double>(trials);
    e.sigma = std::sqrt(std::max(e.estimate * (1 - e.estimate), 1e-12) / static_cast<double>(trials));
    return e;
}

// m_k(N): number of maximal submodules by index k, from the head:
// each head factor S with multiplicity i contributes (q_S^i - 1)/(q_S - 1)
// maximal submodules of index |S|.
inline std::map<std::string, BigInt> max_submodule_census(const GModule& N, uint64_t seed = 2024) {
    std::map<std::string, BigInt> counts;  // key: decimal |S|
    for (const IrrClass& c : distinct_factors(N, seed)) {
        size_t i = i_mult(N, c);
        if (i == 0) continue;
        BigInt qm(c.endo_size);
        BigInt num = BigInt::pow(qm, i) - BigInt(1);
        BigInt cnt = num / (qm - BigInt(1));
        std::string key = c.order().str();
        auto it = counts.find(key);
        if (it == counts.end()) counts.emplace(key, cnt);
        else it->second += cnt;
    }
    return counts;
}

// Oracle: enumerate maximal submodules as distinct kernels of nonzero homs
// onto census irreducibles. Needs a complete census and a small hom count.
inline std::map<std::string, BigInt> max_submodule_enumerate(const GModule& N, const IrrCensus& census,
                                                             uint64_t cap = 1ull << 12) {
    const Field& F = N.field();
    double sz = std::pow(static_cast<double>(F.q()), static_cast<double>(N.dim()));
    if (sz > static_cast<double>(cap)) throw CapExceeded("max_submodule_enumerate: |N| over cap");
    std::map<std::string, std::vector<std::string>> kernels_by_index;
    for (const IrrClass& c : census.classes) {
        std::vector<Mat> homs = hom_basis(N, c.module);
        size_t h = homs.size();
        if (h == 0) continue;
        unsigned long long total = 1;
        for (size_t i = 0; i < h; ++i) {
            total *= F.q();
            if (total > (1ull << 22)) throw CapExceeded("max_submodule_enumerate: hom space too large");
        }
        for (unsigned long long t = 1; t < total; ++t) {
            Mat X(F, N.dim(), c.module.dim());
            unsigned long long v = t;
            for (size_t i = 0; i < h; ++i) {
                fel cf = static_cast<fel>(v % F.q());
                v /= F.q();
                if (cf)
                    for (size_t r = 0; r < N.dim(); ++r) X.row_axpy(r, homs[i], r, cf);
            }
            if (X.is_zero()) continue;
            Mat ker = X.kernel_left();
            Mat canon = ker;
            canon.rref();
            std::string digest = canon.digest_bytes();
            // index = |N| / |ker| = q^(dim N - dim ker) must equal |S| for a
            // surjective hom; nonzero homs to irreducibles are surjective.
            size_t codim = N.dim() - ker.rows();
            std::string key = BigInt::pow(BigInt(F.q()), codim).str();
            auto& vec = kernels_by_index[key];
            if (std::find(vec.begin(), vec.end(), digest) == vec.end()) vec.push_back(digest);
        }
    }
    std::map<std::string, BigInt> counts;
    for (auto& [k, v] : kernels_by_index) counts.emplace(k, BigInt(static_cast<unsigned long long>(v.size())));
    return counts;
}

// sum over census classes S of order k of (|Hom(N,S)| - 1), per order.
inline std::map<std::string, BigInt> hom_growth_sum(const GModule& N, const IrrCensus& census) {
    std::map<std::string, BigInt> sums;
    for (const IrrClass& c : census.classes) {
        size_t hd = N.dim() == 0 ? 0 : hom_dim(N, c.module);
        BigInt val = BigInt::pow(BigInt(N.field().q()), hd) - BigInt(1);
        std::string key = c.order().str();
        auto it = sums.find(key);
        if (it == sums.end()) sums.emplace(key, val);
        else it->second += val;
    }
    return sums;
}

}  // namespace progen
