// Desk-scale towers: product families of small perfect factors, censuses of
// level irreducibles as tensor tuples over the splitting field, H^1 by the
// product rule, and growth series with a log-log slope fit. Multiplicities
// enter combinatorially; product groups are only materialized for the
// two-factor validation oracles.
#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "progen/cohomology.hpp"

namespace progen {

struct TowerFactor {
    std::string id;
    size_t mult = 1;
};
using TowerLevel = std::vector<TowerFactor>;

struct TowerSpec {
    std::vector<TowerLevel> levels;

    // Each level must extend the previous one: same factor ids as a prefix,
    // with multiplicities no smaller. Then level L is a quotient of level
    // L+1 by coordinate projection.
    void validate() const {
        for (const auto& level : levels)
            for (const auto& f : level) {
                if (f.mult < 1) throw std::invalid_argument("TowerSpec: multiplicity must be >= 1");
                named_group(f.id);  // throws for unknown ids
            }
        for (size_t l = 0; l + 1 < levels.size(); ++l) {
            if (levels[l].size() > levels[l + 1].size())
                throw std::invalid_argument("TowerSpec: level must be a prefix of the next");
            for (size_t i = 0; i < levels[l].size(); ++i) {
                if (levels[l][i].id != levels[l + 1][i].id)
                    throw std::invalid_argument("TowerSpec: factor ids must be prefix-compatible");
                if (levels[l][i].mult > levels[l + 1][i].mult)
                    throw std::invalid_argument("TowerSpec: multiplicities must be nondecreasing");
            }
        }
    }
};

// Splitting-field data of one factor at a prime: absolutely irreducible
// classes over E = F_(p^f) with cached H^1 dimensions (E-dims).
struct FactorSplitData {
    PermGroup group;
    bool perfect = false;
    std::vector<IrrClass> classes;  // over E, sorted by (dim, label)
    std::vector<size_t> h1;         // E-dim of H^1(factor, class)
};

class LevelCensus {
public:
    // positions: one entry per coordinate of the level group, pointing into
    // factor_data. Classes of the level are tuples of factor classes.
    std::vector<FactorSplitData> factor_data;
    std::vector<size_t> positions;
    const Field* E = nullptr;
    uint32_t prime = 0;
    size_t max_dim_product = 0;  // census cap: tuple dim product <= this

    struct TupleClass {
        std::vector<size_t> choice;  // class index per position
        size_t dim_product = 1;
        size_t nontrivial_positions = 0;
    };
    std::vector<TupleClass> tuples;  // all tuples within the cap

    // census counts by order exponent: order = |E|^(dim product)
    std::map<size_t, BigInt> count_by_exponent;

    BigInt order_of(const TupleClass& t) const { return BigInt::pow(BigInt(E->q()), t.dim_product); }
};

// Build the splitting-field census of one tower level.
inline LevelCensus level_census(const TowerSpec& spec, size_t level, uint32_t p, size_t max_dim_product,
                                uint64_t seed = 2024) {
    spec.validate();
    if (max_dim_product == 0) throw std::invalid_argument("level_census: order cap is zero");
    if (level >= spec.levels.size()) throw std::invalid_argument("level_census: level out of range");
    LevelCensus lc;
    lc.prime = p;
    lc.max_dim_product = max_dim_product;

    // distinct factors of this level
    std::map<std::string, size_t> seen;
    for (const TowerFactor& f : spec.levels[level]) {
        if (!seen.count(f.id)) {
            seen[f.id] = lc.factor_data.size();
            FactorSplitData fd{named_group(f.id), false, {}, {}};
            fd.perfect = fd.group.is_perfect();
            lc.factor_data.push_back(std::move(fd));
        }
        for (size_t i = 0; i < f.mult; ++i) lc.positions.push_back(seen[f.id]);
    }

    // splitting field: lcm of endo degrees across all factor classes
    uint32_t f_split = 1;
    std::vector<IrrCensus> base;
    for (auto& fd : lc.factor_data) {
        base.push_back(irr_census(fd.group, p, seed));
        for (const IrrClass& c : base.back().classes) f_split = std::lcm(f_split, c.f);
    }
    lc.E = &Field::get(p, f_split);

    for (size_t i = 0; i < lc.factor_data.size(); ++i) {
        std::vector<IrrClass> split;
        for (const IrrClass& c : base[i].classes) {
            std::vector<IrrClass> parts =
                f_split == 1 && c.f == 1
                    ? std::vector<IrrClass>{c}
                    : splitting_classes(c, *lc.E, seed);
            for (auto& s : parts) split.push_back(std::move(s));
        }
        sort_and_label(split, lc.E->q());
        lc.factor_data[i].classes = std::move(split);
        for (const IrrClass& c : lc.factor_data[i].classes)
            lc.factor_data[i].h1.push_back(h_dim(c.module, 1));
    }

    // enumerate tuples with dim product within the cap
    std::vector<size_t> choice(lc.positions.size(), 0);
    for (;;) {
        size_t dimprod = 1;
        size_t nontriv = 0;
        bool ok = true;
        for (size_t pos = 0; pos < lc.positions.size() && ok; ++pos) {
            const IrrClass& c = lc.factor_data[lc.positions[pos]].classes[choice[pos]];
            dimprod *= c.module.dim();
            if (c.module.dim() > 1) ++nontriv;
            if (dimprod > max_dim_product) ok = false;
        }
        if (ok) {
            lc.tuples.push_back({choice, dimprod, nontriv});
            auto it = lc.count_by_exponent.find(dimprod);
            if (it == lc.count_by_exponent.end()) lc.count_by_exponent.emplace(dimprod, BigInt(1));
            else it->second += BigInt(1);
        }
        // odometer
        size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < lc.factor_data[lc.positions[pos]].classes.size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) break;
        if (lc.tuples.size() > (1u << 22)) throw CapExceeded("level_census: tuple count over cap");
    }
    return lc;
}

// H^1 of a tuple class over E by the product rule for perfect factors:
// zero unless exactly one position is nontrivial, in which case it is the
// factor's H^1 at that class.
inline size_t h1_product_rule(const LevelCensus& lc, const LevelCensus::TupleClass& t) {
    for (const FactorSplitData& fd : lc.factor_data)
        if (!fd.perfect)
            throw std::invalid_argument("h1_product_rule: factors must be perfect (rule not asserted otherwise)");
    if (t.nontrivial_positions != 1) return 0;
    for (size_t pos = 0; pos < t.choice.size(); ++pos) {
        const FactorSplitData& fd = lc.factor_data[lc.positions[pos]];
        const IrrClass& c = fd.classes[t.choice[pos]];
        if (c.module.dim() > 1) return fd.h1[t.choice[pos]];
    }
    return 0;
}

// One growth series: order (decimal string) -> big-integer count, plus the
// log2 of the order for slope fitting.
struct GrowthSeries {
    std::string statistic;  // "total" | "h1_sum" | "h1_nonzero"
    std::string spec_name;
    size_t level = 0;
    uint32_t prime = 0;
    std::vector<std::pair<BigInt, BigInt>> points;  // (order k, count), ascending k
    // filled by fit_series when enough nonzero cumulative points exist
    std::optional<double> fitted_slope;
    bool superpolynomial = false;

    bool all_zero() const {
        for (const auto& [k, v] : points)
            if (!v.is_zero()) return false;
        return true;
    }
    BigInt total() const {
        BigInt t(0);
        for (const auto& [k, v] : points) t += v;
        return t;
    }
};

// ---- slope fitting ------------------------------------------------------------

struct SlopeFit {
    double exponent = 0;       // least-squares slope of log C(k) vs log k
    bool superpolynomial = false;
    size_t points_used = 0;
};

// Least-squares slope of y on x.
inline double lsq_slope(const std::vector<std::pair<double, double>>& xy) {
    double n = static_cast<double>(xy.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : xy) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) return 0;
    return (n * sxy - sx * sy) / denom;
}

// Fit on cumulative counts: points (k, count) with k ascending; cumulative
// C(k) = sum of counts up to k. Windows are dyadic in k; the superpolynomial
// flag fires when windowed slopes increase by more than 0.5 across at least
// three consecutive windows.
inline SlopeFit slope_fit(const std::vector<std::pair<double, BigInt>>& series_log2k) {
    SlopeFit fit;
    BigInt cum(0);
    std::vector<std::pair<double, double>> pts;  // (log2 k, log2 C)
    for (const auto& [log2k, cnt] : series_log2k) {
        cum += cnt;
        if (!cum.is_zero()) pts.emplace_back(log2k, std::log2(cum.to_double() > 0 ? cum.to_double() : 1.0));
    }
    fit.points_used = pts.size();
    if (pts.size() < 3) throw std::invalid_argument("slope_fit: need at least 3 nonzero cumulative points");
    fit.exponent = lsq_slope(pts);
    // dyadic windows over k
    std::map<long, std::vector<std::pair<double, double>>> windows;
    for (auto& p : pts) windows[static_cast<long>(std::floor(p.first))].push_back(p);
    std::vector<double> wslopes;
    for (auto& [w, v] : windows)
        if (v.size() >= 2) wslopes.push_back(lsq_slope(v));
    size_t rising = 1;
    for (size_t i = 1; i < wslopes.size(); ++i) {
        if (wslopes[i] > wslopes[i - 1] + 0.5) {
            if (++rising >= 3) fit.superpolynomial = true;
        } else {
            rising = 1;
        }
    }
    return fit;
}

inline SlopeFit slope_fit(const GrowthSeries& s) {
    std::vector<std::pair<double, BigInt>> pts;
    for (const auto& [k, v] : s.points) {
        double lk = std::log2(std::max(k.to_double(), 1.0));
        if (!k.fits_u64()) {
            // large orders: log2 via decimal length approximation
            lk = (static_cast<double>(k.str().size()) - 1) * 3.3219280948873623;
        }
        pts.emplace_back(lk, v);
    }
    return slope_fit(pts);
}

// Attach the fit to the series when it has enough data; leaves it empty
// otherwise.
inline void fit_series(GrowthSeries& s) {
    try {
        SlopeFit f = slope_fit(s);
        s.fitted_slope = f.exponent;
        s.superpolynomial = f.superpolynomial;
    } catch (const std::invalid_argument&) {
        s.fitted_slope.reset();
        s.superpolynomial = false;
    }
}

struct LevelReport {
    LevelCensus census;
    GrowthSeries total, h1_sum, h1_nonzero;
};

inline LevelReport growth_report_level(const TowerSpec& spec, size_t level, uint32_t p,
                                       size_t max_dim_product, uint64_t seed = 2024,
                                       std::string spec_name = "tower") {
    LevelReport rep{level_census(spec, level, p, max_dim_product, seed), {}, {}, {}};
    const LevelCensus& lc = rep.census;
    std::map<size_t, BigInt> h1sum, h1cnt;
    for (const auto& t : lc.tuples) {
        size_t h1 = h1_product_rule(lc, t);
        if (h1 > 0) {
            BigInt contrib = BigInt::pow(BigInt(lc.E->q()), h1) - BigInt(1);
            auto it = h1sum.find(t.dim_product);
            if (it == h1sum.end()) h1sum.emplace(t.dim_product, contrib);
            else it->second += contrib;
            auto it2 = h1cnt.find(t.dim_product);
            if (it2 == h1cnt.end()) h1cnt.emplace(t.dim_product, BigInt(1));
            else it2->second += BigInt(1);
        }
    }
    auto fill = [&](GrowthSeries& s, const char* stat) {
        s.statistic = stat;
        s.spec_name = spec_name;
        s.level = level;
        s.prime = p;
    };
    fill(rep.total, "total");
    fill(rep.h1_sum, "h1_sum");
    fill(rep.h1_nonzero, "h1_nonzero");
    for (const auto& [expo, cnt] : lc.count_by_exponent) {
        BigInt order = BigInt::pow(BigInt(lc.E->q()), expo);
        rep.total.points.emplace_back(order, cnt);
        auto s = h1sum.find(expo);
        rep.h1_sum.points.emplace_back(order, s == h1sum.end() ? BigInt(0) : s->second);
        auto c = h1cnt.find(expo);
        rep.h1_nonzero.points.emplace_back(order, c == h1cnt.end() ? BigInt(0) : c->second);
    }
    fit_series(rep.total);
    fit_series(rep.h1_sum);
    fit_series(rep.h1_nonzero);
    return rep;
}

// Direct oracle for two-factor levels: census of the product group itself at
// the prime, each class split over E; returns counts by order exponent.
inline std::map<size_t, BigInt> two_factor_direct_census(const PermGroup& product, const Field& E,
                                                         uint32_t p, uint64_t seed = 2024,
                                                         size_t chop_cap = 8192) {
    IrrCensus direct = irr_census(product, Field::get(p), seed, chop_cap);
    std::map<size_t, BigInt> counts;
    for (const IrrClass& c : direct.classes) {
        std::vector<IrrClass> parts = c.f == 1 && E.e() == 1
                                          ? std::vector<IrrClass>{c}
                                          : splitting_classes(c, E, seed);
        for (const IrrClass& s : parts) {
            auto it = counts.find(s.module.dim());
            if (it == counts.end()) counts.emplace(s.module.dim(), BigInt(1));
            else it->second += BigInt(1);
        }
    }
    return counts;
}

}  // namespace progen
