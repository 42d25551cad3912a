// Irreducible-module censuses: the complete catalog of irreducible F[G]
// modules obtained by chopping the regular module, with endomorphism-field
// sizes, dimensions over the endomorphism field, and canonical labels.
#pragma once

#include <string>
#include <vector>

#include "progen/meataxe.hpp"

namespace progen {

struct IrrClass {
    GModule module;
    unsigned long long endo_size;  // q_M = |End_G(M)|
    uint32_t f;                    // endo degree: q_M = q^f
    uint32_t r;                    // dim over End_G(M): r*f = dim
    std::string label;
    std::string fingerprint;

    BigInt order() const { return module.order(); }
};

struct IrrCensus {
    uint32_t q = 0;  // base field size
    std::vector<IrrClass> classes;
    bool complete = false;

    const IrrClass* find_label(const std::string& label) const {
        for (const auto& c : classes)
            if (c.label == label) return &c;
        return nullptr;
    }
};

namespace detail {

inline IrrClass make_class(GModule m, uint64_t seed) {
    IrrClass c{std::move(m), 0, 0, 0, "", ""};
    c.fingerprint = module_fingerprint(c.module);
    c.endo_size = endo_size(c.module, seed);
    const Field& F = c.module.field();
    uint32_t f = 0;
    unsigned long long t = c.endo_size;
    while (t > 1) { t /= F.q(); ++f; }
    c.f = f;
    if (f == 0 || c.module.dim() % f != 0)
        throw ComputeError("census: endo size is not a field power matching the dimension");
    c.r = static_cast<uint32_t>(c.module.dim() / f);
    return c;
}

}  // namespace detail

// Deduplicate a list of modules into iso classes (fingerprint pre-key, then
// standard-basis iso tests). Returns classes plus the multiplicity of each.
inline std::pair<std::vector<IrrClass>, std::vector<size_t>> dedup_classes(
    const std::vector<GModule>& factors, uint64_t seed = 2024) {
    std::vector<IrrClass> classes;
    std::vector<size_t> mult;
    std::vector<std::string> fps;
    for (const GModule& f : factors) {
        std::string fp = module_fingerprint(f);
        bool found = false;
        for (size_t i = 0; i < classes.size() && !found; ++i) {
            if (fps[i] != fp) continue;
            if (is_iso(classes[i].module, f, seed)) {
                ++mult[i];
                found = true;
            }
        }
        if (!found) {
            classes.push_back(detail::make_class(f, seed));
            fps.push_back(fp);
            mult.push_back(1);
        }
    }
    return {std::move(classes), std::move(mult)};
}

inline void sort_and_label(std::vector<IrrClass>& classes, uint32_t q) {
    std::stable_sort(classes.begin(), classes.end(), [](const IrrClass& a, const IrrClass& b) {
        if (a.module.dim() != b.module.dim()) return a.module.dim() < b.module.dim();
        if (a.endo_size != b.endo_size) return a.endo_size < b.endo_size;
        return a.fingerprint < b.fingerprint;
    });
    for (size_t i = 0; i < classes.size(); ++i)
        classes[i].label = "q" + std::to_string(q) + "d" + std::to_string(classes[i].module.dim()) +
                           "e" + std::to_string(classes[i].endo_size) + "n" + std::to_string(i);
}

// Complete census over the given field: every irreducible F[G]-module is a
// composition factor of the regular module.
inline IrrCensus irr_census(const PermGroup& G, const Field& F, uint64_t seed = 2024,
                            size_t cap = Caps::global().chop) {
    GModule reg = regular_module(G, F);
    std::vector<GModule> factors = chop(reg, seed, cap);
    auto [classes, mult] = dedup_classes(factors, seed);
    IrrCensus census;
    census.q = F.q();
    census.classes = std::move(classes);
    census.complete = true;
    sort_and_label(census.classes, F.q());
    return census;
}

inline IrrCensus irr_census(const PermGroup& G, uint32_t p, uint64_t seed = 2024,
                            size_t cap = Caps::global().chop) {
    return irr_census(G, Field::get(p), seed, cap);
}

// Absolutely irreducible constituents of one F_p-class after extending
// scalars to E = F_(p^fsplit). For an irreducible with endo degree f | fsplit
// these are the f Galois-conjugate classes of dimension dim/f.
inline std::vector<IrrClass> splitting_classes(const IrrClass& c, const Field& E, uint64_t seed = 2024) {
    GModule ext = extend_scalars(c.module, E);
    std::vector<GModule> factors = chop(ext, seed);
    auto [classes, mult] = dedup_classes(factors, seed);
    for (const auto& cl : classes)
        if (cl.endo_size != E.q())
            throw ComputeError("splitting_classes: constituent not absolutely irreducible over E");
    sort_and_label(classes, E.q());
    return classes;
}

}  // namespace progen
