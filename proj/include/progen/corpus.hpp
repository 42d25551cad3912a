// The named corpora the invariant suites run over: small groups up to order
// 48 and a module list with tractable enumeration oracles.
#pragma once

#include <string>
#include <vector>

#include "progen/gmodule.hpp"

namespace progen {

// Cyclic and dihedral families up to order 48 plus the fixed small groups.
inline std::vector<std::string> corpus_groups_order48() {
    std::vector<std::string> ids;
    for (uint32_t n : {2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 12u, 15u, 16u, 18u, 20u, 24u, 30u, 36u, 40u, 48u})
        ids.push_back("C" + std::to_string(n));
    for (uint32_t n : {3u, 4u, 5u, 6u, 8u, 10u, 12u, 16u, 20u, 24u})
        ids.push_back("D" + std::to_string(n));
    ids.insert(ids.end(), {"S3", "A4", "S4", "Q8", "C2xC2", "C2xC4"});
    return ids;
}

inline std::vector<std::string> corpus_groups_order16() {
    std::vector<std::string> ids;
    for (const std::string& id : corpus_groups_order48())
        if (named_group(id).order_u64() <= 16) ids.push_back(id);
    return ids;
}

// Modules for the product-formula, d(N) and PMSMG suites, with the largest
// tuple exponent k usable by the enumeration oracle.
struct CorpusModule {
    std::string name;
    GModule module;
    unsigned max_k;
};

inline std::vector<CorpusModule> corpus_modules() {
    std::vector<CorpusModule> out;
    auto reg = [&](const char* id, uint32_t q, unsigned kmax) {
        PermGroup G = named_group(id);
        out.push_back({std::string("reg:") + id + "@" + std::to_string(q),
                       regular_module(G, Field::for_q(q)), kmax});
    };
    auto aug = [&](const char* id, uint32_t q, unsigned kmax) {
        PermGroup G = named_group(id);
        out.push_back({std::string("aug:") + id + "@" + std::to_string(q),
                       augmentation_module(G, Field::for_q(q)), kmax});
    };
    reg("C2", 2, 3);
    reg("C3", 3, 2);
    reg("C3", 2, 2);
    reg("C4", 2, 3);
    reg("C5", 5, 2);
    reg("C6", 2, 2);
    reg("C6", 3, 2);
    reg("S3", 2, 2);
    reg("S3", 3, 2);
    reg("C2xC2", 2, 3);
    reg("D4", 2, 2);
    reg("Q8", 2, 2);
    reg("A4", 2, 1);
    aug("S3", 2, 3);
    aug("C4", 2, 3);
    aug("C2xC2", 2, 3);
    aug("A4", 2, 1);
    aug("Q8", 2, 2);
    // trivial-action vector spaces
    {
        PermGroup T = trivial_group();
        out.push_back({"triv:F3^2", power_module(trivial_module(T, Field::get(3)), 2), 3});
        out.push_back({"triv:F2^3", power_module(trivial_module(T, Field::get(2)), 3), 3});
    }
    // the homogeneous non-absolutely-irreducible family: C3 over F2, q_M = 4
    {
        PermGroup C3 = cyclic_group(3);
        GModule reg2 = regular_module(C3, Field::get(2));
        Mat fixed = spin(reg2, {{1, 1, 1}});
        GModule W = quotient_module(reg2, fixed);  // the 2-dim class, End = F4
        out.push_back({"irr:C3@2 (q_M=4)", W, 3});
        out.push_back({"irr^2:C3@2", power_module(W, 2), 2});
    }
    // M^3 for the 2-dim F2[S3] irreducible (r = 2)
    {
        PermGroup S3 = symmetric_group(3);
        GModule reg2 = regular_module(S3, Field::get(2));
        Mat fixed = spin(reg2, {{1, 1, 1, 1, 1, 1}});
        GModule quo = quotient_module(reg2, fixed);  // 5-dim, head contains the 2-dim twice... use chop
        // build the 2-dim irreducible via the natural 3-point module instead
        Mat t = Mat::from_rows(Field::get(2), {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
        Mat cy = Mat::from_rows(Field::get(2), {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
        GModule nat(S3, Field::get(2), 3, {t, cy});
        Mat f2 = spin(nat, {{1, 1, 1}});
        GModule two = quotient_module(nat, f2);
        out.push_back({"irr2:S3@2", two, 3});
        out.push_back({"irr2^3:S3@2", power_module(two, 3), 2});
    }
    return out;
}

// (group id, prime) pairs whose full census enters the h1-decomposition and
// resolution suites.
inline std::vector<std::pair<std::string, uint32_t>> corpus_census_pairs() {
    return {{"S3", 2}, {"S3", 3}, {"C4", 2}, {"C2xC2", 2}, {"A4", 2}, {"A4", 3},
            {"Q8", 2}, {"D4", 2},  {"C6", 2}, {"C6", 3},    {"A5", 2}, {"A5", 3}, {"A5", 5}};
}

}  // namespace progen
