// Deterministic random streams. Every stochastic routine takes a Rng derived
// from (master seed, task index) by fixed arithmetic, so identical configs
// reproduce identical artifacts byte for byte.
#pragma once

#include <cstdint>

namespace progen {

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    static Rng stream(uint64_t master_seed, uint64_t task_index) {
        return Rng(mix(master_seed + 0x9e3779b97f4a7c15ull * (task_index + 1)));
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, n), n > 0; rejection keeps it exact.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    double uniform01() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

private:
    uint64_t state_;

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }
};

}  // namespace progen
