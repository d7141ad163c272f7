#pragma once

#include <cstdint>

namespace synth {

// Deterministic splitmix64 stream. Used everywhere instead of <random>
// distributions so results are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). n must be > 0.
    uint64_t below(uint64_t n) {
        // Rejection-free modulo is fine here; bias is ~2^-64 per draw.
        return next() % n;
    }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double unit() {  // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Weighted pick: returns index into weights. Total must be > 0.
    int pick_weighted(const double* weights, int n) {
        double total = 0;
        for (int i = 0; i < n; ++i) total += weights[i];
        double r = unit() * total;
        for (int i = 0; i < n; ++i) {
            r -= weights[i];
            if (r < 0) return i;
        }
        return n - 1;
    }

private:
    uint64_t state_;
};

// Stable stream derivation: child streams from (seed, index...) tuples.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

}  // namespace synth
