#pragma once

#include <cstdint>

namespace synth {

struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-6;
};

struct SearchConfig {
    int max_fragments = 4;
    int max_instr_per_hole = 3;

    enum class Mode { Exhaustive, Random };
    Mode mode = Mode::Random;

    long long max_candidates = 200000;  // per composition (both modes)
    int n_tests = 8;
    int verify_tests = 64;
    uint64_t seed = 0;
    double timeout_seconds = 900;
    int size_lo = 1;
    int size_hi = 4;
    Tolerance tol;
    int workers = 1;
};

}  // namespace synth
