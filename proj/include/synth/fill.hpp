#pragma once

#include <memory>

#include "synth/config.hpp"
#include "synth/ir.hpp"

namespace synth {

// Streams candidate programs for a skeleton.
//
// Exhaustive mode walks the whole pruned space in a fixed canonical order:
// per hole, the empty fill (where legal), then bare values in operand
// order, then instruction sequences by length; across coordinates the last
// hole varies fastest. Pruning: commutative operand pairs are enumerated
// canonically for + and *; every intermediate register must be consumed
// later in its hole or be the hole's result; every fragment-provided load
// must be referenced somewhere in scope (bare references count). The
// stream stops after max_candidates.
//
// Random mode draws seeded, reproducible samples from the same space.
// Draws are biased toward short fills and multiply-accumulate shapes (the
// shapes numeric kernels are made of) but every pruned-space program has
// nonzero probability. Candidate i depends only on (seed, i), so draws
// can be consumed in parallel without changing what is drawn.
class FillStream {
public:
    FillStream(const Skeleton& sk, const SearchConfig& cfg, uint64_t stream_seed);
    ~FillStream();

    FillStream(const FillStream&) = delete;
    FillStream& operator=(const FillStream&) = delete;

    // Writes the next candidate into `out` (which must outlive no longer
    // than the stream's skeleton). Returns false when the space or the
    // candidate budget is exhausted.
    bool next(Program& out);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace synth
