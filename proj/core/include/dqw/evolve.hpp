#pragma once

// Blockwise application of the walk operator W = U_e U_o, initial states,
// multi-step evolution, and the 1-D absorbing-wall variant.

#include <cstdint>

#include "dqw/blocks.hpp"
#include "dqw/lattice.hpp"

namespace dqw {

// Apply one block unitary to every block of one parity, in place. Blocks are
// disjoint, so the sweep may be split across threads with no synchronisation
// inside; results are bit-identical for any thread count.
void apply_half_step(AmplitudeField& f, const BlockUnitary& u,
                     const BlockList& blocks, int threads = 1);

// One walk step applies the odd half-step first: psi -> U_e U_o psi.
// `even_first` swaps the order (experimentation flag; off everywhere else).
class WalkEngine {
public:
    WalkEngine(LatticeGeometry geometry, MixingParams params, int threads = 1,
               bool even_first = false);

    const LatticeGeometry& geometry() const { return geometry_; }
    const BlockUnitary& odd_unitary() const { return u_odd_; }
    const BlockUnitary& even_unitary() const { return u_even_; }
    const BlockList& odd_blocks() const { return odd_blocks_; }
    const BlockList& even_blocks() const { return even_blocks_; }
    MixingParams params() const { return params_; }
    int threads() const { return threads_; }

    // Full W steps applied so far (walk time t).
    std::int64_t step_count() const { return step_count_; }

    void step(AmplitudeField& f);
    // t repeated steps; t = 0 returns the field unchanged.
    AmplitudeField run(AmplitudeField f, std::int64_t t);

private:
    LatticeGeometry geometry_;
    MixingParams params_;
    BlockUnitary u_odd_;
    BlockUnitary u_even_;
    BlockList odd_blocks_;
    BlockList even_blocks_;
    int threads_ = 1;
    bool even_first_ = false;
    std::int64_t step_count_ = 0;
};

// delta at site v
AmplitudeField init_delta(const LatticeGeometry& g, std::span<const std::int64_t> coords);

// (|0> + i |1>)/sqrt(2); 1-D only. Evolves to a distribution symmetric under
// n <-> (1 - n); real and imaginary parts never mix because the unbiased
// step operator is real.
AmplitudeField init_symmetric_1d(const LatticeGeometry& g);

// (|0...0> + i |1...1>)/sqrt(2) in any dimension; reduces to the symmetric
// 1-D state at d = 1.
AmplitudeField init_symmetric_diagonal(const LatticeGeometry& g);

// every amplitude 1/sqrt(N)
AmplitudeField init_uniform(const LatticeGeometry& g);

// Walk on the half-line: full W step, then projection onto n >= 0 with the
// removed weight accumulated as absorption probability. The wall sits
// between n = 0 and n = -1.
class AbsorbingWalkState {
public:
    explicit AbsorbingWalkState(AmplitudeField field);

    const AmplitudeField& field() const { return field_; }
    double absorbed() const { return absorbed_; }

    void step(WalkEngine& engine);

private:
    AmplitudeField field_;
    double absorbed_ = 0.0;
};

// Free-function form of AbsorbingWalkState::step.
void step_absorbing_1d(AbsorbingWalkState& state, WalkEngine& engine);

} // namespace dqw
