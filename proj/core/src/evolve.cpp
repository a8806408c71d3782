#include "dqw/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

namespace dqw {

namespace {

void apply_block_range(Eigen::VectorXcd& amps, const Eigen::MatrixXcd& u,
                       const BlockList& blocks, std::int64_t first,
                       std::int64_t last) {
    const std::int64_t bs = blocks.block_size;
    Eigen::VectorXcd in(bs);
    Eigen::VectorXcd out(bs);
    for (std::int64_t b = first; b < last; ++b) {
        const auto sites = blocks.block(b);
        for (std::int64_t i = 0; i < bs; ++i) {
            in[i] = amps[sites[static_cast<std::size_t>(i)]];
        }
        out.noalias() = u * in;
        for (std::int64_t i = 0; i < bs; ++i) {
            amps[sites[static_cast<std::size_t>(i)]] = out[i];
        }
    }
}

} // namespace

void apply_half_step(AmplitudeField& f, const BlockUnitary& u,
                     const BlockList& blocks, int threads) {
    if (u.dim != blocks.dim || u.dim != f.geometry().dim()) {
        throw InputError("block unitary dimension does not match the lattice");
    }
    const std::int64_t count = blocks.block_count();
    threads = std::max(1, threads);
    if (threads == 1 || count < 2 * threads) {
        apply_block_range(f.amps(), u.mat, blocks, 0, count);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads - 1));
    const std::int64_t chunk = (count + threads - 1) / threads;
    for (int w = 1; w < threads; ++w) {
        const std::int64_t first = std::min<std::int64_t>(count, w * chunk);
        const std::int64_t last = std::min<std::int64_t>(count, first + chunk);
        if (first >= last) break;
        workers.emplace_back([&f, &u, &blocks, first, last] {
            apply_block_range(f.amps(), u.mat, blocks, first, last);
        });
    }
    apply_block_range(f.amps(), u.mat, blocks, 0, std::min(chunk, count));
    for (auto& t : workers) t.join();
}

WalkEngine::WalkEngine(LatticeGeometry geometry, MixingParams params,
                       int threads, bool even_first)
    : geometry_(std::move(geometry)),
      params_(params),
      u_odd_(exponentiate_block(build_block_hamiltonian(geometry_.dim(), Parity::Odd), params)),
      u_even_(exponentiate_block(build_block_hamiltonian(geometry_.dim(), Parity::Even), params)),
      odd_blocks_(partition_blocks(geometry_, Parity::Odd)),
      even_blocks_(partition_blocks(geometry_, Parity::Even)),
      threads_(std::max(1, threads)),
      even_first_(even_first) {}

void WalkEngine::step(AmplitudeField& f) {
    if (!(f.geometry() == geometry_)) {
        throw InputError("field geometry does not match the walk engine");
    }
    if (even_first_) {
        apply_half_step(f, u_even_, even_blocks_, threads_);
        apply_half_step(f, u_odd_, odd_blocks_, threads_);
    } else {
        apply_half_step(f, u_odd_, odd_blocks_, threads_);
        apply_half_step(f, u_even_, even_blocks_, threads_);
    }
    ++step_count_;
}

AmplitudeField WalkEngine::run(AmplitudeField f, std::int64_t t) {
    if (t < 0) {
        throw InputError("step count must be non-negative");
    }
    for (std::int64_t i = 0; i < t; ++i) {
        step(f);
    }
    return f;
}

AmplitudeField init_delta(const LatticeGeometry& g,
                          std::span<const std::int64_t> coords) {
    AmplitudeField f(g);
    f[g.linear_index(coords)] = Complex{1.0, 0.0};
    return f;
}

AmplitudeField init_symmetric_1d(const LatticeGeometry& g) {
    if (g.dim() != 1) {
        throw InputError("symmetric initial state is defined on a 1-D lattice");
    }
    return init_symmetric_diagonal(g);
}

AmplitudeField init_symmetric_diagonal(const LatticeGeometry& g) {
    AmplitudeField f(g);
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<std::int64_t> zero(static_cast<std::size_t>(g.dim()), 0);
    const std::vector<std::int64_t> one(static_cast<std::size_t>(g.dim()), 1);
    f[g.linear_index(zero)] = Complex{r, 0.0};
    f[g.linear_index(one)] = Complex{0.0, r};
    return f;
}

AmplitudeField init_uniform(const LatticeGeometry& g) {
    AmplitudeField f(g);
    f.amps().setConstant(Complex{1.0 / std::sqrt(static_cast<double>(g.size())), 0.0});
    return f;
}

AbsorbingWalkState::AbsorbingWalkState(AmplitudeField field)
    : field_(std::move(field)) {
    if (field_.geometry().dim() != 1) {
        throw InputError("absorbing wall is defined on a 1-D lattice");
    }
}

void AbsorbingWalkState::step(WalkEngine& engine) {
    engine.step(field_);
    const LatticeGeometry& g = field_.geometry();
    const std::int64_t len = g.side(0);
    // zero out n < 0, i.e. ring indices with negative signed position
    for (std::int64_t i = len / 2 + 1; i < len; ++i) {
        absorbed_ += std::norm(field_[i]);
        field_[i] = Complex{0.0, 0.0};
    }
}

void step_absorbing_1d(AbsorbingWalkState& state, WalkEngine& engine) {
    state.step(engine);
}

} // namespace dqw
