#include "verify_suite.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "dqw/evolve.hpp"
#include "dqw/observables.hpp"
#include "dqw/search.hpp"
#include "dqw/spectral.hpp"

namespace dqw::tools {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

VerifyResult check_block_algebra() {
    double worst = 0.0;
    for (int d = 1; d <= 6; ++d) {
        for (const Parity parity : {Parity::Odd, Parity::Even}) {
            const auto h = build_block_hamiltonian(d, parity);
            const auto r = verify_block_algebra(h);
            const auto u = exponentiate_block(h, MixingParams::unbiased());
            worst = std::max({worst, r.hermiticity_deviation, r.square_deviation,
                              unitarity_deviation(u.mat)});
        }
    }
    return {"block algebra d=1..6 (H^2 = d/4, unitarity)", worst < 1e-12,
            "max deviation " + fmt(worst)};
}

VerifyResult check_step_equation() {
    const LatticeGeometry g({64});
    WalkEngine engine(g, MixingParams::unbiased());
    double worst = 0.0;
    for (std::int64_t n = 0; n < 64; ++n) {
        AmplitudeField f(g);
        f[n] = Complex{1.0, 0.0};
        f = engine.run(std::move(f), 1);
        AmplitudeField expect(g);
        const std::int64_t dir = n % 2 == 0 ? 1 : -1;
        expect[ring_index_1d(g, n - 1)] += 0.5;
        expect[ring_index_1d(g, n)] += 0.5;
        expect[ring_index_1d(g, n + 1)] -= 0.5;
        expect[ring_index_1d(g, n + 2 * dir)] += 0.5;
        worst = std::max(worst, (f.amps() - expect.amps()).cwiseAbs().maxCoeff());
    }
    return {"four-point step rule on every basis state (L=64)", worst <= 1e-14,
            "max deviation " + fmt(worst)};
}

VerifyResult check_confinement() {
    const LatticeGeometry g({256});
    WalkEngine engine(g, MixingParams::unbiased());
    AmplitudeField f(g);
    f[0] = Complex{1.0, 0.0};
    bool ok = true;
    for (std::int64_t t = 1; t <= 50 && ok; ++t) {
        engine.step(f);
        const auto [lo, hi] = support_interval_1d(distribution(f));
        ok = lo >= -2 * t + 1 && hi <= 2 * t;
    }
    return {"origin-walk support within [-2t+1, 2t] (t<=50)", ok, ok ? "exact" : "violated"};
}

VerifyResult check_absorption() {
    const LatticeGeometry g({4096});
    WalkEngine engine(g, MixingParams::unbiased());
    AbsorbingWalkState state(init_symmetric_1d(g));
    state.step(engine);
    const double p1 = state.absorbed();
    state.step(engine);
    const double p2 = state.absorbed();
    for (int t = 2; t < 1000; ++t) state.step(engine);
    const double pinf = state.absorbed();
    const bool ok = std::abs(p1 - 0.25) < 1e-12 && std::abs(p2 - 0.375) < 1e-12 &&
                    std::abs(pinf - 0.4098) < 1e-3;
    return {"absorbing wall: P(1)=1/4, P(2)=3/8, P(1000)~0.4098", ok,
            "P(1)=" + fmt(p1) + " P(2)=" + fmt(p2) + " P(1000)=" + fmt(pinf)};
}

VerifyResult check_spectral_equivalence() {
    const LatticeGeometry g({512});
    WalkEngine ed(g, MixingParams::unbiased());
    const auto d_direct = ed.run(init_delta(g, std::vector<std::int64_t>{0}), 100);
    const auto d_spec = spectral_propagate(init_delta(g, std::vector<std::int64_t>{0}), 100);
    WalkEngine es(g, MixingParams::unbiased());
    const auto s_direct = es.run(init_symmetric_1d(g), 100);
    const auto s_spec = spectral_propagate(init_symmetric_1d(g), 100);
    const double worst =
        std::max((d_direct.amps() - d_spec.amps()).cwiseAbs().maxCoeff(),
                 (s_direct.amps() - s_spec.amps()).cwiseAbs().maxCoeff());
    return {"spectral propagation equals direct evolution (t=100)", worst < 1e-8,
            "max deviation " + fmt(worst)};
}

VerifyResult check_norm_preservation() {
    const LatticeGeometry g({16, 16});
    WalkEngine engine(g, MixingParams::unbiased());
    std::mt19937_64 rng(1234);
    std::normal_distribution<double> gauss;
    AmplitudeField f(g);
    for (std::int64_t i = 0; i < g.size(); ++i) f[i] = Complex{gauss(rng), gauss(rng)};
    f.amps() /= std::sqrt(f.norm_sq());
    f = engine.run(std::move(f), 200);
    const double dev = std::abs(f.norm_sq() - 1.0);
    return {"norm preserved over 200 steps (d=2)", dev < 1e-10, "deviation " + fmt(dev)};
}

VerifyResult check_stay_probability() {
    double worst = 0.0;
    for (int d = 1; d <= 4; ++d) {
        for (const Parity parity : {Parity::Odd, Parity::Even}) {
            const auto u = exponentiate_block(build_block_hamiltonian(d, parity),
                                              MixingParams::unbiased());
            for (std::int64_t k = 0; k < u.mat.rows(); ++k) {
                worst = std::max(worst,
                                 std::abs(std::abs(u.mat(k, k)) - 1.0 / std::numbers::sqrt2));
            }
        }
    }
    return {"half-step stay amplitude is 1/sqrt2 on every vertex", worst < 1e-14,
            "max deviation " + fmt(worst)};
}

} // namespace

std::vector<VerifyResult> run_verify_suite() {
    return {check_block_algebra(),   check_step_equation(),
            check_confinement(),     check_absorption(),
            check_spectral_equivalence(), check_norm_preservation(),
            check_stay_probability()};
}

} // namespace dqw::tools
