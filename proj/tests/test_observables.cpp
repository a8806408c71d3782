#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dqw/evolve.hpp"
#include "dqw/observables.hpp"
#include "dqw/spectral.hpp"
#include "support/test_helpers.hpp"

using namespace dqw;

namespace {

ProbabilityDistribution symmetric_walk(std::int64_t len, std::int64_t t) {
    const LatticeGeometry g({len});
    WalkEngine engine(g, MixingParams::unbiased());
    return distribution(engine.run(init_symmetric_1d(g), t));
}

} // namespace

TEST_CASE("distribution basics") {
    const LatticeGeometry g({8});
    auto delta = init_delta(g, std::vector<std::int64_t>{3});
    const auto pd = distribution(delta);
    CHECK(pd.probs[3] == 1.0);
    CHECK(pd.total() == 1.0);

    const auto ps = distribution(init_symmetric_1d(g));
    CHECK(ps.probs[0] == doctest::Approx(0.5));
    CHECK(ps.probs[1] == doctest::Approx(0.5));

    WalkEngine engine(g, MixingParams::unbiased());
    auto f = init_delta(g, std::vector<std::int64_t>{0});
    engine.step(f);
    const auto p1 = distribution(f);
    for (const std::int64_t n : {-1, 0, 1, 2}) {
        CHECK(p1.probs[ring_index_1d(g, n)] == doctest::Approx(0.25).epsilon(1e-14));
    }
}

TEST_CASE("distribution total equals field norm") {
    const LatticeGeometry g({4, 6});
    const auto f = test::random_state(g, 8);
    CHECK(distribution(f).total() == doctest::Approx(f.norm_sq()).epsilon(1e-14));
}

TEST_CASE("moments about the symmetry centre") {
    SUBCASE("two-point start") {
        const auto p = symmetric_walk(64, 0);
        const auto m = moments_1d(p, 0.5);
        CHECK(m.mean_abs == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(m.second == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(m.rms == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(m.second >= m.mean_abs * m.mean_abs);
    }

    SUBCASE("long walk approaches the smooth-density moments") {
        const std::int64_t t = 512;
        const auto p = symmetric_walk(4096, t);
        const auto m = moments_1d(p, 0.5);
        CHECK(m.mean_abs / static_cast<double>(t) == doctest::Approx(1.0).epsilon(0.05));
        CHECK(m.second / static_cast<double>(t * t) ==
              doctest::Approx(2 * (2 - std::numbers::sqrt2)).epsilon(0.05));
    }

    SUBCASE("support at the antipode is rejected") {
        const LatticeGeometry g({8});
        auto f = init_uniform(g);
        CHECK_THROWS_AS(moments_1d(distribution(f), 0.5), UnwrapError);
    }
}

TEST_CASE("peak positions") {
    SUBCASE("delta distribution has a single peak at the site") {
        const LatticeGeometry g({64});
        const auto p = distribution(init_delta(g, std::vector<std::int64_t>{10}));
        const auto peaks = peak_positions(p);
        REQUIRE(peaks.size() == 1);
        CHECK(peaks[0].position == doctest::Approx(10.0));
    }

    SUBCASE("delta at the seam still yields one peak") {
        const LatticeGeometry g({64});
        const auto p = distribution(init_delta(g, std::vector<std::int64_t>{0}));
        const auto peaks = peak_positions(p);
        REQUIRE(peaks.size() == 1);
        CHECK(peaks[0].position == doctest::Approx(0.0));
    }

    SUBCASE("t = 32 symmetric walk peaks near +-sqrt(2) t") {
        const auto p = symmetric_walk(256, 32);
        const auto peaks = peak_positions(p);
        REQUIRE(peaks.size() >= 2);
        const double expect = std::numbers::sqrt2 * 32;
        const double hi = std::max(peaks[0].position, peaks[1].position) - 0.5;
        const double lo = std::min(peaks[0].position, peaks[1].position) - 0.5;
        CHECK(std::abs(hi - expect) <= 3.0);
        CHECK(std::abs(lo + expect) <= 3.0);
    }

    SUBCASE("t = 64 peaks within +-4 of +-90.5") {
        const auto p = symmetric_walk(512, 64);
        const auto peaks = peak_positions(p);
        REQUIRE(peaks.size() >= 2);
        const double expect = std::numbers::sqrt2 * 64;
        const double hi = std::max(peaks[0].position, peaks[1].position) - 0.5;
        const double lo = std::min(peaks[0].position, peaks[1].position) - 0.5;
        CHECK(std::abs(hi - expect) <= 4.0);
        CHECK(std::abs(lo + expect) <= 4.0);
    }

    SUBCASE("window must be odd") {
        const auto p = symmetric_walk(64, 4);
        CHECK_THROWS_AS(peak_positions(p, 4), InputError);
    }
}

TEST_CASE("support interval") {
    const LatticeGeometry g({512});
    WalkEngine engine(g, MixingParams::unbiased());

    auto f = init_delta(g, std::vector<std::int64_t>{0});
    CHECK(support_interval_1d(distribution(f)) ==
          std::pair<std::int64_t, std::int64_t>{0, 0});

    engine.step(f);
    CHECK(support_interval_1d(distribution(f)) ==
          std::pair<std::int64_t, std::int64_t>{-1, 2});

    f = engine.run(std::move(f), 9); // t = 10 in total
    const auto [lo, hi] = support_interval_1d(distribution(f));
    CHECK(lo >= -19);
    CHECK(hi <= 20);
}

TEST_CASE("support grows at most two sites per step on each side") {
    const LatticeGeometry g({256});
    WalkEngine engine(g, MixingParams::unbiased());
    auto f = init_symmetric_1d(g);
    auto [lo, hi] = support_interval_1d(distribution(f));
    for (int t = 0; t < 20; ++t) {
        engine.step(f);
        const auto [nlo, nhi] = support_interval_1d(distribution(f));
        CHECK(nlo >= lo - 2);
        CHECK(nhi <= hi + 2);
        lo = nlo;
        hi = nhi;
    }
}

TEST_CASE("marked probability") {
    const LatticeGeometry g({4, 4});
    const std::vector<std::int64_t> v{1, 3};
    CHECK(marked_probability(init_uniform(g), v) == doctest::Approx(1.0 / 16));
    CHECK(marked_probability(init_delta(g, v), v) == doctest::Approx(1.0));
    const auto f = test::random_state(g, 12);
    const double p = marked_probability(f, v);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
}

TEST_CASE("binned density tracks the smooth envelope at t = 32") {
    const auto p = symmetric_walk(256, 32);
    const auto bins = binned_density_compare(p, 32);
    CHECK(bins.size() >= 10);
    for (const auto& bin : bins) {
        CHECK(bin.rel_error < 0.10);
    }
}
