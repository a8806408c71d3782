#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dqw/evolve.hpp"
#include "dqw/spectral.hpp"
#include "support/test_helpers.hpp"

using namespace dqw;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("transfer matrix at the printed points") {
    const auto m0 = transfer_matrix(0.0);
    CHECK((m0.mat - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);

    const auto mh = transfer_matrix(kPi / 2);
    Eigen::Matrix2cd expect;
    expect << Complex{0, 0}, Complex{0, -1}, Complex{0, -1}, Complex{0, 0};
    CHECK((mh.mat - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("transfer matrix is special-unitary on a dense grid") {
    for (int j = 0; j <= 10000; ++j) {
        const double k = -kPi + 2 * kPi * j / 10000.0;
        const auto m = transfer_matrix(k);
        CHECK(std::abs(m.mat.determinant() - Complex{1.0, 0.0}) < 1e-14);
        CHECK((m.mat * m.mat.adjoint() - Eigen::Matrix2cd::Identity())
                  .cwiseAbs()
                  .maxCoeff() < 1e-14);
        // eigenvalues cos^2 k +- i sin k sqrt(1 + cos^2 k), unit modulus
        const double ck = std::cos(k);
        const Complex lp{ck * ck, std::sin(k) * std::sqrt(1 + ck * ck)};
        CHECK(std::abs(std::abs(lp) - 1.0) < 1e-14);
        const Eigen::Vector2cd ev = m.mat.eigenvalues();
        const double d0 = std::min(std::abs(ev[0] - lp), std::abs(ev[1] - lp));
        CHECK(d0 < 1e-12);
    }
}

TEST_CASE("dispersion values") {
    CHECK(dispersion(0.0) == doctest::Approx(0.0));
    CHECK(dispersion(kPi / 2) == doctest::Approx(kPi / 2));
    CHECK(dispersion(kPi / 4) == doctest::Approx(kPi / 3));

    // eigenvalues at k = pi/4: 1/2 +- i (1/sqrt 2) sqrt(3/2)
    const auto m = transfer_matrix(kPi / 4);
    const Complex lp{0.5, std::sqrt(1.5) / std::numbers::sqrt2};
    const Eigen::Vector2cd ev = m.mat.eigenvalues();
    CHECK(std::min(std::abs(ev[0] - lp), std::abs(ev[1] - lp)) < 1e-12);
}

TEST_CASE("dispersion is even; group speed tops out at sqrt 2 per step") {
    // omega counts phase per full W step (two nearest-neighbour sweeps), so
    // the extremal slope sqrt(2) is 1/sqrt(2) per half-step - the walk's
    // propagation speed, and the +-sqrt(2) t peak locations.
    double max_slope = 0.0;
    const int n = 20000;
    for (int j = 0; j <= n; ++j) {
        const double k = -kPi + 2 * kPi * j / n;
        CHECK(dispersion(k) == doctest::Approx(dispersion(-k)).epsilon(1e-12));
        const double h = 1e-6;
        if (j > 0 && j < n) {
            const double slope = (dispersion(k + h) - dispersion(k - h)) / (2 * h);
            max_slope = std::max(max_slope, std::abs(slope));
        }
    }
    CHECK(max_slope == doctest::Approx(std::numbers::sqrt2).epsilon(1e-4));
    CHECK(max_slope / 2.0 == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-4));
    // fastest phase advance at k = pi/2
    CHECK(dispersion(kPi / 2) >= dispersion(kPi / 2 - 0.05));
    CHECK(dispersion(kPi / 2) >= dispersion(kPi / 2 + 0.05));
}

TEST_CASE("eigenvectors") {
    SUBCASE("k = pi/2 gives (-+1, 1)/sqrt 2") {
        const auto pair = eigenvectors(kPi / 2);
        CHECK(std::abs(pair.e_plus[0] + pair.e_plus[1]) < 1e-14); // (-1, 1) direction
        CHECK(std::abs(pair.e_minus[0] - pair.e_minus[1]) < 1e-14);
        CHECK(!pair.degenerate);
    }

    SUBCASE("orthonormal eigenpairs of M(k) on a grid") {
        for (int j = 1; j < 400; ++j) {
            const double k = -kPi + 2 * kPi * j / 400.0;
            const auto pair = eigenvectors(k);
            CHECK(std::abs(pair.e_plus.dot(pair.e_minus)) < 1e-12);
            const auto m = transfer_matrix(k);
            const double ck = std::cos(k);
            const Complex lp{ck * ck, std::sin(k) * std::sqrt(1 + ck * ck)};
            const Complex lm = std::conj(lp);
            CHECK((m.mat * pair.e_plus - lp * pair.e_plus).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((m.mat * pair.e_minus - lm * pair.e_minus).cwiseAbs().maxCoeff() < 1e-12);
        }
    }

    SUBCASE("degenerate points flagged") {
        CHECK(eigenvectors(0.0).degenerate);
        CHECK(eigenvectors(kPi).degenerate);
        CHECK(!eigenvectors(0.3).degenerate);
    }
}

TEST_CASE("printed M(k) is the cell transfer matrix up to the site phase") {
    // M(k) = D(k) M_cell(2k) D(k)^{-1}, D = diag(1, e^{ik})
    for (int j = 0; j <= 97; ++j) {
        const double k = -kPi + 2 * kPi * j / 97.0;
        Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
        d(0, 0) = Complex{1.0, 0.0};
        d(1, 1) = std::polar(1.0, k);
        const Eigen::Matrix2cd lhs = transfer_matrix(k).mat;
        const Eigen::Matrix2cd rhs =
            d * cell_transfer_matrix(2 * k, MixingParams::unbiased()) * d.inverse();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("spectral transform is unitary (Parseval) and invertible") {
    const LatticeGeometry g({128});
    const auto f = test::random_state(g, 42);
    const auto s = to_spectral(f);
    CHECK(s.norm_sq() == doctest::Approx(f.norm_sq()).epsilon(1e-10));
    const auto back = from_spectral(s, g);
    CHECK((back.amps() - f.amps()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spectral propagation: identity at t = 0") {
    const LatticeGeometry g({64});
    const auto f = init_symmetric_1d(g);
    const auto out = spectral_propagate(f, 0);
    CHECK((out.amps() - f.amps()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spectral propagation agrees with direct evolution") {
    SUBCASE("delta start, t = 32, L = 256") {
        const LatticeGeometry g({256});
        const auto f0 = init_delta(g, std::vector<std::int64_t>{0});
        WalkEngine engine(g, MixingParams::unbiased());
        const auto direct = engine.run(f0, 32);
        const auto spectral = spectral_propagate(f0, 32);
        CHECK((direct.amps() - spectral.amps()).cwiseAbs().maxCoeff() < 1e-8);
    }
    SUBCASE("symmetric start, t = 100, L = 512") {
        const LatticeGeometry g({512});
        const auto f0 = init_symmetric_1d(g);
        WalkEngine engine(g, MixingParams::unbiased());
        const auto direct = engine.run(f0, 100);
        const auto spectral = spectral_propagate(f0, 100);
        CHECK((direct.amps() - spectral.amps()).cwiseAbs().maxCoeff() < 1e-8);
    }
    SUBCASE("biased walk c = 0.6") {
        const LatticeGeometry g({128});
        const auto f0 = test::random_state(g, 9);
        const auto p = MixingParams::from_c(0.6);
        WalkEngine engine(g, p);
        const auto direct = engine.run(f0, 25);
        const auto spectral = spectral_propagate(f0, 25, p);
        CHECK((direct.amps() - spectral.amps()).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("spectral propagation composes additively") {
    const LatticeGeometry g({128});
    const auto f = test::random_state(g, 4);
    const auto once = spectral_propagate(spectral_propagate(f, 13), 19);
    const auto joint = spectral_propagate(f, 32);
    CHECK((once.amps() - joint.amps()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("smooth density values and domain") {
    CHECK(smooth_density(0.0, 32) == doctest::Approx(1.0 / (2 * kPi * 32)));
    // diverges towards the band edge
    CHECK(smooth_density(0.9999 * std::numbers::sqrt2 * 32, 32) >
          100 * smooth_density(0.0, 32));
    CHECK_THROWS_AS(smooth_density(std::numbers::sqrt2 * 32, 32), DomainError);
    CHECK_THROWS_AS(smooth_density(-46.0, 32), DomainError);
}

TEST_CASE("smooth moments: closed form and quadrature") {
    const auto m1 = smooth_moments(1);
    CHECK(m1.m0 == 1.0);
    CHECK(m1.m1_abs == 1.0);
    CHECK(m1.m2 == doctest::Approx(2 * (2 - std::numbers::sqrt2)).epsilon(1e-15));

    const auto m32 = smooth_moments(32);
    CHECK(m32.m2 == doctest::Approx(2 * (2 - std::numbers::sqrt2) * 1024).epsilon(1e-15));
    CHECK(m32.m2 == doctest::Approx(1199.69).epsilon(1e-5));

    for (const std::int64_t t : {std::int64_t{1}, std::int64_t{8}, std::int64_t{64}}) {
        const auto closed = smooth_moments(t);
        const auto quad = smooth_moments_quadrature(t);
        CHECK(quad.m0 == doctest::Approx(closed.m0).epsilon(1e-6));
        CHECK(quad.m1_abs == doctest::Approx(closed.m1_abs).epsilon(1e-6));
        CHECK(quad.m2 == doctest::Approx(closed.m2).epsilon(1e-6));
    }
}
