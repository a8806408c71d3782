#include "dqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace dqw {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Matrix2cd block_matrix_1d(Parity parity, MixingParams params) {
    return exponentiate_block(build_block_hamiltonian(1, parity), params).mat;
}

} // namespace

TransferMatrix transfer_matrix(double k) {
    const double ck = std::cos(k);
    const double sk = std::sin(k);
    Eigen::Matrix2cd m;
    m << std::exp(kI * k) * ck, -kI * sk,
         -kI * sk,              std::exp(-kI * k) * ck;
    return TransferMatrix{k, m};
}

double dispersion(double k) {
    const double c = std::cos(k);
    return std::acos(std::clamp(c * c, -1.0, 1.0));
}

ModeEigenvectors eigenvectors(double k) {
    const double ck = std::cos(k);
    const double root = std::sqrt(1.0 + ck * ck);
    ModeEigenvectors out;
    out.e_plus << Complex{-ck - root, 0.0}, Complex{1.0, 0.0};
    out.e_minus << Complex{-ck + root, 0.0}, Complex{1.0, 0.0};
    out.e_plus.normalize();
    out.e_minus.normalize();
    out.degenerate = std::abs(std::sin(k) * root) < 1e-14;
    return out;
}

SpectralState to_spectral(const AmplitudeField& f) {
    const LatticeGeometry& g = f.geometry();
    if (g.dim() != 1) {
        throw InputError("spectral transform is defined on a 1-D lattice");
    }
    const std::int64_t cells = g.side(0) / 2;
    SpectralState s;
    s.cells = cells;
    s.even_modes = Eigen::VectorXcd::Zero(cells);
    s.odd_modes = Eigen::VectorXcd::Zero(cells);
    const double base = 2.0 * std::numbers::pi / static_cast<double>(cells);
    const double scale = 1.0 / std::sqrt(static_cast<double>(cells));
    for (std::int64_t j = 0; j < cells; ++j) {
        const double q = base * static_cast<double>(j);
        Complex acc_e{0.0, 0.0};
        Complex acc_o{0.0, 0.0};
        for (std::int64_t m = 0; m < cells; ++m) {
            const Complex w = std::exp(kI * (q * static_cast<double>(m)));
            acc_e += w * f[2 * m];
            acc_o += w * f[2 * m + 1];
        }
        s.even_modes[j] = scale * acc_e;
        s.odd_modes[j] = scale * acc_o;
    }
    return s;
}

AmplitudeField from_spectral(const SpectralState& s, const LatticeGeometry& g) {
    if (g.dim() != 1 || g.side(0) / 2 != s.cells) {
        throw InputError("spectral state does not match the lattice");
    }
    AmplitudeField f(g);
    const std::int64_t cells = s.cells;
    const double base = 2.0 * std::numbers::pi / static_cast<double>(cells);
    const double scale = 1.0 / std::sqrt(static_cast<double>(cells));
    for (std::int64_t m = 0; m < cells; ++m) {
        Complex acc_e{0.0, 0.0};
        Complex acc_o{0.0, 0.0};
        for (std::int64_t j = 0; j < cells; ++j) {
            const Complex w = std::exp(-kI * (base * static_cast<double>(j) *
                                              static_cast<double>(m)));
            acc_e += w * s.even_modes[j];
            acc_o += w * s.odd_modes[j];
        }
        f[2 * m] = scale * acc_e;
        f[2 * m + 1] = scale * acc_o;
    }
    return f;
}

Eigen::Matrix2cd cell_transfer_matrix(double q, MixingParams params) {
    // U_o mixes the two sites of one cell; U_e couples the even site of cell
    // m to the odd site of cell m-1, which turns into the phase e^{+-iq}.
    const Eigen::Matrix2cd bo = block_matrix_1d(Parity::Odd, params);
    const Eigen::Matrix2cd be = block_matrix_1d(Parity::Even, params);
    Eigen::Matrix2cd ue;
    ue << be(0, 0), be(0, 1) * std::exp(kI * q),
          be(1, 0) * std::exp(-kI * q), be(1, 1);
    return ue * bo;
}

AmplitudeField spectral_propagate(const AmplitudeField& f, std::int64_t t,
                                  MixingParams params) {
    if (f.geometry().dim() != 1) {
        throw InputError("spectral propagation is defined on a 1-D lattice");
    }
    if (t < 0) {
        throw InputError("step count must be non-negative");
    }
    SpectralState s = to_spectral(f);
    const double base = 2.0 * std::numbers::pi / static_cast<double>(s.cells);
    for (std::int64_t j = 0; j < s.cells; ++j) {
        const Eigen::Matrix2cd m = cell_transfer_matrix(base * static_cast<double>(j), params);
        Eigen::Vector2cd v{s.even_modes[j], s.odd_modes[j]};
        if (std::abs(m(0, 1)) < 1e-14) {
            // diagonal mode (q = 0, or s = 0): plain phase accumulation
            const double we = std::arg(m(0, 0));
            const double wo = std::arg(m(1, 1));
            v[0] *= std::polar(1.0, we * static_cast<double>(t));
            v[1] *= std::polar(1.0, wo * static_cast<double>(t));
        } else {
            // det = 1 and real trace, so the eigenvalues are e^{+-i omega}
            const double half_trace = 0.5 * m.trace().real();
            const double omega = std::acos(std::clamp(half_trace, -1.0, 1.0));
            const Complex lp = std::polar(1.0, omega);
            const Complex lm = std::polar(1.0, -omega);
            Eigen::Vector2cd ep{m(0, 1), lp - m(0, 0)};
            Eigen::Vector2cd em{m(0, 1), lm - m(0, 0)};
            ep.normalize();
            em.normalize();
            const Complex cp = ep.dot(v); // Eigen: conjugate-linear in ep
            const Complex cm = em.dot(v);
            v = std::polar(1.0, omega * static_cast<double>(t)) * cp * ep +
                std::polar(1.0, -omega * static_cast<double>(t)) * cm * em;
        }
        s.even_modes[j] = v[0];
        s.odd_modes[j] = v[1];
    }
    return from_spectral(s, f.geometry());
}

double smooth_density(double n, std::int64_t t) {
    const double td = static_cast<double>(t);
    const double four_t2 = 4.0 * td * td;
    if (n * n * 2.0 >= four_t2) {
        throw DomainError("smooth density is defined for |n| < sqrt(2) t");
    }
    return four_t2 /
           (std::numbers::pi * std::sqrt(four_t2 - 2.0 * n * n) * (four_t2 - n * n));
}

SmoothMoments smooth_moments(std::int64_t t) {
    if (t < 1) {
        throw InputError("moments need t >= 1");
    }
    const double td = static_cast<double>(t);
    return SmoothMoments{1.0, td, 2.0 * (2.0 - std::numbers::sqrt2) * td * td};
}

SmoothMoments smooth_moments_quadrature(std::int64_t t) {
    if (t < 1) {
        throw InputError("moments need t >= 1");
    }
    using boost::math::quadrature::gauss_kronrod;
    const double td = static_cast<double>(t);
    const double root2 = std::numbers::sqrt2;
    // n = sqrt(2) t sin(phi) maps the density to sqrt(2)/(pi (2 - sin^2 phi));
    // all three integrands are even in phi, so integrate [0, pi/2] and double.
    const auto weight = [root2](double phi) {
        const double s = std::sin(phi);
        return root2 / (std::numbers::pi * (2.0 - s * s));
    };
    const auto integrate = [&](auto&& f) {
        return 2.0 * gauss_kronrod<double, 61>::integrate(
                         f, 0.0, std::numbers::pi / 2.0, 10, 1e-13);
    };
    SmoothMoments out;
    out.m0 = integrate([&](double phi) { return weight(phi); });
    out.m1_abs = integrate([&](double phi) {
        return root2 * td * std::sin(phi) * weight(phi);
    });
    out.m2 = integrate([&](double phi) {
        const double n = root2 * td * std::sin(phi);
        return n * n * weight(phi);
    });
    return out;
}

} // namespace dqw
