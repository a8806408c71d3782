#include "dqw/blocks.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include <nlohmann/json.hpp>

namespace dqw {

namespace {
constexpr double kPairTol = 1e-12;
}

MixingParams MixingParams::from_c(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw InputError("mixing parameter c must lie in [0, 1]");
    }
    return MixingParams{c, std::sqrt(1.0 - c * c)};
}

MixingParams MixingParams::from_cs(double c, double s) {
    if (!(c >= 0.0) || !(s >= 0.0) || std::abs(c * c + s * s - 1.0) > kPairTol) {
        throw InputError("mixing parameters must satisfy c, s >= 0 and c^2 + s^2 = 1");
    }
    return MixingParams{c, s};
}

MixingParams MixingParams::unbiased() {
    const double r = 1.0 / std::numbers::sqrt2;
    return MixingParams{r, r};
}

BlockHamiltonian build_block_hamiltonian(int dim, Parity parity) {
    if (dim < 1 || dim > kMaxBlockDim) {
        throw InputError("block dimension must lie in [1, " +
                         std::to_string(kMaxBlockDim) + "]");
    }
    const std::int64_t n = std::int64_t{1} << dim;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);

    // Term j couples vertex pairs differing in bit j-1 (sigma_2), with a
    // diagonal sign from sigma_3 on all lower bits.
    const Complex minus_i{0.0, -1.0};
    const Complex plus_i{0.0, 1.0};
    for (int j = 1; j <= dim; ++j) {
        const std::uint64_t flip = std::uint64_t{1} << (j - 1);
        const std::uint64_t low_mask = flip - 1;
        for (std::int64_t k = 0; k < n; ++k) {
            const std::int64_t kp = static_cast<std::int64_t>(
                static_cast<std::uint64_t>(k) ^ flip);
            const bool k_bit = (static_cast<std::uint64_t>(k) & flip) != 0;
            const Complex s2 = k_bit ? plus_i : minus_i; // sigma_2[eps, 1-eps]
            const int low_ones =
                std::popcount(static_cast<std::uint64_t>(k) & low_mask);
            const double s3 = (low_ones % 2 == 0) ? 1.0 : -1.0;
            h(k, kp) += -0.5 * s3 * s2;
        }
    }
    if (parity == Parity::Even) {
        h = -h;
    }
    return BlockHamiltonian{dim, parity, std::move(h)};
}

BlockUnitary exponentiate_block(const BlockHamiltonian& h, MixingParams p) {
    const auto report = verify_block_algebra(h);
    if (!report.pass()) {
        throw AlgebraError("block Hamiltonian violates H^2 = (d/4) I");
    }
    const std::int64_t n = h.mat.rows();
    const double scale = 2.0 / std::sqrt(static_cast<double>(h.dim));
    Eigen::MatrixXcd u = p.c * Eigen::MatrixXcd::Identity(n, n) -
                         Complex{0.0, 1.0} * p.s * scale * h.mat;
    return BlockUnitary{h.dim, p.c, p.s, std::move(u)};
}

BlockAlgebraReport verify_block_algebra(const BlockHamiltonian& h) {
    const std::int64_t n = h.mat.rows();
    BlockAlgebraReport report;
    report.hermiticity_deviation =
        (h.mat - h.mat.adjoint()).cwiseAbs().maxCoeff();
    const double quarter_d = static_cast<double>(h.dim) / 4.0;
    report.square_deviation =
        (h.mat * h.mat - quarter_d * Eigen::MatrixXcd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff();
    return report;
}

double unitarity_deviation(const Eigen::MatrixXcd& u) {
    return (u * u.adjoint() -
            Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
        .cwiseAbs()
        .maxCoeff();
}

nlohmann::json block_to_json(const BlockUnitary& u, Parity parity) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::int64_t r = 0; r < u.mat.rows(); ++r) {
        for (std::int64_t c = 0; c < u.mat.cols(); ++c) {
            entries.push_back({u.mat(r, c).real(), u.mat(r, c).imag()});
        }
    }
    return nlohmann::json{{"d", u.dim},
                          {"parity", to_string(parity)},
                          {"c", u.c},
                          {"s", u.s},
                          {"matrix", std::move(entries)}};
}

} // namespace dqw
