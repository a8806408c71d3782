#pragma once

// The 2^d x 2^d block Hamiltonians of the staggered Dirac construction and
// their exact exponentials.
//
// H_o^B = -(1/2) sum_{j=1..d} I^{(x)(d-j)} (x) sigma_2 (x) sigma_3^{(x)(j-1)},
// H_e^B = -H_o^B, with tensor factor j = 1 rightmost, acting on the vertex
// bit eps_1 of the block vertex order (see BlockList). Every term squares to
// (1/4)I and distinct terms anticommute, so H^2 = (d/4) I and
//
//   exp(-i theta (2/sqrt d) H) = cos(theta) I - i sin(theta) (2/sqrt d) H
//
// exactly; the walk parametrises this as U = c I - i s (2/sqrt d) H.

#include <cstdint>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "dqw/errors.hpp"
#include "dqw/lattice.hpp"

namespace dqw {

// Diagonal/off-diagonal weights of a block unitary, |c|^2 + |s|^2 = 1.
// Restricted to real non-negative values; only those are ever needed.
struct MixingParams {
    double c = 0.0;
    double s = 0.0;

    // s computed from c; throws InputError unless 0 <= c <= 1.
    static MixingParams from_c(double c);
    // Validated pair; throws InputError unless c, s >= 0 and c^2 + s^2 = 1.
    static MixingParams from_cs(double c, double s);

    // The unbiased walk weight c = s = 1/sqrt(2).
    static MixingParams unbiased();
};

struct BlockHamiltonian {
    int dim = 0;
    Parity parity = Parity::Odd;
    Eigen::MatrixXcd mat;
};

struct BlockUnitary {
    int dim = 0;
    double c = 0.0;
    double s = 0.0;
    Eigen::MatrixXcd mat;
};

// Largest supported block dimension (block matrices grow as 4^d).
inline constexpr int kMaxBlockDim = 12;

BlockHamiltonian build_block_hamiltonian(int dim, Parity parity);

// U = c I - i s (2/sqrt d) H. Throws AlgebraError if h violates H^2 = (d/4) I.
BlockUnitary exponentiate_block(const BlockHamiltonian& h, MixingParams p);

// Max elementwise deviations from the block algebra.
struct BlockAlgebraReport {
    double hermiticity_deviation = 0.0; // |H - H^dagger|_max
    double square_deviation = 0.0;      // |H^2 - (d/4) I|_max

    bool pass(double tol = 1e-12) const {
        return hermiticity_deviation < tol && square_deviation < tol;
    }
};

BlockAlgebraReport verify_block_algebra(const BlockHamiltonian& h);

// Max elementwise deviation of U U^dagger from the identity.
double unitarity_deviation(const Eigen::MatrixXcd& u);

// Debug dump: {d, parity, c, s, matrix: [[re, im], ...]} (row-major entries).
nlohmann::json block_to_json(const BlockUnitary& u, Parity parity);

} // namespace dqw
