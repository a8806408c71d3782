#pragma once

// Closed-form Fourier machinery for the 1-D walk: per-mode transfer matrix,
// dispersion, eigenvectors, spectral propagation, and the smoothed
// asymptotic density of the symmetric walk with its moments.
//
// Two wavenumber conventions appear. The analytic formulas (transfer_matrix,
// dispersion, eigenvectors) use the per-site wavenumber k, as in
//
//   M(k) = [ e^{ik} cos k   -i sin k    ]
//          [ -i sin k        e^{-ik} cos k ],   omega_k = acos(cos^2 k).
//
// Propagation works per two-site unit cell m (components psi_e(m) = psi(2m),
// psi_o(m) = psi(2m+1)) with discrete q = 2 pi j / (L/2). The two are the
// same operator in different bookkeeping:
//
//   M(k) = D(k) M_cell(2k) D(k)^{-1},   D(k) = diag(1, e^{ik}),
//
// which is asserted by the test suite.

#include <cstdint>

#include <Eigen/Dense>

#include "dqw/blocks.hpp"
#include "dqw/lattice.hpp"

namespace dqw {

struct TransferMatrix {
    double k = 0.0;
    Eigen::Matrix2cd mat;
};

// The per-site transfer matrix M(k) of the unbiased walk.
TransferMatrix transfer_matrix(double k);

// omega_k = acos(cos^2 k), in [0, pi]. The mode eigenvalues are
// exp(+-i omega_k) = cos^2 k +- i sin k sqrt(1 + cos^2 k).
double dispersion(double k);

struct ModeEigenvectors {
    Eigen::Vector2cd e_plus;
    Eigen::Vector2cd e_minus;
    bool degenerate = false; // k in {0, pi}: both eigenvalues coincide
};

// Normalised eigenvectors of M(k), e_+- ~ (-cos k -+ sqrt(1 + cos^2 k), 1).
// The pair is orthonormal for every k, degenerate or not.
ModeEigenvectors eigenvectors(double k);

// Unit-cell Fourier components of a 1-D field: modes[j] holds
// (psi_e~, psi_o~) at q_j = 2 pi j / m for m = L/2 cells, with the unitary
// 1/sqrt(m) normalisation, so the spectral norm equals the position norm.
struct SpectralState {
    std::int64_t cells = 0;
    Eigen::VectorXcd even_modes;
    Eigen::VectorXcd odd_modes;

    double norm_sq() const {
        return even_modes.squaredNorm() + odd_modes.squaredNorm();
    }
};

SpectralState to_spectral(const AmplitudeField& f);
AmplitudeField from_spectral(const SpectralState& s, const LatticeGeometry& g);

// One-step cell transfer matrix built from the actual d = 1 block unitaries,
// at cell wavenumber q.
Eigen::Matrix2cd cell_transfer_matrix(double q, MixingParams params);

// Evolve a 1-D field t steps by eigendecomposition of every Fourier mode.
// Agrees with WalkEngine::run on the same field to near machine precision.
AmplitudeField spectral_propagate(const AmplitudeField& f, std::int64_t t,
                                  MixingParams params = MixingParams::unbiased());

// Stationary-phase envelope of the symmetric walk,
//   rho(n; t) = 4 t^2 / (pi sqrt(4 t^2 - 2 n^2) (4 t^2 - n^2)),
// defined for |n| < sqrt(2) t (integrable singularities at the ends).
// Compare against a discrete symmetric-walk site n by evaluating at n - 1/2,
// which restores the n <-> 1-n symmetry about the walk's axis.
double smooth_density(double n, std::int64_t t);

struct SmoothMoments {
    double m0 = 0.0;     // integral of rho
    double m1_abs = 0.0; // integral of |n| rho
    double m2 = 0.0;     // integral of n^2 rho
};

// Closed forms: (1, t, 2 (2 - sqrt 2) t^2).
SmoothMoments smooth_moments(std::int64_t t);

// Same moments by quadrature. The substitution n = sqrt(2) t sin(phi)
// removes the endpoint singularities; the transformed integrands are smooth.
SmoothMoments smooth_moments_quadrature(std::int64_t t);

} // namespace dqw
