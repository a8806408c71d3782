#pragma once

// Probability distributions over lattice sites and the measurements taken
// from them: moments, peak finding, support intervals, marked-vertex
// probability, and the binned comparison against the smooth density.

#include <cstdint>
#include <utility>
#include <vector>

#include "dqw/lattice.hpp"

namespace dqw {

struct ProbabilityDistribution {
    LatticeGeometry geometry;
    Eigen::VectorXd probs;

    double total() const { return probs.sum(); }
};

// probs[i] = |amps[i]|^2
ProbabilityDistribution distribution(const AmplitudeField& f);

struct MomentReport {
    double mean_abs = 0.0; // <|n - center|>
    double second = 0.0;   // <(n - center)^2>
    double rms = 0.0;      // sqrt(second)
};

// 1-D moments about `center` (1/2 for the symmetric walk, 0 for the origin
// walk), with ring positions unwrapped into (-L/2, L/2]. Throws UnwrapError
// when probability sits on either site adjacent to the antipodal seam,
// because signed displacements are then ambiguous - enlarge L.
MomentReport moments_1d(const ProbabilityDistribution& p, double center);

struct Peak {
    double position = 0.0; // signed ring position; half-integral for plateaus
    double height = 0.0;   // smoothed probability at the peak
};

// Local maxima of the distribution after a circular moving average of
// `window` sites (odd, >= 1). The raw distribution alternates strongly
// between neighbouring sites, so unsmoothed argmax is unstable. Plateaus
// count once, at their centre. Sorted by height descending.
std::vector<Peak> peak_positions(const ProbabilityDistribution& p, int window = 5);

// Smallest signed-position interval containing every site with
// probability > eps; eps = 0 gives the exact support.
std::pair<std::int64_t, std::int64_t>
support_interval_1d(const ProbabilityDistribution& p, double eps = 0.0);

// |psi(v)|^2
double marked_probability(const AmplitudeField& f, std::span<const std::int64_t> coords);

// One bin of the empirical-vs-smooth-density comparison for the symmetric
// walk. Bins are `window_cells` two-site unit cells wide (2 * window_cells
// sites) and the bin partition is aligned to the walk's symmetry axis
// n = 1/2, i.e. bins {w k + 1, ..., w k + w} for w = 2 * window_cells; that
// alignment is what lets the bin means track the envelope. The smooth
// density is evaluated at n - 1/2 per the symmetry restoration.
struct DensityBin {
    double center = 0.0;    // mean signed position of the bin's sites
    double empirical = 0.0; // bin mean of |psi(n)|^2
    double smooth = 0.0;    // bin mean of rho(n - 1/2; t)
    double rel_error = 0.0;
};

// Bins whose centre c satisfies |c - 1/2| <= range_frac * sqrt(2) t and whose
// sites all lie inside the smooth density's domain.
std::vector<DensityBin> binned_density_compare(const ProbabilityDistribution& p,
                                               std::int64_t t,
                                               int window_cells = 4,
                                               double range_frac = 0.9);

} // namespace dqw
