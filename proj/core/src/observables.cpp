#include "dqw/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dqw/spectral.hpp"

namespace dqw {

ProbabilityDistribution distribution(const AmplitudeField& f) {
    return ProbabilityDistribution{f.geometry(), f.amps().cwiseAbs2()};
}

MomentReport moments_1d(const ProbabilityDistribution& p, double center) {
    const LatticeGeometry& g = p.geometry;
    if (g.dim() != 1) {
        throw InputError("moments_1d requires a 1-D lattice");
    }
    const std::int64_t len = g.side(0);
    // the unwrap seam sits half a ring away from the center
    const std::int64_t seam =
        ring_index_1d(g, static_cast<std::int64_t>(std::floor(center)) + len / 2);
    if (p.probs[seam] > 0.0 || p.probs[(seam + 1) % len] > 0.0) {
        throw UnwrapError("support touches the antipodal seam; enlarge L");
    }
    MomentReport report;
    for (std::int64_t i = 0; i < len; ++i) {
        if (p.probs[i] == 0.0) continue;
        double disp = static_cast<double>(i) - center;
        while (disp > static_cast<double>(len) / 2.0) disp -= static_cast<double>(len);
        while (disp <= -static_cast<double>(len) / 2.0) disp += static_cast<double>(len);
        report.mean_abs += std::abs(disp) * p.probs[i];
        report.second += disp * disp * p.probs[i];
    }
    report.rms = std::sqrt(report.second);
    return report;
}

std::vector<Peak> peak_positions(const ProbabilityDistribution& p, int window) {
    const LatticeGeometry& g = p.geometry;
    if (g.dim() != 1) {
        throw InputError("peak_positions requires a 1-D lattice");
    }
    if (window < 1 || window % 2 == 0) {
        throw InputError("smoothing window must be a positive odd site count");
    }
    const std::int64_t len = g.side(0);
    Eigen::VectorXd smoothed(len);
    const int half = window / 2;
    for (std::int64_t i = 0; i < len; ++i) {
        double acc = 0.0;
        for (int k = -half; k <= half; ++k) {
            acc += p.probs[(i + k + len) % len];
        }
        smoothed[i] = acc / static_cast<double>(window);
    }

    // circular local maxima, plateau-aware: a maximal run of equal values
    // counts once, at its centre. Start the scan at a run boundary so a
    // plateau crossing the array seam stays one run.
    std::int64_t start = -1;
    for (std::int64_t i = 0; i < len; ++i) {
        if (smoothed[i] != smoothed[(i - 1 + len) % len]) {
            start = i;
            break;
        }
    }
    std::vector<Peak> peaks;
    if (start < 0) {
        return peaks; // constant ring, no local structure
    }
    std::int64_t scanned = 0;
    std::int64_t i = start;
    while (scanned < len) {
        std::int64_t run = 1;
        while (run < len - scanned && smoothed[(i + run) % len] == smoothed[i]) {
            ++run;
        }
        const double left = smoothed[(i - 1 + len) % len];
        const double right = smoothed[(i + run) % len];
        if (smoothed[i] > left && smoothed[i] > right) {
            double mid = std::fmod(
                static_cast<double>(i) + static_cast<double>(run - 1) / 2.0,
                static_cast<double>(len));
            if (mid > static_cast<double>(len) / 2.0) mid -= static_cast<double>(len);
            peaks.push_back(Peak{mid, smoothed[i]});
        }
        i = (i + run) % len;
        scanned += run;
    }
    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        if (a.height != b.height) return a.height > b.height;
        return a.position < b.position;
    });
    return peaks;
}

std::pair<std::int64_t, std::int64_t>
support_interval_1d(const ProbabilityDistribution& p, double eps) {
    const LatticeGeometry& g = p.geometry;
    if (g.dim() != 1) {
        throw InputError("support_interval_1d requires a 1-D lattice");
    }
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t i = 0; i < g.side(0); ++i) {
        if (p.probs[i] > eps) {
            const std::int64_t n = signed_site_1d(g, i);
            lo = std::min(lo, n);
            hi = std::max(hi, n);
        }
    }
    if (lo > hi) {
        throw InputError("distribution has no site above the threshold");
    }
    return {lo, hi};
}

double marked_probability(const AmplitudeField& f, std::span<const std::int64_t> coords) {
    return std::norm(f[f.geometry().linear_index(coords)]);
}

std::vector<DensityBin> binned_density_compare(const ProbabilityDistribution& p,
                                               std::int64_t t, int window_cells,
                                               double range_frac) {
    const LatticeGeometry& g = p.geometry;
    if (g.dim() != 1) {
        throw InputError("density comparison requires a 1-D lattice");
    }
    if (window_cells < 1) {
        throw InputError("window must cover at least one unit cell");
    }
    const std::int64_t len = g.side(0);
    const std::int64_t width = 2 * static_cast<std::int64_t>(window_cells);
    const double edge = std::numbers::sqrt2 * static_cast<double>(t);
    const double limit = range_frac * edge;

    std::vector<DensityBin> bins;
    const std::int64_t k_min = -(len / 2) / width - 1;
    const std::int64_t k_max = (len / 2) / width + 1;
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        const std::int64_t lo = width * k + 1;
        const double center =
            static_cast<double>(lo) + static_cast<double>(width - 1) / 2.0;
        if (std::abs(center - 0.5) > limit) continue;
        if (static_cast<double>(lo) - 0.5 <= -edge ||
            static_cast<double>(lo + width - 1) - 0.5 >= edge) {
            continue;
        }
        DensityBin bin;
        bin.center = center;
        for (std::int64_t n = lo; n < lo + width; ++n) {
            bin.empirical += p.probs[ring_index_1d(g, n)];
            bin.smooth += smooth_density(static_cast<double>(n) - 0.5, t);
        }
        bin.empirical /= static_cast<double>(width);
        bin.smooth /= static_cast<double>(width);
        bin.rel_error = std::abs(bin.empirical - bin.smooth) / bin.smooth;
        bins.push_back(bin);
    }
    return bins;
}

} // namespace dqw
