#pragma once

// Marked-vertex search: the reflection oracle, the [W^{t1} R]^{t2} loop,
// first-peak detection, (c, t1) parameter scans, and scaling experiments.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqw/evolve.hpp"
#include "dqw/lattice.hpp"

namespace dqw {

struct SearchConfig {
    LatticeGeometry geometry;
    double c = 0.7071067811865476; // 1/sqrt(2)
    int t1 = 3;                    // walk steps per oracle call
    std::int64_t max_calls = 256;  // cap on t2
    std::vector<std::int64_t> marked; // coordinates; empty means the origin
    int threads = 1;
    // Oracle phase e^{i phase} applied to the marked amplitude. The default
    // pi is the reflection R = I - 2|v><v|; other phases are an experiment
    // knob and match no reported constants.
    double oracle_phase = 3.14159265358979323846;

    std::vector<std::int64_t> marked_or_origin() const;
};

// Negate the amplitude at the marked vertex, in place. Involution; exact
// norm preservation.
void reflect_marked(AmplitudeField& f, std::span<const std::int64_t> coords);

struct TracePoint {
    std::int64_t call = 0;        // oracle calls so far (t2)
    std::int64_t total_steps = 0; // walk steps so far = t1 * call
    double p_marked = 0.0;
};

struct SearchTrace {
    std::int64_t n_sites = 0;
    int t1 = 1;
    std::vector<TracePoint> points; // points[0] is the uniform start, 1/N
};

// Run [W^{t1} R]^{t2} from the uniform state, sampling the marked-vertex
// probability after every cycle.
SearchTrace search_run(const SearchConfig& cfg);

struct PeakDetection {
    std::int64_t call = 0;
    double probability = 0.0;
    int window = 3;          // trace smoothing used by the detector
    double rel_floor = 0.5;  // crest gate relative to the smoothed maximum
};

// First genuine crest of the trace: smooth the probability sequence with a
// centred moving average (window points, one-sided at the ends), gate local
// maxima by max(3/N, rel_floor * smoothed maximum), and report the raw-trace
// argmax within the smoothing window of the first gated crest. The gate
// exists because off-optimal (c, t1) traces wiggle above the bare 3/N noise
// floor long before any real rise; (window = 1, rel_floor = 0) recovers the
// bare rule. Throws PeakNotFoundError when the trace ends before a crest.
PeakDetection detect_first_peak(const SearchTrace& trace, int window = 3,
                                double rel_floor = 0.5);

struct ScanRow {
    double c = 0.0;
    int t1 = 0;
    bool found = false;
    std::int64_t peak_call = 0;
    double peak_prob = 0.0;
    std::int64_t total_steps = 0;
    bool best = false;
};

// One search per (c, t1) grid point. Rows with a detected peak are ordered
// by (oracle calls, total walk steps, -peak probability) ascending - fewest
// oracle calls first, walk work as tie-break - followed by rows whose trace
// never peaked; the first row is flagged best.
std::vector<ScanRow> scan_parameters(const LatticeGeometry& g,
                                     std::span<const double> c_grid,
                                     std::span<const int> t1_grid,
                                     std::int64_t max_calls, int threads = 1);

struct SinusoidFit {
    double amplitude = 0.0; // A in A sin^2(Omega c + phi) + B
    double omega = 0.0;     // Omega
    double phase = 0.0;     // phi
    double offset = 0.0;    // B
    double r_squared = 0.0;
    double period = 0.0;    // cycle length in oracle calls, pi / Omega
    bool degenerate = false;
};

// Least-squares fit of the trace to A sin^2(Omega call + phi) + B. The form
// reduces to offset + one harmonic, so the fit scans the harmonic frequency
// and solves linearly per candidate. Throws InputError when the trace spans
// fewer than `cycles` fitted periods. A near-constant trace is flagged
// degenerate instead of fitted.
SinusoidFit periodicity_check(const SearchTrace& trace, int cycles);

struct ScalingSample {
    std::int64_t n_sites = 0;
    double peak_prob = 0.0;
    std::int64_t peak_calls = 0;
    std::int64_t total_steps = 0;
};

struct ScalingFit {
    int dim = 0;
    std::string form_prob;  // "a/log2(N)" (d=2) or "a" (d>=3)
    std::string form_steps; // "b*sqrt(N*log2(N))" (d=2) or "b*sqrt(N)" (d>=3)
    double a_prob = 0.0;
    double a_steps = 0.0;      // fitted on oracle calls
    double a_steps_walk = 0.0; // alternative fit on total walk steps
    double residual_prob = 0.0;  // relative RMS
    double residual_steps = 0.0; // relative RMS (oracle-call fit)
    bool underdetermined = false;
    std::vector<ScalingSample> samples;
};

// Search at every side length, detect the first peak, and fit the
// dimension-appropriate forms by least squares. Steps are counted in oracle
// calls (that is what the reference constants parametrise); the total-walk-
// step fit is reported alongside. max_calls doubles automatically until the
// peak is found; an undetectable peak raises ExperimentError naming the N.
ScalingFit scaling_experiment(int dim, std::span<const std::int64_t> side_list,
                              double c = 0.7071067811865476, int t1 = 3,
                              int threads = 1);

} // namespace dqw
