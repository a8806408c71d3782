#include "dqw/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dqw {

namespace {

Eigen::VectorXd smooth_trace(const std::vector<TracePoint>& pts, int window) {
    const std::int64_t n = static_cast<std::int64_t>(pts.size());
    Eigen::VectorXd s(n);
    const int half = window / 2;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t lo = std::max<std::int64_t>(0, i - half);
        const std::int64_t hi = std::min<std::int64_t>(n - 1, i + half);
        double acc = 0.0;
        for (std::int64_t j = lo; j <= hi; ++j) acc += pts[static_cast<std::size_t>(j)].p_marked;
        s[i] = acc / static_cast<double>(hi - lo + 1);
    }
    return s;
}

} // namespace

std::vector<std::int64_t> SearchConfig::marked_or_origin() const {
    if (!marked.empty()) return marked;
    return std::vector<std::int64_t>(static_cast<std::size_t>(geometry.dim()), 0);
}

void reflect_marked(AmplitudeField& f, std::span<const std::int64_t> coords) {
    f[f.geometry().linear_index(coords)] *= -1.0;
}

SearchTrace search_run(const SearchConfig& cfg) {
    if (cfg.t1 < 1) throw InputError("t1 must be at least 1");
    if (cfg.max_calls < 1) throw InputError("max_calls must be at least 1");
    if (!(cfg.c > 0.0 && cfg.c < 1.0)) throw InputError("c must lie in (0, 1)");

    const auto marked = cfg.marked_or_origin();
    const std::int64_t marked_idx = cfg.geometry.linear_index(marked);
    WalkEngine engine(cfg.geometry, MixingParams::from_c(cfg.c), cfg.threads);
    AmplitudeField psi = init_uniform(cfg.geometry);
    const Complex oracle = std::polar(1.0, cfg.oracle_phase);

    SearchTrace trace;
    trace.n_sites = cfg.geometry.size();
    trace.t1 = cfg.t1;
    trace.points.reserve(static_cast<std::size_t>(cfg.max_calls) + 1);
    trace.points.push_back({0, 0, std::norm(psi[marked_idx])});
    for (std::int64_t call = 1; call <= cfg.max_calls; ++call) {
        psi[marked_idx] *= oracle;
        for (int s = 0; s < cfg.t1; ++s) engine.step(psi);
        trace.points.push_back(
            {call, call * cfg.t1, std::norm(psi[marked_idx])});
    }
    return trace;
}

PeakDetection detect_first_peak(const SearchTrace& trace, int window,
                                double rel_floor) {
    if (trace.points.empty()) throw InputError("empty search trace");
    if (window < 1 || window % 2 == 0) {
        throw InputError("detector window must be a positive odd count");
    }
    const std::int64_t n = static_cast<std::int64_t>(trace.points.size());
    const Eigen::VectorXd s = smooth_trace(trace.points, window);
    const double floor =
        std::max(3.0 / static_cast<double>(trace.n_sites), rel_floor * s.maxCoeff());
    const int half = window / 2;
    for (std::int64_t i = 1; i + 1 < n; ++i) {
        if (s[i] >= floor && s[i] >= s[i - 1] && s[i] > s[i + 1]) {
            const std::int64_t lo = std::max<std::int64_t>(0, i - half);
            const std::int64_t hi = std::min<std::int64_t>(n - 1, i + half);
            std::int64_t arg = lo;
            for (std::int64_t j = lo + 1; j <= hi; ++j) {
                if (trace.points[static_cast<std::size_t>(j)].p_marked >
                    trace.points[static_cast<std::size_t>(arg)].p_marked) {
                    arg = j;
                }
            }
            return PeakDetection{trace.points[static_cast<std::size_t>(arg)].call,
                                 trace.points[static_cast<std::size_t>(arg)].p_marked,
                                 window, rel_floor};
        }
    }
    throw PeakNotFoundError(
        "no qualifying peak within " + std::to_string(n - 1) +
        " oracle calls; raise max_calls or adjust parameters");
}

std::vector<ScanRow> scan_parameters(const LatticeGeometry& g,
                                     std::span<const double> c_grid,
                                     std::span<const int> t1_grid,
                                     std::int64_t max_calls, int threads) {
    if (c_grid.empty() || t1_grid.empty()) {
        throw InputError("scan grids must be non-empty");
    }
    std::vector<ScanRow> rows;
    rows.reserve(c_grid.size() * t1_grid.size());
    for (const double c : c_grid) {
        for (const int t1 : t1_grid) {
            SearchConfig cfg{g};
            cfg.c = c;
            cfg.t1 = t1;
            cfg.max_calls = max_calls;
            cfg.threads = threads;
            const SearchTrace trace = search_run(cfg);
            ScanRow row;
            row.c = c;
            row.t1 = t1;
            try {
                const PeakDetection peak = detect_first_peak(trace);
                row.found = true;
                row.peak_call = peak.call;
                row.peak_prob = peak.probability;
                row.total_steps = peak.call * t1;
            } catch (const PeakNotFoundError&) {
                row.found = false;
            }
            rows.push_back(row);
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
        if (a.found != b.found) return a.found;
        if (!a.found) return false;
        if (a.peak_call != b.peak_call) return a.peak_call < b.peak_call;
        if (a.total_steps != b.total_steps) return a.total_steps < b.total_steps;
        return a.peak_prob > b.peak_prob;
    });
    if (!rows.empty() && rows.front().found) {
        rows.front().best = true;
    }
    return rows;
}

SinusoidFit periodicity_check(const SearchTrace& trace, int cycles) {
    const std::int64_t n = static_cast<std::int64_t>(trace.points.size());
    if (n < 8) throw InputError("trace too short for a periodicity fit");
    if (cycles < 1) throw InputError("cycles must be positive");

    Eigen::VectorXd y(n);
    for (std::int64_t i = 0; i < n; ++i) {
        y[i] = trace.points[static_cast<std::size_t>(i)].p_marked;
    }
    const double mean = y.mean();
    const double sst = (y.array() - mean).matrix().squaredNorm();
    if (sst < 1e-24) {
        SinusoidFit flat;
        flat.offset = mean;
        flat.degenerate = true;
        return flat;
    }

    // A sin^2(Omega c + phi) + B == C0 + a cos(w c) + b sin(w c), w = 2 Omega:
    // scan w, solve the linear subproblem, keep the best, then refine w by
    // parabolic interpolation on the residual.
    const auto solve_at = [&](double w, Eigen::Vector3d* coef) {
        Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
        Eigen::Vector3d aty = Eigen::Vector3d::Zero();
        for (std::int64_t i = 0; i < n; ++i) {
            const double ci = std::cos(w * static_cast<double>(i));
            const double si = std::sin(w * static_cast<double>(i));
            const Eigen::Vector3d row{1.0, ci, si};
            ata += row * row.transpose();
            aty += row * y[i];
        }
        const Eigen::Vector3d beta = ata.ldlt().solve(aty);
        double sse = 0.0;
        for (std::int64_t i = 0; i < n; ++i) {
            const double fit = beta[0] + beta[1] * std::cos(w * static_cast<double>(i)) +
                               beta[2] * std::sin(w * static_cast<double>(i));
            sse += (y[i] - fit) * (y[i] - fit);
        }
        if (coef) *coef = beta;
        return sse;
    };

    const int grid = 4000;
    double best_w = 0.0;
    double best_sse = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= grid; ++j) {
        const double w = std::numbers::pi * static_cast<double>(j) / grid;
        const double sse = solve_at(w, nullptr);
        if (sse < best_sse) {
            best_sse = sse;
            best_w = w;
        }
    }
    const double dw = std::numbers::pi / grid;
    for (double step = dw; step > 1e-7; step /= 2.0) {
        for (const double cand : {best_w - step, best_w + step}) {
            if (cand <= 0.0 || cand > std::numbers::pi) continue;
            const double sse = solve_at(cand, nullptr);
            if (sse < best_sse) {
                best_sse = sse;
                best_w = cand;
            }
        }
    }

    Eigen::Vector3d beta;
    best_sse = solve_at(best_w, &beta);

    SinusoidFit fit;
    fit.amplitude = 2.0 * std::hypot(beta[1], beta[2]);
    fit.omega = best_w / 2.0;
    fit.phase = 0.5 * std::atan2(beta[2], -beta[1]);
    fit.offset = beta[0] - fit.amplitude / 2.0;
    fit.r_squared = 1.0 - best_sse / sst;
    fit.period = std::numbers::pi / fit.omega;
    fit.degenerate = fit.amplitude < 1e-6 * (y.maxCoeff() - y.minCoeff() + 1e-300);

    if (static_cast<double>(n - 1) < fit.period * static_cast<double>(cycles)) {
        throw InputError("trace covers fewer than the requested cycles");
    }
    return fit;
}

namespace {

double relative_rms(const std::vector<double>& obs, const std::vector<double>& fit) {
    double acc = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double r = (obs[i] - fit[i]) / obs[i];
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(obs.size()));
}

// least-squares amplitude for y ~ a * x
double fit_scale(const std::vector<double>& x, const std::vector<double>& y) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += x[i] * y[i];
        den += x[i] * x[i];
    }
    return num / den;
}

} // namespace

ScalingFit scaling_experiment(int dim, std::span<const std::int64_t> side_list,
                              double c, int t1, int threads) {
    if (dim < 2) {
        throw InputError("scaling experiment needs dimension >= 2");
    }
    if (side_list.empty()) {
        throw InputError("side list must be non-empty");
    }

    ScalingFit fit;
    fit.dim = dim;
    fit.form_prob = dim == 2 ? "a/log2(N)" : "a";
    fit.form_steps = dim == 2 ? "b*sqrt(N*log2(N))" : "b*sqrt(N)";

    constexpr std::int64_t kMaxCallsCap = 1 << 15;
    for (const std::int64_t side : side_list) {
        const LatticeGeometry g = LatticeGeometry::cube(dim, side);
        SearchConfig cfg{g};
        cfg.c = c;
        cfg.t1 = t1;
        cfg.threads = threads;
        cfg.max_calls = 64;
        std::optional<PeakDetection> peak;
        while (!peak) {
            const SearchTrace trace = search_run(cfg);
            try {
                peak = detect_first_peak(trace);
            } catch (const PeakNotFoundError&) {
                if (cfg.max_calls >= kMaxCallsCap) {
                    throw ExperimentError("no first peak found for N = " +
                                          std::to_string(g.size()));
                }
                cfg.max_calls *= 2;
            }
        }
        fit.samples.push_back(ScalingSample{g.size(), peak->probability,
                                            peak->call, peak->call * t1});
    }

    std::vector<double> xs_prob, ys_prob, xs_steps, ys_calls, ys_walk;
    for (const auto& s : fit.samples) {
        const double n = static_cast<double>(s.n_sites);
        xs_prob.push_back(dim == 2 ? 1.0 / std::log2(n) : 1.0);
        ys_prob.push_back(s.peak_prob);
        xs_steps.push_back(dim == 2 ? std::sqrt(n * std::log2(n)) : std::sqrt(n));
        ys_calls.push_back(static_cast<double>(s.peak_calls));
        ys_walk.push_back(static_cast<double>(s.total_steps));
    }
    fit.a_prob = fit_scale(xs_prob, ys_prob);
    fit.a_steps = fit_scale(xs_steps, ys_calls);
    fit.a_steps_walk = fit_scale(xs_steps, ys_walk);
    fit.underdetermined = fit.samples.size() < 2;

    std::vector<double> fitted_prob, fitted_calls;
    for (std::size_t i = 0; i < fit.samples.size(); ++i) {
        fitted_prob.push_back(fit.a_prob * xs_prob[i]);
        fitted_calls.push_back(fit.a_steps * xs_steps[i]);
    }
    fit.residual_prob = relative_rms(ys_prob, fitted_prob);
    fit.residual_steps = relative_rms(ys_calls, fitted_calls);
    return fit;
}

} // namespace dqw
