#include "qwp/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace qwp {

namespace {

void require_strictly_increasing(const std::vector<double>& v, const char* what) {
    if (v.empty()) throw std::invalid_argument(std::string(what) + ": grid must be non-empty");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) {
            throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
        }
    }
}

void require_strictly_increasing(const std::vector<int>& v, const char* what) {
    if (v.empty()) throw std::invalid_argument(std::string(what) + ": list must be non-empty");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) {
            throw std::invalid_argument(std::string(what) + ": list must be strictly increasing");
        }
    }
}

// Runs body(0..n-1) over a small thread pool. Each index is an independent
// job writing to its own slot, so the schedule cannot affect the result.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace

double extract_m(double beta_deg, int steps) {
    return run_game(homogeneous_spec({90.0, beta_deg, 0.0}), steps).payoff;
}

factorization_report verify_factorization(
    double beta_deg, int steps, const std::vector<std::pair<double, double>>& alpha_gamma_deg) {
    if (alpha_gamma_deg.size() < 3) {
        throw std::invalid_argument("verify_factorization: need at least 3 (alpha, gamma) samples");
    }
    factorization_report report;
    report.beta_deg = beta_deg;
    report.steps = steps;
    report.scale = extract_m(beta_deg, steps);
    report.samples.reserve(alpha_gamma_deg.size());
    for (const auto& [alpha, gamma] : alpha_gamma_deg) {
        factorization_sample s;
        s.alpha_deg = alpha;
        s.gamma_deg = gamma;
        s.measured = run_game(homogeneous_spec({alpha, beta_deg, gamma}), steps).payoff;
        s.predicted = report.scale * std::sin(degrees_to_radians(alpha + gamma));
        report.max_residual = std::max(report.max_residual, std::abs(s.measured - s.predicted));
        report.samples.push_back(s);
    }
    return report;
}

series_result beta_scan(int steps, double alpha_deg, double gamma_deg,
                        const std::vector<double>& beta_grid_deg) {
    require_strictly_increasing(beta_grid_deg, "beta_scan");
    series_result out;
    out.index_name = "beta_deg";
    out.index = beta_grid_deg;
    out.payoffs.reserve(beta_grid_deg.size());
    for (double beta : beta_grid_deg) {
        out.payoffs.push_back(run_game(homogeneous_spec({alpha_deg, beta, gamma_deg}), steps).payoff);
    }
    return out;
}

flatness_result alpha_b_flatness(int steps, int q, const coin_angles& coin_a, double beta_b_deg,
                                 double gamma_b_deg, const std::vector<double>& alpha_b_grid_deg) {
    require_strictly_increasing(alpha_b_grid_deg, "alpha_b_flatness");
    flatness_result out;
    out.series.index_name = "alpha_b_deg";
    out.series.index = alpha_b_grid_deg;
    out.series.payoffs.reserve(alpha_b_grid_deg.size());
    for (double alpha_b : alpha_b_grid_deg) {
        const schedule_spec spec = periodic_spec(q, coin_a, {alpha_b, beta_b_deg, gamma_b_deg});
        out.series.payoffs.push_back(run_game(spec, steps).payoff);
    }
    const auto [lo, hi] = std::minmax_element(out.series.payoffs.begin(), out.series.payoffs.end());
    out.spread = *hi - *lo;
    return out;
}

sweep_grid sweep2d(sweep_mode mode, double beta_a_deg, double beta_b_deg, int q, int steps,
                   const std::vector<double>& axis1_deg, const std::vector<double>& axis2_deg,
                   unsigned threads) {
    require_strictly_increasing(axis1_deg, "sweep2d axis1");
    require_strictly_increasing(axis2_deg, "sweep2d axis2");
    sweep_grid grid;
    grid.axis1_name = mode == sweep_mode::alpha_a_gamma_b ? "alpha_a_deg" : "gamma_a_deg";
    grid.axis2_name = "gamma_b_deg";
    grid.axis1 = axis1_deg;
    grid.axis2 = axis2_deg;
    grid.values.resize(axis1_deg.size() * axis2_deg.size());

    const std::size_t cols = axis2_deg.size();
    parallel_for(grid.values.size(), threads, [&](std::size_t k) {
        const double a1 = axis1_deg[k / cols];
        const double a2 = axis2_deg[k % cols];
        const coin_angles coin_a = mode == sweep_mode::alpha_a_gamma_b
                                       ? coin_angles{a1, beta_a_deg, 0.0}
                                       : coin_angles{0.0, beta_a_deg, a1};
        const coin_angles coin_b{0.0, beta_b_deg, a2};
        grid.values[k] = run_game(periodic_spec(q, coin_a, coin_b), steps).payoff;
    });

    // Strictly-greater keeps the first maximum, i.e. the lexicographically
    // smallest (i, j) on ties.
    std::size_t best = 0;
    for (std::size_t k = 1; k < grid.values.size(); ++k) {
        if (grid.values[k] > grid.values[best]) best = k;
    }
    grid.argmax_i = best / cols;
    grid.argmax_j = best % cols;
    grid.argmax_value = grid.values[best];
    return grid;
}

std::vector<double> payoffs_at_steps(const schedule_spec& spec, const std::vector<int>& steps) {
    require_strictly_increasing(steps, "payoffs_at_steps");
    if (steps.front() < 0) {
        throw std::invalid_argument("payoffs_at_steps: step counts must be non-negative");
    }
    const coin_schedule sched = make_schedule(spec);
    walk_state state = initial_state(symmetric_initial_spinor(), steps.back());
    std::vector<double> out;
    out.reserve(steps.size());
    int t = 0;
    for (int checkpoint : steps) {
        for (; t < checkpoint; ++t) step(state, sched);
        out.push_back(payoff(state).payoff);
    }
    return out;
}

series_result step_series(const schedule_spec& spec, int t_max, bool even_only) {
    if (t_max < 1) throw std::invalid_argument("step_series: t_max must be >= 1");
    std::vector<int> checkpoints;
    for (int t = even_only ? 2 : 1; t <= t_max; t += even_only ? 2 : 1) {
        checkpoints.push_back(t);
    }
    series_result out;
    out.index_name = "t";
    if (checkpoints.empty()) return out;
    out.payoffs = payoffs_at_steps(spec, checkpoints);
    out.index.assign(checkpoints.begin(), checkpoints.end());
    return out;
}

series_result q_series(const coin_angles& coin_a, const coin_angles& coin_b,
                       const std::vector<int>& q_values, int steps) {
    require_strictly_increasing(q_values, "q_series");
    if (q_values.front() < 1) throw std::invalid_argument("q_series: all q must be >= 1");
    series_result out;
    out.index_name = "q";
    out.index.assign(q_values.begin(), q_values.end());
    out.payoffs.reserve(q_values.size());
    for (int q : q_values) {
        out.payoffs.push_back(run_game(periodic_spec(q, coin_a, coin_b), steps).payoff);
    }
    return out;
}

equivalence_result equivalence_report(const schedule_spec& game_x, const schedule_spec& game_y,
                                      const std::vector<int>& t_values,
                                      const std::vector<int>& q_values, double draw_tol) {
    if (!game_x.periodic || !game_y.periodic) {
        throw std::invalid_argument("equivalence_report: both games must be periodic schedules");
    }
    require_strictly_increasing(t_values, "equivalence_report t_values");
    require_strictly_increasing(q_values, "equivalence_report q_values");
    if (t_values.front() < 1 || q_values.front() < 1) {
        throw std::invalid_argument("equivalence_report: t and q values must be >= 1");
    }
    equivalence_result out;
    out.points.reserve(t_values.size() * q_values.size());
    for (int q : q_values) {
        schedule_spec sx = game_x;
        schedule_spec sy = game_y;
        sx.q = q;
        sy.q = q;
        const std::vector<double> px = payoffs_at_steps(sx, t_values);
        const std::vector<double> py = payoffs_at_steps(sy, t_values);
        for (std::size_t i = 0; i < t_values.size(); ++i) {
            equivalence_point pt;
            pt.t = t_values[i];
            pt.q = q;
            pt.payoff_x = px[i];
            pt.payoff_y = py[i];
            pt.verdict_x = classify(px[i], draw_tol);
            pt.verdict_y = classify(py[i], draw_tol);
            out.verdicts_agree = out.verdicts_agree && pt.verdict_x == pt.verdict_y;
            out.max_payoff_diff = std::max(out.max_payoff_diff, std::abs(px[i] - py[i]));
            out.points.push_back(pt);
        }
    }
    return out;
}

}  // namespace qwp
