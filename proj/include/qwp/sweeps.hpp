// sweeps.hpp
// Experiment layer: beta scans, flatness checks, 2-D angle sweeps with argmax
// extraction, step/period series, and verification of the payoff
// factorization P_R - P_L = M(beta, t) * sin(alpha + gamma).
//
// All experiments start from the symmetric initial spinor; every grid point
// is an independent, deterministic computation, so sweeps may be evaluated in
// parallel without changing the results.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwp/game.hpp"

namespace qwp {

// 1-D payoff series over a strictly increasing index (t, q, or an angle).
struct series_result {
    std::string index_name;
    std::vector<double> index;
    std::vector<double> payoffs;
};

// 2-D payoff surface over two ordered angle grids (degrees), row-major in
// axis1. Argmax ties go to the lexicographically smallest (i, j).
struct sweep_grid {
    std::string axis1_name;
    std::string axis2_name;
    std::vector<double> axis1;
    std::vector<double> axis2;
    std::vector<double> values;  // values[i * axis2.size() + j]
    std::size_t argmax_i = 0;
    std::size_t argmax_j = 0;
    double argmax_value = 0.0;

    double value_at(std::size_t i, std::size_t j) const { return values[i * axis2.size() + j]; }
};

struct factorization_sample {
    double alpha_deg;
    double gamma_deg;
    double measured;   // payoff of the homogeneous walk at (alpha, beta, gamma)
    double predicted;  // M(beta, t) * sin(alpha + gamma)
};

struct factorization_report {
    double beta_deg = 0.0;
    int steps = 0;
    double scale = 0.0;  // M(beta, t)
    std::vector<factorization_sample> samples;
    double max_residual = 0.0;  // max |measured - predicted|
};

struct flatness_result {
    series_result series;
    double spread = 0.0;  // max - min payoff over the grid
};

enum class sweep_mode {
    alpha_a_gamma_b,  // A = (a1, beta_a, 0),  B = (0, beta_b, a2)
    gamma_a_gamma_b,  // A = (0, beta_a, a1),  B = (0, beta_b, a2)
};

// M(beta, t): payoff of the homogeneous walk with alpha = 90, gamma = 0
// (so sin(alpha + gamma) = 1) from the symmetric initial state.
double extract_m(double beta_deg, int steps);

// Measures the payoff at each (alpha, gamma) sample and compares against
// extract_m(beta, steps) * sin(alpha + gamma). Requires >= 3 samples; the
// caller asserts max_residual against its tolerance.
factorization_report verify_factorization(
    double beta_deg, int steps, const std::vector<std::pair<double, double>>& alpha_gamma_deg);

// Payoff of the homogeneous walk (alpha, beta, gamma) per beta grid value.
series_result beta_scan(int steps, double alpha_deg, double gamma_deg,
                        const std::vector<double>& beta_grid_deg);

// Payoff of the periodic walk per alpha_B, holding coin A and (beta_B,
// gamma_B) fixed, plus the max-min spread over the grid.
flatness_result alpha_b_flatness(int steps, int q, const coin_angles& coin_a, double beta_b_deg,
                                 double gamma_b_deg, const std::vector<double>& alpha_b_grid_deg);

// Payoff of the q-periodic game at every (axis1, axis2) angle pair; see
// sweep_mode for which angles the axes drive. threads = 0 uses all cores;
// results are identical for any thread count.
sweep_grid sweep2d(sweep_mode mode, double beta_a_deg, double beta_b_deg, int q, int steps,
                   const std::vector<double>& axis1_deg, const std::vector<double>& axis2_deg,
                   unsigned threads = 0);

// Payoffs at the given step counts from a single incremental evolution.
std::vector<double> payoffs_at_steps(const schedule_spec& spec, const std::vector<int>& steps);

// Payoff after each step count up to t_max; even_only records t = 2, 4, ...
series_result step_series(const schedule_spec& spec, int t_max, bool even_only = true);

// Payoff per period q with fixed coins and step count.
series_result q_series(const coin_angles& coin_a, const coin_angles& coin_b,
                       const std::vector<int>& q_values, int steps);

struct equivalence_point {
    int t = 0;
    int q = 0;
    double payoff_x = 0.0;
    double payoff_y = 0.0;
    verdict verdict_x = verdict::draw;
    verdict verdict_y = verdict::draw;
};

struct equivalence_result {
    std::vector<equivalence_point> points;  // every (q, t) pair, q-major
    bool verdicts_agree = true;
    double max_payoff_diff = 0.0;
};

// Plays two periodic games at every (t, q) combination and reports whether
// their win/loss/draw verdicts agree everywhere, plus the largest payoff gap.
equivalence_result equivalence_report(const schedule_spec& game_x, const schedule_spec& game_y,
                                      const std::vector<int>& t_values,
                                      const std::vector<int>& q_values,
                                      double draw_tol = default_draw_tol);

}  // namespace qwp
