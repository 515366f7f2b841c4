// game.hpp
// Game layer on top of the walk: the payoff functional P_R - P_L, win/loss
// classification, and the built-in game presets.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qwp/walk.hpp"

namespace qwp {

enum class verdict { win, loss, draw };

std::string_view to_string(verdict v);

// P(0) counts toward neither side, so p_right + p_left can be < 1.
struct payoff_record {
    double p_right = 0.0;  // total probability strictly right of the origin
    double p_left = 0.0;   // total probability strictly left of the origin
    double payoff = 0.0;   // p_right - p_left
    verdict result = verdict::draw;
};

// Default absolute tolerance below which a payoff counts as a draw. Exact
// zeros arise only from symmetry; anything larger is a real imbalance.
inline constexpr double default_draw_tol = 1e-12;

// win if payoff > draw_tol, loss if payoff < -draw_tol, draw otherwise.
// Throws std::invalid_argument on negative draw_tol.
verdict classify(double payoff, double draw_tol);

payoff_record payoff(const walk_state& state, double draw_tol = default_draw_tol);

// <x> = sum_x x P(x). Kept alongside the payoff so the two win indicators can
// be compared; they need not share a sign.
double mean_position(const walk_state& state);

// Angle-level description of a coin schedule, the form games are specified in.
struct schedule_spec {
    bool periodic = false;
    coin_angles coin_a;  // the homogeneous coin, or game A's coin
    coin_angles coin_b;  // game B's coin (periodic only)
    int q = 1;
    a_site_rule rule = a_site_rule::all_multiples;

    friend bool operator==(const schedule_spec&, const schedule_spec&) = default;
};

schedule_spec homogeneous_spec(const coin_angles& coin);
schedule_spec periodic_spec(int q, const coin_angles& coin_a, const coin_angles& coin_b,
                            a_site_rule rule = a_site_rule::all_multiples);

// Builds the coin matrices and the site rule from a spec.
coin_schedule make_schedule(const schedule_spec& spec);

struct game_preset {
    std::string name;
    schedule_spec schedule;
    int default_steps = 100;
};

// Built-in games, both maximally winning at q=3 and t=100:
//   game1: A=(-51,45,0),  B=(0,88,-16)
//   game2: A=(0,45,-51),  B=(0,88,-67)
const std::vector<game_preset>& builtin_presets();

// nullptr if the name is unknown.
const game_preset* find_preset(std::string_view name);

// initial_state + evolve + payoff in one call.
payoff_record run_game(const schedule_spec& spec, int steps,
                       const spinor& initial = symmetric_initial_spinor(),
                       double draw_tol = default_draw_tol);

}  // namespace qwp
