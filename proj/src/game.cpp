#include "qwp/game.hpp"

#include <stdexcept>

namespace qwp {

std::string_view to_string(verdict v) {
    switch (v) {
        case verdict::win: return "Win";
        case verdict::loss: return "Loss";
        case verdict::draw: return "Draw";
    }
    return "?";
}

verdict classify(double payoff, double draw_tol) {
    if (!(draw_tol >= 0.0)) {
        throw std::invalid_argument("classify: draw tolerance must be non-negative");
    }
    if (payoff > draw_tol) return verdict::win;
    if (payoff < -draw_tol) return verdict::loss;
    return verdict::draw;
}

payoff_record payoff(const walk_state& state, double draw_tol) {
    payoff_record rec;
    for (int x = 1; x <= state.t(); ++x) rec.p_right += state.site_probability(x);
    for (int x = -state.t(); x <= -1; ++x) rec.p_left += state.site_probability(x);
    rec.payoff = rec.p_right - rec.p_left;
    rec.result = classify(rec.payoff, draw_tol);
    return rec;
}

double mean_position(const walk_state& state) {
    double mean = 0.0;
    for (int x = -state.t(); x <= state.t(); ++x) {
        mean += x * state.site_probability(x);
    }
    return mean;
}

schedule_spec homogeneous_spec(const coin_angles& coin) {
    schedule_spec s;
    s.coin_a = coin;
    return s;
}

schedule_spec periodic_spec(int q, const coin_angles& coin_a, const coin_angles& coin_b,
                            a_site_rule rule) {
    schedule_spec s;
    s.periodic = true;
    s.coin_a = coin_a;
    s.coin_b = coin_b;
    s.q = q;
    s.rule = rule;
    return s;
}

coin_schedule make_schedule(const schedule_spec& spec) {
    if (!spec.periodic) return coin_schedule::homogeneous(build_coin(spec.coin_a));
    return coin_schedule::periodic(spec.q, build_coin(spec.coin_a), build_coin(spec.coin_b),
                                   spec.rule);
}

const std::vector<game_preset>& builtin_presets() {
    static const std::vector<game_preset> presets = {
        {"game1", periodic_spec(3, {-51, 45, 0}, {0, 88, -16}), 100},
        {"game2", periodic_spec(3, {0, 45, -51}, {0, 88, -67}), 100},
    };
    return presets;
}

const game_preset* find_preset(std::string_view name) {
    for (const game_preset& p : builtin_presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

payoff_record run_game(const schedule_spec& spec, int steps, const spinor& initial,
                       double draw_tol) {
    if (steps < 0) throw std::invalid_argument("run_game: steps must be non-negative");
    walk_state state = initial_state(initial, steps);
    evolve(state, make_schedule(spec), steps);
    return payoff(state, draw_tol);
}

}  // namespace qwp
