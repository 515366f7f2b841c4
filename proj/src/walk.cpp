#include "qwp/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qwp {

coin_schedule coin_schedule::homogeneous(const coin_matrix& coin) {
    if (!is_unitary(coin)) {
        throw std::invalid_argument("coin_schedule: coin matrix is not unitary");
    }
    coin_schedule s;
    s.a_ = coin;
    return s;
}

coin_schedule coin_schedule::periodic(int q, const coin_matrix& coin_a, const coin_matrix& coin_b,
                                      a_site_rule rule) {
    if (q < 1) {
        throw std::invalid_argument("coin_schedule: period q must be >= 1, got " +
                                    std::to_string(q));
    }
    if (!is_unitary(coin_a) || !is_unitary(coin_b)) {
        throw std::invalid_argument("coin_schedule: coin matrix is not unitary");
    }
    coin_schedule s;
    s.a_ = coin_a;
    s.b_ = coin_b;
    s.q_ = q;
    s.periodic_ = true;
    s.rule_ = rule;
    return s;
}

spinor symmetric_initial_spinor() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, 0.0}, {0.0, s}};
}

walk_state::walk_state(const spinor& initial, int capacity)
    : capacity_(capacity),
      amp_(2 * (2 * static_cast<std::size_t>(capacity) + 1)),
      scratch_(amp_.size()) {
    amp_[index(0)] = initial.down;
    amp_[index(0) + 1] = initial.up;
}

double walk_state::total_probability() const {
    double sum = 0.0;
    for (const cplx& a : amp_) sum += std::norm(a);
    return sum;
}

walk_state initial_state(const spinor& initial, int capacity) {
    if (capacity < 0) {
        throw std::invalid_argument("initial_state: capacity must be non-negative");
    }
    const double norm = std::norm(initial.down) + std::norm(initial.up);
    if (!(std::abs(norm - 1.0) <= 1e-12)) {
        throw std::invalid_argument("initial_state: spinor is not normalized (|a|^2 + |b|^2 = " +
                                    std::to_string(norm) + ")");
    }
    return walk_state(initial, capacity);
}

void step(walk_state& state, const coin_schedule& schedule) {
    const int t = state.t_;
    if (t + 1 > state.capacity_) {
        throw std::out_of_range("step: capacity " + std::to_string(state.capacity_) +
                                " exceeded at step " + std::to_string(t + 1) +
                                " (allocate capacity >= total steps)");
    }
    const std::vector<cplx>& cur = state.amp_;
    std::vector<cplx>& nxt = state.scratch_;
    // Occupied sites have |x| <= t and the parity of t. Every slot of nxt
    // carrying weight from two steps ago is overwritten below, and the two
    // frontier slots never written -- (t+1, down) and (-t-1, up) -- were zero
    // there as well, so no clearing pass is needed.
    for (int x = -t; x <= t; x += 2) {
        const coin_matrix& u = schedule.coin_for_site(x);
        const std::size_t i = state.index(x);
        const cplx down = cur[i];
        const cplx up = cur[i + 1];
        nxt[i - 2] = u.m00 * down + u.m01 * up;      // new down amplitude, shifted to x-1
        nxt[i + 2 + 1] = u.m10 * down + u.m11 * up;  // new up amplitude, shifted to x+1
    }
    state.t_ = t + 1;
    std::swap(state.amp_, state.scratch_);
}

void evolve(walk_state& state, const coin_schedule& schedule, int steps) {
    if (steps < 0) {
        throw std::invalid_argument("evolve: steps must be non-negative");
    }
    if (state.t() + steps > state.capacity()) {
        throw std::out_of_range("evolve: capacity " + std::to_string(state.capacity()) +
                                " too small for " + std::to_string(steps) + " further steps");
    }
    for (int i = 0; i < steps; ++i) step(state, schedule);
}

std::map<int, double> position_distribution(const walk_state& state) {
    std::map<int, double> dist;
    for (int x = -state.t(); x <= state.t(); x += 2) {
        const double p = state.site_probability(x);
        if (p > 0.0) dist.emplace(x, p);
    }
    return dist;
}

}  // namespace qwp
