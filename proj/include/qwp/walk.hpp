// walk.hpp
// State-vector evolution of a one-dimensional discrete-time quantum walk with
// per-site coin selection.
//
// Conventions (fixed throughout the library):
//   - chirality 0 = down/L, 1 = up/R; a coin's column 0 is the image of |down>.
//   - the shift moves the up component from x to x+1 and the down component
//     from x to x-1.
//   - the coin acting on site x is selected by the pre-shift position x.
//   - site x = 0 is an A-site of a periodic schedule (n = 0 counts as a
//     multiple), and by default so are negative multiples of q.

#pragma once

#include <complex>
#include <map>
#include <vector>

#include "qwp/coin.hpp"

namespace qwp {

// Which sites of a periodic schedule receive coin A.
// all_multiples:          x = 0, +-q, +-2q, ...
// nonnegative_multiples:  x = 0, q, 2q, ... (sensitivity variant)
enum class a_site_rule { all_multiples, nonnegative_multiples };

// Site -> coin rule: one coin everywhere, or coin A at multiples of the
// period q and coin B elsewhere.
class coin_schedule {
public:
    static coin_schedule homogeneous(const coin_matrix& coin);
    static coin_schedule periodic(int q, const coin_matrix& coin_a, const coin_matrix& coin_b,
                                  a_site_rule rule = a_site_rule::all_multiples);

    const coin_matrix& coin_for_site(int x) const {
        if (!periodic_) return a_;
        if (rule_ == a_site_rule::nonnegative_multiples && x < 0) return b_;
        // x % q_ == 0 holds exactly for negative multiples too.
        return x % q_ == 0 ? a_ : b_;
    }

    bool is_periodic() const { return periodic_; }
    int period() const { return q_; }

private:
    coin_schedule() = default;

    coin_matrix a_ = coin_matrix::identity();
    coin_matrix b_ = coin_matrix::identity();
    int q_ = 1;
    bool periodic_ = false;
    a_site_rule rule_ = a_site_rule::all_multiples;
};

// Chirality amplitudes of the walker's internal state.
struct spinor {
    cplx down;
    cplx up;

    friend bool operator==(const spinor&, const spinor&) = default;
};

// (1/sqrt2) (|down> + i |up>), the symmetric default initial spinor.
spinor symmetric_initial_spinor();

// Walker state after t steps: a dense amplitude array over sites
// x in [-capacity, capacity] times chirality. Plain value; all evolution is
// deterministic, so independent walks may run concurrently.
class walk_state {
public:
    int t() const { return t_; }
    int capacity() const { return capacity_; }

    // Zero outside [-capacity, capacity].
    cplx amplitude(int x, chirality c) const {
        if (x < -capacity_ || x > capacity_) return {};
        return amp_[index(x) + static_cast<int>(c)];
    }

    // |amp(x, down)|^2 + |amp(x, up)|^2.
    double site_probability(int x) const {
        if (x < -capacity_ || x > capacity_) return 0.0;
        return std::norm(amp_[index(x)]) + std::norm(amp_[index(x) + 1]);
    }

    // Sum of |amp|^2 over all sites; 1 up to rounding.
    double total_probability() const;

private:
    walk_state(const spinor& initial, int capacity);

    std::size_t index(int x) const { return 2 * static_cast<std::size_t>(x + capacity_); }

    friend walk_state initial_state(const spinor&, int);
    friend void step(walk_state&, const coin_schedule&);

    int t_ = 0;
    int capacity_ = 0;
    std::vector<cplx> amp_;      // interleaved (down, up) per site, centered at x = 0
    std::vector<cplx> scratch_;  // swap buffer for step()
};

// State at t = 0 with the given spinor at the origin. The spinor must be
// normalized to 1 within 1e-12; capacity is the largest reachable |x|
// (allocate capacity >= total steps).
// Throws std::invalid_argument on a non-normalized spinor or negative capacity.
walk_state initial_state(const spinor& initial, int capacity);

// One walk step: coin each occupied site (coin chosen by pre-shift position),
// then shift up -> x+1 and down -> x-1.
// Throws std::out_of_range once the light cone would leave the allocated range.
void step(walk_state& state, const coin_schedule& schedule);

// `steps` successive applications of step(); steps = 0 leaves the state as is.
void evolve(walk_state& state, const coin_schedule& schedule, int steps);

// P(x) for every site with nonzero probability.
std::map<int, double> position_distribution(const walk_state& state);

}  // namespace qwp
