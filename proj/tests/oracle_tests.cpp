#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qwp/oracle.hpp"

using namespace qwp;

namespace {

// Max per-site difference between two distributions (missing key = 0).
double distribution_gap(const std::map<int, double>& a, const std::map<int, double>& b) {
    double gap = 0.0;
    auto side = [&](const std::map<int, double>& lhs, const std::map<int, double>& rhs) {
        for (const auto& [x, p] : lhs) {
            const auto it = rhs.find(x);
            gap = std::max(gap, std::abs(p - (it == rhs.end() ? 0.0 : it->second)));
        }
    };
    side(a, b);
    side(b, a);
    return gap;
}

}  // namespace

TEST_CASE("oracle at zero steps returns the origin") {
    const coin_schedule sched = coin_schedule::homogeneous(build_coin({0, 45, 0}));
    const auto dist = oracle_evolve(symmetric_initial_spinor(), sched, 0);
    REQUIRE(dist.size() == 1);
    CHECK(dist.at(0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("oracle reproduces the one-step balanced split") {
    const coin_schedule sched = coin_schedule::homogeneous(build_coin({0, 45, 0}));
    const auto dist = oracle_evolve(symmetric_initial_spinor(), sched, 1);
    REQUIRE(dist.size() == 2);
    CHECK(dist.at(-1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist.at(1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("oracle refuses out-of-range inputs") {
    const coin_schedule sched = coin_schedule::homogeneous(build_coin({0, 45, 0}));
    CHECK_THROWS_AS(oracle_evolve(symmetric_initial_spinor(), sched, 13), std::invalid_argument);
    CHECK_THROWS_AS(oracle_evolve(symmetric_initial_spinor(), sched, -1), std::invalid_argument);
    CHECK_THROWS_AS(oracle_evolve({{1, 0}, {1, 0}}, sched, 1), std::invalid_argument);
}

TEST_CASE("evolve matches the path-enumeration oracle on random configurations") {
    std::mt19937 rng(555321);
    std::uniform_real_distribution<double> angle(-180.0, 180.0);
    std::uniform_int_distribution<int> qdist(2, 4);
    std::uniform_int_distribution<int> steps_dist(1, 10);
    std::uniform_int_distribution<int> kind(0, 1);

    for (int rep = 0; rep < 25; ++rep) {
        const coin_matrix a = build_coin({angle(rng), angle(rng), angle(rng)});
        const coin_matrix b = build_coin({angle(rng), angle(rng), angle(rng)});
        const coin_schedule sched = kind(rng) == 0
                                        ? coin_schedule::homogeneous(a)
                                        : coin_schedule::periodic(qdist(rng), a, b);
        const int steps = steps_dist(rng);

        walk_state s = initial_state(symmetric_initial_spinor(), steps);
        evolve(s, sched, steps);
        const auto expected = oracle_evolve(symmetric_initial_spinor(), sched, steps);
        CHECK(distribution_gap(position_distribution(s), expected) < 1e-12);
    }
}

TEST_CASE("evolve matches the oracle for periodic schedules at exactly 10 steps") {
    const coin_schedule sched =
        coin_schedule::periodic(3, build_coin({-51, 45, 0}), build_coin({0, 88, -16}));
    walk_state s = initial_state(symmetric_initial_spinor(), 10);
    evolve(s, sched, 10);
    const auto expected = oracle_evolve(symmetric_initial_spinor(), sched, 10);
    CHECK(distribution_gap(position_distribution(s), expected) < 1e-12);
}

TEST_CASE("oracle agreement holds for a non-default spinor") {
    const coin_schedule sched =
        coin_schedule::periodic(2, build_coin({12, 70, -30}), build_coin({0, 20, 5}));
    const spinor init{{0.6, 0.0}, {0.0, 0.8}};
    walk_state s = initial_state(init, 8);
    evolve(s, sched, 8);
    CHECK(distribution_gap(position_distribution(s), oracle_evolve(init, sched, 8)) < 1e-12);
}
