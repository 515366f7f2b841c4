#include "qwp/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace qwp {

namespace {
constexpr int max_oracle_steps = 12;
}

std::map<int, double> oracle_evolve(const spinor& initial, const coin_schedule& schedule,
                                    int steps) {
    if (steps < 0) {
        throw std::invalid_argument("oracle_evolve: steps must be non-negative");
    }
    if (steps > max_oracle_steps) {
        throw std::invalid_argument("oracle_evolve: refusing " + std::to_string(steps) +
                                    " steps; path enumeration is capped at " +
                                    std::to_string(max_oracle_steps));
    }
    const double norm = std::norm(initial.down) + std::norm(initial.up);
    if (!(std::abs(norm - 1.0) <= 1e-12)) {
        throw std::invalid_argument("oracle_evolve: spinor is not normalized");
    }

    // amplitude per (endpoint, final chirality)
    std::map<std::pair<int, int>, cplx> endpoint;
    const cplx start_amp[2] = {initial.down, initial.up};
    const std::uint32_t path_count = 1u << steps;
    for (int start_c = 0; start_c < 2; ++start_c) {
        for (std::uint32_t path = 0; path < path_count; ++path) {
            // Bit k of `path` is the chirality the coin sends the walker to
            // at step k: 0 = down (move to x-1), 1 = up (move to x+1).
            int x = 0;
            int c = start_c;
            cplx amp = start_amp[start_c];
            for (int k = 0; k < steps; ++k) {
                const int next_c = (path >> k) & 1u;
                const coin_matrix& u = schedule.coin_for_site(x);
                amp *= u(next_c, c);
                x += next_c == 1 ? 1 : -1;
                c = next_c;
            }
            endpoint[{x, c}] += amp;
        }
    }

    std::map<int, double> dist;
    for (const auto& [key, amp] : endpoint) dist[key.first] += std::norm(amp);
    for (auto it = dist.begin(); it != dist.end();) {
        it = it->second > 0.0 ? std::next(it) : dist.erase(it);
    }
    return dist;
}

}  // namespace qwp
