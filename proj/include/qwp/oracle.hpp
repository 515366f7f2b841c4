// oracle.hpp
// Brute-force reference for the walk evolution, used for conformance testing.

#pragma once

#include <map>

#include "qwp/walk.hpp"

namespace qwp {

// Position distribution after `steps` walk steps, computed by enumerating all
// 2^steps chirality paths and accumulating complex amplitudes per endpoint.
// Deliberately shares no evolution code with step()/evolve().
// Refuses steps > 12 (path count grows as 2^steps); throws
// std::invalid_argument on that, on negative steps, or on a non-normalized
// spinor.
std::map<int, double> oracle_evolve(const spinor& initial, const coin_schedule& schedule,
                                    int steps);

}  // namespace qwp
