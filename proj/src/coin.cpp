#include "qwp/coin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwp {

double degrees_to_radians(double deg) { return deg * (std::numbers::pi / 180.0); }

coin_matrix coin_matrix::identity() { return {1.0, 0.0, 0.0, 1.0}; }

coin_matrix coin_matrix::hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, 0.0}, {s, 0.0}, {s, 0.0}, {-s, 0.0}};
}

double unitarity_error(const coin_matrix& m) {
    // M * M^dagger, entry by entry.
    const cplx g00 = m.m00 * std::conj(m.m00) + m.m01 * std::conj(m.m01);
    const cplx g01 = m.m00 * std::conj(m.m10) + m.m01 * std::conj(m.m11);
    const cplx g10 = m.m10 * std::conj(m.m00) + m.m11 * std::conj(m.m01);
    const cplx g11 = m.m10 * std::conj(m.m10) + m.m11 * std::conj(m.m11);
    double err = std::abs(g00 - 1.0);
    err = std::max(err, std::abs(g01));
    err = std::max(err, std::abs(g10));
    err = std::max(err, std::abs(g11 - 1.0));
    return err;
}

bool is_unitary(const coin_matrix& m, double tol) { return unitarity_error(m) <= tol; }

coin_matrix build_coin(const coin_angles& angles) {
    if (!std::isfinite(angles.alpha) || !std::isfinite(angles.beta) ||
        !std::isfinite(angles.gamma) || !std::isfinite(angles.theta)) {
        throw std::invalid_argument("build_coin: coin angles must be finite");
    }
    const double alpha = degrees_to_radians(angles.alpha);
    const double beta = degrees_to_radians(angles.beta);
    const double gamma = degrees_to_radians(angles.gamma);
    const double theta = degrees_to_radians(angles.theta);
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    return {
        std::polar(1.0, theta + alpha) * cb,
        -std::polar(1.0, theta - gamma) * sb,
        std::polar(1.0, theta + gamma) * sb,
        std::polar(1.0, theta - alpha) * cb,
    };
}

}  // namespace qwp
