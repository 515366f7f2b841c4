// coin.hpp
// Coin operators for discrete-time quantum walks on the line: the U(2)/SU(2)
// angle parameterization and a few named 2x2 unitaries.

#pragma once

#include <array>
#include <complex>

namespace qwp {

using cplx = std::complex<double>;

// Chirality basis index. Order is fixed: 0 = down/L (moves left),
// 1 = up/R (moves right).
enum class chirality { down = 0, up = 1 };

// Coin parameter tuple (alpha, beta, gamma, theta), all in degrees.
// theta is a global phase; theta = 0 gives the SU(2) case.
struct coin_angles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double theta = 0.0;

    friend bool operator==(const coin_angles&, const coin_angles&) = default;
};

// 2x2 complex matrix acting on the chirality space. Row/column order is
// (down, up); column 0 is the image of |down>.
struct coin_matrix {
    cplx m00, m01, m10, m11;

    cplx operator()(int row, int col) const {
        return std::array<cplx, 4>{m00, m01, m10, m11}[2 * row + col];
    }

    static coin_matrix identity();
    // (1/sqrt2) [[1, 1], [1, -1]], the balanced coin of the plain walk.
    static coin_matrix hadamard();
};

// Max per-entry deviation of M * M^dagger from the identity.
double unitarity_error(const coin_matrix& m);

bool is_unitary(const coin_matrix& m, double tol = 1e-12);

// Builds e^{i theta} [[e^{i alpha} cos beta, -e^{-i gamma} sin beta],
//                     [e^{i gamma} sin beta,  e^{-i alpha} cos beta]]
// with angles converted from degrees to radians.
// Throws std::invalid_argument if any angle is non-finite.
coin_matrix build_coin(const coin_angles& angles);

double degrees_to_radians(double deg);

}  // namespace qwp
