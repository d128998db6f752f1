/*
 * Copyright (c) 2026 The sigmadet Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sigmadet/error.hpp>
#include <sigmadet/lattice.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace sigmadet
{

namespace
{

std::string format(Complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

// Basis coefficients (a, b) of u = a*omega1 + b*omega2.
std::pair<double, double> coefficients(const Lattice &lat, Complex u)
{
    const Complex x = u / lat.omega1();
    const double b = x.imag() / lat.tau().imag();
    const double a = x.real() - b * lat.tau().real();
    return {a, b};
}

// Lambert-series part of E4 / E6: sum k^p Q^k / (1 - Q^k).
Complex lambert_sum(Complex Q, int power)
{
    Complex sum{};
    Complex Qk = Q;
    for (int k = 1; k < 200; ++k) {
        const Complex term = std::pow(static_cast<double>(k), power) * Qk / (1.0 - Qk);
        sum += term;
        if (std::abs(term) <= 1e-20 * std::max(1.0, std::abs(sum))) {
            break;
        }
        Qk = cmul(Qk, Q);
    }
    return sum;
}

} // namespace

Lattice::Lattice(Complex omega1, Complex omega2)
    : m_omega1(omega1), m_omega2(omega2), m_tau(omega2 / omega1),
      m_nome(std::exp(pi * i_unit * m_tau))
{
}

Lattice make_lattice(Complex omega1, Complex omega2)
{
    if (!is_finite(omega1) || !is_finite(omega2)) {
        throw Error(ErrorKind::InvalidArgument, "omega", "lattice generators must be finite");
    }
    if (omega1 == 0.0 || omega2 == 0.0) {
        throw Error(ErrorKind::InvalidArgument, "omega", "lattice generators must be nonzero");
    }
    // Im(omega2 * conj(omega1)) = |omega1||omega2| sin(angle between them)
    const double cross = (omega2 * std::conj(omega1)).imag();
    if (std::abs(cross) <= tolerances.degenerate_ratio * std::abs(omega1) * std::abs(omega2)) {
        throw Error(ErrorKind::DegenerateLattice, format(omega2 / omega1),
                    "omega2/omega1 = " + format(omega2 / omega1) + " is real");
    }
    if (cross < 0) {
        std::swap(omega1, omega2);
    }

    // Gauss reduction: translate tau into the strip, invert while inside the
    // unit circle. The slack on |tau| keeps boundary cases such as the
    // hexagonal lattice from cycling.
    for (int iter = 0; iter < 1000; ++iter) {
        const Complex tau = omega2 / omega1;
        const double shift = std::floor(tau.real() + 0.5);
        if (shift != 0.0) {
            omega2 -= shift * omega1;
        }
        if (std::abs(omega2 / omega1) < 1.0 - 1e-12) {
            const Complex old1 = omega1;
            omega1 = omega2;
            omega2 = -old1;
            continue;
        }
        break;
    }
    return Lattice(omega1, omega2);
}

Lattice scale_lattice(const Lattice &lat, Complex lambda)
{
    return make_lattice(lambda * lat.omega1(), lambda * lat.omega2());
}

namespace detail
{

std::vector<Complex> theta_weights(Complex q, int count)
{
    std::vector<Complex> w(static_cast<std::size_t>(count));
    if (count == 0) {
        return w;
    }
    const Complex q2 = cmul(q, q);
    Complex q2n = 1.0; // q^(2n)
    w[0] = 1.0;
    for (int n = 1; n < count; ++n) {
        q2n = cmul(q2n, q2);
        w[static_cast<std::size_t>(n)] = -cmul(w[static_cast<std::size_t>(n - 1)], q2n);
    }
    return w;
}

int theta_term_count(Complex q, double max_abs_im_z)
{
    // Term n of the third derivative, relative to the leading term, is
    // bounded by |q|^(n(n+1)) (2n+1)^4 exp(2n |Im z|).
    const double log_q = std::log(std::abs(q));
    const double target =
        std::log(tolerances.theta_term_ulps * std::numeric_limits<double>::epsilon());
    for (int n = 1; n < tolerances.theta_max_terms; ++n) {
        const double k = 2.0 * n + 1.0;
        const double log_bound = n * (n + 1.0) * log_q + 4.0 * std::log(k) + 2.0 * n * max_abs_im_z;
        if (log_bound < target) {
            return n;
        }
    }
    throw Error(ErrorKind::SlowConvergence, "u",
                "theta series needs more than " + std::to_string(tolerances.theta_max_terms) + " terms");
}

} // namespace detail

EllipticInvariants eisenstein_invariants(const Lattice &lat)
{
    const Complex w1 = lat.omega1();
    const Complex w2 = lat.omega2();
    const Complex q = lat.nome();
    const Complex Q = cmul(q, q);

    const Complex e4 = 1.0 + 240.0 * lambert_sum(Q, 3);
    const Complex e6 = 1.0 - 504.0 * lambert_sum(Q, 5);
    const Complex k = pi / w1;
    const Complex k2 = k * k;
    const Complex k4 = k2 * k2;

    EllipticInvariants inv;
    inv.g2 = (4.0 / 3.0) * k4 * e4;
    inv.g3 = (8.0 / 27.0) * k4 * k2 * e6;
    inv.discriminant = inv.g2 * inv.g2 * inv.g2 - 27.0 * inv.g3 * inv.g3;

    // eta1 = -(pi^2 / (3 omega1)) theta1'''(0) / theta1'(0).
    const int terms = detail::theta_term_count(q, 0.0);
    const auto weights = detail::theta_weights(q, terms);
    Complex d1{}, d3{};
    for (int n = 0; n < terms; ++n) {
        const double kk = 2.0 * n + 1.0;
        d1 += kk * weights[static_cast<std::size_t>(n)];
        d3 -= kk * kk * kk * weights[static_cast<std::size_t>(n)];
    }
    inv.eta1 = -(pi * pi / (3.0 * w1)) * d3 / d1;
    inv.eta2 = (inv.eta1 * w2 - 2.0 * pi * i_unit) / w1;
    return inv;
}

CellPoint reduce_point(const Lattice &lat, Complex u)
{
    if (!is_finite(u)) {
        throw Error(ErrorKind::InvalidArgument, "u", "argument must be finite");
    }
    const auto [a, b] = coefficients(lat, u);
    CellPoint cp;
    cp.m = static_cast<std::int64_t>(std::floor(a + 0.5));
    cp.n = static_cast<std::int64_t>(std::floor(b + 0.5));
    cp.reduced = u - lat.point(cp.m, cp.n);

    double best = std::numeric_limits<double>::infinity();
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            best = std::min(best, std::abs(cp.reduced - lat.point(i, j)));
        }
    }
    cp.distance_to_lattice = best;
    return cp;
}

double shortest_vector(const Lattice &lat)
{
    double best = std::numeric_limits<double>::infinity();
    for (int m = -2; m <= 2; ++m) {
        for (int n = -2; n <= 2; ++n) {
            if (m != 0 || n != 0) {
                best = std::min(best, std::abs(lat.point(m, n)));
            }
        }
    }
    return best;
}

double rho_min(const Lattice &lat)
{
    return tolerances.rho_min_fraction * shortest_vector(lat);
}

kernels::PowerSums lattice_power_sums(const Lattice &lat, long radius)
{
    kernels::PowerSums acc;
    for (long n = -radius; n <= radius; ++n) {
        if (n == 0) {
            kernels::power_sums_row(lat.omega1(), lat.omega2(), 0, -radius, 0, acc);
            kernels::power_sums_row(lat.omega1(), lat.omega2(), 0, 1, radius + 1, acc);
        } else {
            kernels::power_sums_row(lat.omega1(), lat.omega2(), n, -radius, radius + 1, acc);
        }
    }
    return acc;
}

ShellSum eisenstein_shell_sum(const Lattice &lat, double relative, long max_radius)
{
    const Complex w1 = lat.omega1();
    const Complex w2 = lat.omega2();
    kernels::PowerSums total;
    for (long r = 1; r <= max_radius; ++r) {
        kernels::PowerSums shell;
        // rows n = +-r, then columns m = +-r without their corners
        kernels::power_sums_row(w1, w2, r, -r, r + 1, shell);
        kernels::power_sums_row(w1, w2, -r, -r, r + 1, shell);
        kernels::power_sums_row(w2, w1, r, -r + 1, r, shell);
        kernels::power_sums_row(w2, w1, -r, -r + 1, r, shell);
        total.inv4 += shell.inv4;
        total.inv6 += shell.inv6;

        const double scale = std::abs(60.0 * total.inv4) + std::abs(140.0 * total.inv6);
        const double added = std::abs(60.0 * shell.inv4) + std::abs(140.0 * shell.inv6);
        if (added < relative * scale) {
            return {60.0 * total.inv4, 140.0 * total.inv6, r};
        }
    }
    std::ostringstream msg;
    msg << "Eisenstein shell sum did not reach relative " << relative << " within radius " << max_radius;
    throw Error(ErrorKind::SlowConvergence, "radius", msg.str());
}

} // namespace sigmadet
