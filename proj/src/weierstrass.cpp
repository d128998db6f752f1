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
#include <sigmadet/kernels/kernels.hpp>
#include <sigmadet/weierstrass.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

namespace sigmadet
{

namespace
{

// Lattice constants needed by the theta-quotient formulas
//   sigma(u) = (omega1/pi) exp(eta1 u^2 / (2 omega1)) S(z) / S'(0)
//   zeta(u)  = eta1 u / omega1 + (pi/omega1) S'(z)/S(z)
// with z = pi u / omega1 and S the odd theta series without q^(1/4).
struct ThetaContext {
    Complex omega1;
    Complex omega2;
    Complex k; // pi / omega1
    Complex q;
    Complex eta1;
    Complex eta2;
    Complex s_prime_zero;
};

ThetaContext make_context(const Lattice &lat)
{
    const auto inv = eisenstein_invariants(lat);
    ThetaContext ctx{lat.omega1(), lat.omega2(), pi / lat.omega1(), lat.nome(), inv.eta1, inv.eta2, {}};
    const int terms = detail::theta_term_count(ctx.q, 0.0);
    const auto w = detail::theta_weights(ctx.q, terms);
    for (int n = 0; n < terms; ++n) {
        ctx.s_prime_zero += (2.0 * n + 1.0) * w[static_cast<std::size_t>(n)];
    }
    return ctx;
}

struct Values {
    Complex sigma;
    Complex zeta;
    Complex pe;
    Complex pe_prime;
};

// All four functions at each point, straight from the theta quotient (no
// reduction, no quasi-period correction).
std::vector<Values> theta_values(const ThetaContext &ctx, std::span<const Complex> us)
{
    const std::size_t count = us.size();
    std::vector<Complex> sin_z(count), cos_z(count);
    double max_y = 0.0;
    for (std::size_t p = 0; p < count; ++p) {
        const Complex z = ctx.k * us[p];
        sin_z[p] = std::sin(z);
        cos_z[p] = std::cos(z);
        max_y = std::max(max_y, std::abs(z.imag()));
    }
    const auto weights = detail::theta_weights(ctx.q, detail::theta_term_count(ctx.q, max_y));
    std::vector<kernels::ThetaJet> jets(count);
    kernels::theta_jets({weights}, sin_z, cos_z, jets);

    std::vector<Values> out(count);
    const Complex k2 = ctx.k * ctx.k;
    const Complex k3 = k2 * ctx.k;
    for (std::size_t p = 0; p < count; ++p) {
        const auto &j = jets[p];
        const Complex u = us[p];
        out[p].sigma = std::exp(ctx.eta1 * u * u / (2.0 * ctx.omega1)) * j.d0 / (ctx.k * ctx.s_prime_zero);
        if (j.d0 == 0.0) {
            // lattice point: sigma vanishes, the rest have poles
            const double inf = std::numeric_limits<double>::infinity();
            out[p].zeta = out[p].pe = out[p].pe_prime = Complex(inf, inf);
            continue;
        }
        const Complex l1 = j.d1 / j.d0;
        const Complex l2 = j.d2 / j.d0;
        const Complex l3 = j.d3 / j.d0;
        const Complex l1sq = l1 * l1;
        out[p].zeta = ctx.eta1 * u / ctx.omega1 + ctx.k * l1;
        out[p].pe = -ctx.eta1 / ctx.omega1 - k2 * (l2 - l1sq);
        out[p].pe_prime = -k3 * (l3 - 3.0 * l1 * l2 + 2.0 * l1sq * l1);
    }
    return out;
}

std::string format(Complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

void guard_pole(const Lattice &lat, const CellPoint &cp, Complex u)
{
    if (cp.distance_to_lattice < rho_min(lat)) {
        std::ostringstream msg;
        msg << "u = " << format(u) << " lies within " << cp.distance_to_lattice
            << " of a lattice point (rho_min = " << rho_min(lat) << ")";
        throw Error(ErrorKind::TooCloseToPole, format(u), msg.str());
    }
}

enum class Guard { on, off };

// Reduced evaluation of all four functions with quasi-period corrections.
std::vector<Values> evaluate(const Lattice &lat, std::span<const Complex> us, Guard guard, bool need_sigma)
{
    const ThetaContext ctx = make_context(lat);
    std::vector<CellPoint> cells;
    cells.reserve(us.size());
    std::vector<Complex> reduced;
    reduced.reserve(us.size());
    for (const Complex u : us) {
        cells.push_back(reduce_point(lat, u));
        if (guard == Guard::on) {
            guard_pole(lat, cells.back(), u);
        }
        reduced.push_back(cells.back().reduced);
    }
    auto values = theta_values(ctx, reduced);
    for (std::size_t p = 0; p < us.size(); ++p) {
        const auto &cp = cells[p];
        if (cp.m == 0 && cp.n == 0) {
            continue;
        }
        const double m = static_cast<double>(cp.m);
        const double n = static_cast<double>(cp.n);
        const Complex eta_w = m * ctx.eta1 + n * ctx.eta2;
        values[p].zeta += eta_w;
        if (need_sigma) {
            // sigma(r + w) = (-1)^(m + n + mn) exp(eta_w (r + w/2)) sigma(r)
            const Complex w = m * ctx.omega1 + n * ctx.omega2;
            const bool odd = ((cp.m + cp.n + cp.m * cp.n) % 2) != 0;
            values[p].sigma *= std::exp(eta_w * (cp.reduced + 0.5 * w)) * (odd ? -1.0 : 1.0);
        }
    }
    return values;
}

Values evaluate_one(const Lattice &lat, Complex u, Guard guard, bool need_sigma)
{
    const Complex one[1] = {u};
    return evaluate(lat, one, guard, need_sigma)[0];
}

} // namespace

Complex sigma(const Lattice &lat, Complex u)
{
    return evaluate_one(lat, u, Guard::off, true).sigma;
}

Complex zeta(const Lattice &lat, Complex u)
{
    return evaluate_one(lat, u, Guard::on, false).zeta;
}

Complex pe(const Lattice &lat, Complex u)
{
    return evaluate_one(lat, u, Guard::on, false).pe;
}

Complex pe_prime(const Lattice &lat, Complex u)
{
    return evaluate_one(lat, u, Guard::on, false).pe_prime;
}

PeJet pe_jet(const Lattice &lat, Complex u)
{
    const auto v = evaluate_one(lat, u, Guard::on, false);
    return {v.pe, v.pe_prime};
}

Complex pe_derivative(const Lattice &lat, Complex u, int k)
{
    const auto &poly = derivative_polynomial(k);
    const auto v = evaluate_one(lat, u, Guard::on, false);
    if (k == 0) {
        return v.pe;
    }
    if (k == 1) {
        return v.pe_prime;
    }
    const auto inv = eisenstein_invariants(lat);
    return poly.evaluate(v.pe, v.pe_prime, inv.g2, inv.g3);
}

void sigma_batch(const Lattice &lat, std::span<const Complex> us, std::span<Complex> out)
{
    const auto values = evaluate(lat, us, Guard::off, true);
    for (std::size_t p = 0; p < values.size(); ++p) {
        out[p] = values[p].sigma;
    }
}

void zeta_batch(const Lattice &lat, std::span<const Complex> us, std::span<Complex> out)
{
    const auto values = evaluate(lat, us, Guard::on, false);
    for (std::size_t p = 0; p < values.size(); ++p) {
        out[p] = values[p].zeta;
    }
}

namespace unchecked
{

Complex zeta(const Lattice &lat, Complex u)
{
    return evaluate_one(lat, u, Guard::off, false).zeta;
}

Complex pe(const Lattice &lat, Complex u)
{
    return evaluate_one(lat, u, Guard::off, false).pe;
}

Complex pe_prime(const Lattice &lat, Complex u)
{
    return evaluate_one(lat, u, Guard::off, false).pe_prime;
}

} // namespace unchecked

namespace detail
{

Complex sigma_unreduced(const Lattice &lat, Complex u)
{
    const Complex one[1] = {u};
    return theta_values(make_context(lat), one)[0].sigma;
}

Complex zeta_unreduced(const Lattice &lat, Complex u)
{
    const Complex one[1] = {u};
    return theta_values(make_context(lat), one)[0].zeta;
}

Complex pe_unreduced(const Lattice &lat, Complex u)
{
    const Complex one[1] = {u};
    return theta_values(make_context(lat), one)[0].pe;
}

} // namespace detail

} // namespace sigmadet
