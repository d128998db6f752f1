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
#include <sigmadet/identities.hpp>
#include <sigmadet/tolerances.hpp>
#include <sigmadet/weierstrass.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <vector>

namespace sigmadet
{

namespace
{

void require_same_size(std::span<const Complex> us, std::span<const Complex> vs)
{
    if (us.empty() || us.size() != vs.size()) {
        throw Error(ErrorKind::InvalidArgument, "us/vs", "argument lists must be non-empty and of equal length");
    }
    if (us.size() + 1 > static_cast<std::size_t>(tolerances.max_determinant_dim)) {
        throw Error(ErrorKind::InvalidArgument, "n", "bordered matrix would exceed the determinant size cap");
    }
}

enum class PoleGuard { on, off };

SquareMatrix bordered_matrix(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs,
                             PoleGuard guard)
{
    require_same_size(us, vs);
    const int count = static_cast<int>(us.size());
    std::vector<Complex> args;
    args.reserve(us.size() * vs.size());
    const double rho = rho_min(lat);
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            const Complex z = us[static_cast<std::size_t>(a)] + vs[static_cast<std::size_t>(b)];
            if (guard == PoleGuard::on && distance_to_lattice(lat, z) < rho) {
                throw Error(ErrorKind::TooCloseToPole, "(" + std::to_string(a) + "," + std::to_string(b) + ")",
                            "u_" + std::to_string(a) + " + v_" + std::to_string(b) +
                                " is within rho_min of a lattice point");
            }
            args.push_back(z);
        }
    }
    std::vector<Complex> values(args.size());
    if (guard == PoleGuard::on) {
        zeta_batch(lat, args, values);
    } else {
        for (std::size_t k = 0; k < args.size(); ++k) {
            values[k] = unchecked::zeta(lat, args[k]);
        }
    }

    SquareMatrix m(count + 1);
    m(0, 0) = 0.0;
    for (int k = 1; k <= count; ++k) {
        m(0, k) = 1.0;
        m(k, 0) = 1.0;
    }
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            m(a + 1, b + 1) = values[static_cast<std::size_t>(a * count + b)];
        }
    }
    return m;
}

} // namespace

double relative_residual(Complex lhs, Complex rhs)
{
    const double scale = std::max({std::abs(lhs), std::abs(rhs), tolerances.residual_floor});
    return std::abs(lhs - rhs) / scale;
}

std::string inputs_digest(const Lattice &lat, std::span<const Complex> a, std::span<const Complex> b)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const auto mix = [&h](double x) {
        auto bits = std::bit_cast<std::uint64_t>(x);
        for (int k = 0; k < 8; ++k) {
            h ^= (bits >> (8 * k)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    const auto mixc = [&mix](Complex z) {
        mix(z.real());
        mix(z.imag());
    };
    mixc(lat.omega1());
    mixc(lat.omega2());
    for (const auto z : a) {
        mixc(z);
    }
    for (const auto z : b) {
        mixc(z);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SquareMatrix fs_matrix(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs)
{
    return bordered_matrix(lat, us, vs, PoleGuard::on);
}

IdentityReport fs_residual(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs)
{
    const SquareMatrix m = fs_matrix(lat, us, vs);
    const Determinant d = det(m);
    const std::size_t count = us.size();

    // Gather every sigma argument and evaluate in one batch.
    std::vector<Complex> numer_args;
    std::vector<Complex> denom_args;
    Complex total{};
    for (std::size_t a = 0; a < count; ++a) {
        total += us[a] + vs[a];
        for (std::size_t b = 0; b < a; ++b) {
            numer_args.push_back(us[a] - us[b]);
            numer_args.push_back(vs[a] - vs[b]);
        }
        for (std::size_t b = 0; b < count; ++b) {
            denom_args.push_back(us[a] + vs[b]);
        }
    }
    numer_args.push_back(total);
    std::vector<Complex> numer(numer_args.size());
    std::vector<Complex> denom(denom_args.size());
    sigma_batch(lat, numer_args, numer);
    sigma_batch(lat, denom_args, denom);

    Complex rhs = 1.0;
    for (const auto z : numer) {
        rhs *= z;
    }
    for (const auto z : denom) {
        rhs /= z;
    }

    IdentityReport r;
    r.identity_name = "fs";
    r.n = static_cast<int>(count) - 1;
    r.lhs = -d.value;
    r.rhs = rhs;
    r.relative_residual = relative_residual(r.lhs, r.rhs);
    r.condition_estimate = d.condition_estimate;
    r.inputs_digest = inputs_digest(lat, us, vs);
    return r;
}

IdentityReport hermite_residual(const Lattice &lat, std::span<const Complex> us)
{
    if (us.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "n", "Hermite determinant needs n >= 1");
    }
    const int n = static_cast<int>(us.size()) - 1;
    if (n - 1 > tolerances.max_derivative_order) {
        throw Error(ErrorKind::OrderTooLarge, "n", "Hermite determinant needs pe derivatives beyond the cap");
    }
    const auto inv = eisenstein_invariants(lat);

    SquareMatrix m(n + 1);
    for (int a = 0; a <= n; ++a) {
        const Complex u = us[static_cast<std::size_t>(a)];
        const PeJet jet = pe_jet(lat, u);
        m(a, 0) = 1.0;
        for (int k = 0; k < n; ++k) {
            Complex value;
            if (k == 0) {
                value = jet.pe;
            } else if (k == 1) {
                value = jet.pe_prime;
            } else {
                value = derivative_polynomial(k).evaluate(jet.pe, jet.pe_prime, inv.g2, inv.g3);
            }
            m(a, k + 1) = value;
        }
    }
    const Determinant d = det(m);

    std::vector<Complex> args;
    Complex total{};
    for (int a = 0; a <= n; ++a) {
        total += us[static_cast<std::size_t>(a)];
        for (int b = 0; b < a; ++b) {
            args.push_back(us[static_cast<std::size_t>(a)] - us[static_cast<std::size_t>(b)]);
        }
    }
    args.push_back(total);
    std::vector<Complex> numer(args.size());
    sigma_batch(lat, args, numer);
    std::vector<Complex> denom(us.size());
    sigma_batch(lat, us, denom);

    Complex rhs = (n % 2 == 0 ? 1.0 : -1.0) * difference_product_value(n);
    for (const auto z : numer) {
        rhs *= z;
    }
    Complex prod_sigma = 1.0;
    for (const auto z : denom) {
        prod_sigma *= z;
    }
    rhs /= std::pow(prod_sigma, n + 1);

    IdentityReport r;
    r.identity_name = "hermite";
    r.n = n;
    r.lhs = d.value;
    r.rhs = rhs;
    r.relative_residual = relative_residual(r.lhs, r.rhs);
    r.condition_estimate = d.condition_estimate;
    r.inputs_digest = inputs_digest(lat, us);
    return r;
}

double r_vanishing_check(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs)
{
    const SquareMatrix m = fs_matrix(lat, us, vs);
    const Determinant d = det(m);
    const double scale = std::pow(m.max_abs_entry(), m.dim());
    return std::abs(d.value) / scale;
}

Complex abel_vanishing_point(const Lattice &lat, std::span<const Complex> us_tail, std::span<const Complex> vs)
{
    Complex total{};
    for (const auto z : us_tail) {
        total += z;
    }
    for (const auto z : vs) {
        total += z;
    }
    return reduce_point(lat, -total).reduced;
}

double fs_degeneration_residual(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs,
                                Complex epsilon)
{
    require_same_size(us, vs);
    if (us.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "n", "degeneration needs n >= 1");
    }
    const std::size_t n = us.size() - 1;
    std::vector<Complex> u(us.begin(), us.end());
    u[n] = -vs[n] + epsilon;

    const Complex full = -det(bordered_matrix(lat, u, vs, PoleGuard::off)).value;
    const Complex reduced = -det(fs_matrix(lat, us.first(n), vs.first(n))).value;
    return relative_residual((u[n] + vs[n]) * full, reduced);
}

} // namespace sigmadet
