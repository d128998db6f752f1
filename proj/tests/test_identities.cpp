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

#include "support.hpp"

#include <sigmadet/confluence.hpp>
#include <sigmadet/error.hpp>
#include <sigmadet/identities.hpp>
#include <sigmadet/sampling.hpp>
#include <sigmadet/weierstrass.hpp>

#include <doctest.h>

#include <vector>

using namespace sigmadet;
using sigmadet::test::rel;

namespace
{

bool throws_kind(ErrorKind kind, auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.kind() == kind;
    }
    return false;
}

std::vector<Lattice> lattices()
{
    return {test::square(), test::hexagonal(), test::generic()};
}

} // namespace

TEST_CASE("bordered identity, n = 0 and the hand-written n = 1 case")
{
    const Lattice lat = test::generic();
    SafeSampler s(lat, 21);
    const auto zero = fs_residual(lat, std::vector<Complex>{{0.3, 0.1}}, std::vector<Complex>{{-0.2, 0.4}});
    CHECK(zero.lhs == Complex(1.0));
    CHECK(zero.rhs == Complex(1.0));

    for (int t = 0; t < 10; ++t) {
        const auto p = s.fs_points(1);
        REQUIRE(p.has_value());
        const auto &u = p->us;
        const auto &v = p->vs;
        const auto r = fs_residual(lat, u, v);
        const Complex lhs = zeta(lat, u[0] + v[0]) + zeta(lat, u[1] + v[1]) - zeta(lat, u[0] + v[1]) -
                            zeta(lat, u[1] + v[0]);
        const Complex rhs = sigma(lat, u[0] + u[1] + v[0] + v[1]) * sigma(lat, u[0] - u[1]) *
                            sigma(lat, v[0] - v[1]) /
                            (sigma(lat, u[0] + v[0]) * sigma(lat, u[0] + v[1]) * sigma(lat, u[1] + v[0]) *
                             sigma(lat, u[1] + v[1]));
        CHECK(rel(r.lhs, lhs) < 1e-12);
        CHECK(rel(r.rhs, rhs) < 1e-12);
        CHECK(r.relative_residual < 1e-12);
    }
}

TEST_CASE("bordered identity on random samples")
{
    for (const Lattice &lat : lattices()) {
        SafeSampler s(lat, 23);
        for (int n = 1; n <= 4; ++n) {
            for (int t = 0; t < 15; ++t) {
                const auto p = s.fs_points(n);
                REQUIRE(p.has_value());
                const auto r = fs_residual(lat, p->us, p->vs);
                CHECK(r.relative_residual < 1e-10);
                CHECK(r.n == n);
                CHECK(r.condition_estimate >= 1.0);
            }
        }
    }
}

TEST_CASE("bordered matrix layout and pole guard")
{
    const Lattice lat = test::square();
    const std::vector<Complex> us{{0.3, 0.2}, {-0.4, 0.5}};
    const std::vector<Complex> vs{{0.1, -0.7}, {0.6, 0.1}};
    const SquareMatrix m = fs_matrix(lat, us, vs);
    CHECK(m.dim() == 3);
    CHECK(m(0, 0) == Complex(0.0));
    CHECK(m(0, 2) == Complex(1.0));
    CHECK(m(2, 0) == Complex(1.0));
    CHECK(m(2, 1) == zeta(lat, us[1] + vs[0]));

    const std::vector<Complex> bad{{0.3, 0.2}, {-0.1, 0.7}};
    CHECK(throws_kind(ErrorKind::TooCloseToPole, [&] { fs_matrix(lat, bad, vs); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { fs_matrix(lat, us, std::vector<Complex>{{0.1, 0.1}}); }));
}

TEST_CASE("duplicate arguments give zero on both sides")
{
    const Lattice lat = test::generic();
    const std::vector<Complex> us{{0.21, 0.13}, {0.21, 0.13}, {-0.3, 0.35}};
    const std::vector<Complex> vs{{0.05, -0.31}, {0.4, 0.2}, {-0.15, -0.1}};
    const auto r = fs_residual(lat, us, vs);
    CHECK(r.lhs == Complex(0.0));
    CHECK(std::abs(r.rhs) == 0.0);
    CHECK(r.relative_residual == 0.0);
    CHECK(r_vanishing_check(lat, us, vs) == 0.0);
}

TEST_CASE("the bordered determinant is doubly periodic in each argument")
{
    for (const Lattice &lat : lattices()) {
        SafeSampler s(lat, 25);
        const auto p = s.fs_points(3);
        REQUIRE(p.has_value());
        const Complex base = fs_residual(lat, p->us, p->vs).lhs;
        for (std::size_t a = 0; a < p->us.size(); ++a) {
            for (const Complex w : {lat.omega1(), lat.omega2(), lat.point(-2, 1)}) {
                auto us = p->us;
                us[a] += w;
                CHECK(rel(fs_residual(lat, us, p->vs).lhs, base) < 1e-8);
                auto vs = p->vs;
                vs[a] -= w;
                CHECK(rel(fs_residual(lat, p->us, vs).lhs, base) < 1e-8);
            }
        }
    }
}

TEST_CASE("vanishing at the Abel point")
{
    for (const Lattice &lat : lattices()) {
        SafeSampler s(lat, 27);
        int checked = 0;
        for (int t = 0; t < 40 && checked < 10; ++t) {
            for (int n = 1; n <= 3; ++n) {
                const auto p = s.fs_points(n);
                REQUIRE(p.has_value());
                std::vector<Complex> tail(p->us.begin() + 1, p->us.end());
                const Complex u0 = abel_vanishing_point(lat, tail, p->vs);
                std::vector<Complex> us{u0};
                us.insert(us.end(), tail.begin(), tail.end());
                // the Abel point itself must be usable
                bool usable = true;
                for (const Complex v : p->vs) {
                    usable = usable && s.is_safe(u0 + v);
                }
                if (!usable) {
                    continue;
                }
                CHECK(r_vanishing_check(lat, us, p->vs) < 1e-9);
                ++checked;
            }
        }
        CHECK(checked >= 10);
    }
}

TEST_CASE("degeneration to the smaller instance")
{
    for (const Lattice &lat : lattices()) {
        SafeSampler s(lat, 29);
        for (int n = 1; n <= 3; ++n) {
            for (int t = 0; t < 10; ++t) {
                const auto p = s.fs_points(n);
                REQUIRE(p.has_value());
                CHECK(fs_degeneration_residual(lat, p->us, p->vs, Complex(1e-6, 0.0)) < 1e-4);
            }
        }
    }
}

TEST_CASE("Hermite determinant")
{
    const Lattice lat = test::generic();
    SafeSampler s(lat, 31);
    // n = 1 is the addition formula for pe
    for (int t = 0; t < 5; ++t) {
        const auto u = s.hermite_points(1);
        REQUIRE(u.has_value());
        const auto r = hermite_residual(lat, *u);
        CHECK(rel(r.lhs, pe(lat, (*u)[1]) - pe(lat, (*u)[0])) < 1e-13);
        const Complex classical = -sigma(lat, (*u)[0] + (*u)[1]) * sigma(lat, (*u)[1] - (*u)[0]) /
                                  std::pow(sigma(lat, (*u)[0]) * sigma(lat, (*u)[1]), 2);
        CHECK(rel(r.rhs, classical) < 1e-12);
    }
    for (const Lattice &l : lattices()) {
        SafeSampler sl(l, 33);
        for (int n = 1; n <= 4; ++n) {
            for (int t = 0; t < 15; ++t) {
                const auto u = sl.hermite_points(n);
                REQUIRE(u.has_value());
                CHECK(hermite_residual(l, *u).relative_residual < (n <= 3 ? 1e-8 : 1e-6));
            }
        }
    }
    CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { hermite_residual(lat, std::vector<Complex>{{0.2, 0.2}}); }));
}

TEST_CASE("inputs digest")
{
    const Lattice lat = test::generic();
    const std::vector<Complex> a{{0.1, 0.2}};
    const std::vector<Complex> b{{0.1, 0.2000000000000001}};
    CHECK(inputs_digest(lat, a) == inputs_digest(lat, a));
    CHECK(inputs_digest(lat, a) != inputs_digest(lat, b));
    CHECK(inputs_digest(lat, a).rfind("fnv1a:", 0) == 0);
}

TEST_CASE("extrapolation to zero")
{
    // exact for polynomial data
    const std::vector<double> h{0.4, 0.2, 0.1, 0.05};
    std::vector<Complex> v;
    for (const double x : h) {
        v.emplace_back(3.0 + 2.0 * x - x * x * x, x);
    }
    CHECK(std::abs(extrapolate_to_zero(h, v) - Complex(3.0)) < 1e-13);
    CHECK(throws_kind(ErrorKind::InvalidArgument, [] { extrapolate_to_zero({}, {}); }));
}

TEST_CASE("confluent limit")
{
    const PolynomialFamily poly;
    for (int n = 0; n <= 3; ++n) {
        const auto r = confluent_limit(poly, Complex(0.3, -0.4), n, 0.25);
        // det of f_a^(b) = x^a derivatives is triangular with diagonal b!
        CHECK(rel(r.direct, 1.0) < 1e-15);
        CHECK(r.agreement < (n <= 2 ? 1e-10 : 1e-9));
    }

    for (const Lattice &lat : lattices()) {
        const PeFamily fam(lat);
        const double h0 = fam.max_step();
        CHECK(h0 == doctest::Approx(0.01 * shortest_vector(lat)));
        CHECK(throws_kind(ErrorKind::StepTooLarge, [&] { confluent_limit(fam, Complex(0.4, 0.3), 2, 1.5 * h0); }));
        SafeSampler s(lat, 35);
        for (int n = 1; n <= 3; ++n) {
            for (int t = 0; t < 10; ++t) {
                const auto u = s.point_where([&](Complex x) {
                    for (const Complex p : confluence_stencil(x, n, h0)) {
                        if (!s.is_safe(p)) {
                            return false;
                        }
                    }
                    return true;
                });
                REQUIRE(u.has_value());
                CHECK(confluent_limit(fam, *u, n, h0).agreement < 1e-6);
            }
        }
        // first row is (1, 0, 0, ...), so the n = 1 direct value is pe'
        const Complex u(0.41, 0.27);
        CHECK(rel(confluent_limit(fam, u, 1, h0).direct, pe_prime(lat, u)) < 1e-15);
    }
}
