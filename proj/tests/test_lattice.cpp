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

#include <sigmadet/error.hpp>
#include <sigmadet/lattice.hpp>

#include <doctest.h>

#include <cmath>

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

} // namespace

TEST_CASE("generators are oriented and reduced")
{
    // negative orientation is swapped
    const Lattice a = make_lattice({0.0, 2.0}, {2.0, 0.0});
    CHECK(a.tau().imag() > 0.0);

    // (2, 1+2i): tau lands on the edge Re tau = -1/2 of the fundamental domain
    const Lattice b = make_lattice({2.0, 0.0}, {1.0, 2.0});
    CHECK(std::abs(b.tau() - Complex(-0.5, 1.0)) < 1e-15);
    CHECK(shortest_vector(b) == doctest::Approx(2.0).epsilon(1e-15));

    // a long skew basis of the square lattice reduces back to it
    const Lattice c = make_lattice({2.0, 0.0}, {14.0, 2.0});
    CHECK(std::abs(c.tau() - Complex(0.0, 1.0)) < 1e-14);
    CHECK(std::abs(c.nome()) < std::exp(-M_PI * std::sqrt(3.0) / 2.0) + 1e-15);

    const Lattice d = make_lattice({0.3, 5.0}, {0.1, 1.7});
    CHECK(std::abs(d.tau()) >= 1.0 - 1e-12);
    CHECK(std::abs(d.tau().real()) <= 0.5 + 1e-12);
}

TEST_CASE("degenerate and invalid generators are rejected")
{
    CHECK(throws_kind(ErrorKind::DegenerateLattice, [] { make_lattice({1.0, 0.0}, {2.0, 0.0}); }));
    CHECK(throws_kind(ErrorKind::DegenerateLattice, [] { make_lattice({1.0, 1.0}, {-3.0, -3.0}); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument, [] { make_lattice({0.0, 0.0}, {1.0, 0.0}); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument, [] { make_lattice({NAN, 0.0}, {0.0, 1.0}); }));
}

TEST_CASE("invariants of the square lattice")
{
    // g2 = Gamma(1/4)^8 / (256 pi^2) for periods (2, 2i)
    const double g2_closed = 11.817045008077115768;
    const auto inv = eisenstein_invariants(test::square());
    CHECK(rel(inv.g2, g2_closed) < 1e-13);
    CHECK(std::abs(inv.g3) / std::pow(std::abs(inv.g2), 1.5) < 1e-12);
    // eta1 = pi / 2 from the square symmetry and the Legendre relation
    CHECK(rel(inv.eta1, M_PI / 2.0) < 1e-13);
    CHECK(rel(inv.eta2, Complex(0.0, -M_PI / 2.0)) < 1e-13);
}

TEST_CASE("invariants of the hexagonal and a generic lattice")
{
    const auto hex = eisenstein_invariants(test::hexagonal());
    CHECK(rel(hex.g3, 12.825381829368065996) < 1e-13);
    CHECK(std::abs(hex.g2) / std::pow(std::abs(hex.g3), 2.0 / 3.0) < 1e-12);
    CHECK(rel(hex.eta1, 1.8137993642342178506) < 1e-13);

    // tests/oracles/pe_oracle.py
    const auto gen = eisenstein_invariants(test::generic());
    CHECK(rel(gen.g2, {120.05792111801983441, 29.370207407343571561}) < 1e-13);
    CHECK(rel(gen.g3, {332.83105092489658591, -133.24570489453830351}) < 1e-13);
    CHECK(rel(gen.eta1, {3.3143657958308201897, -0.07467307910592219754}) < 1e-13);
    CHECK(rel(gen.discriminant, gen.g2 * gen.g2 * gen.g2 - 27.0 * gen.g3 * gen.g3) < 1e-14);

    const Lattice lat = test::generic();
    const Complex legendre = gen.eta1 * lat.omega2() - gen.eta2 * lat.omega1();
    CHECK(rel(legendre, Complex(0.0, 2.0 * M_PI)) < 1e-14);
}

TEST_CASE("invariants do not depend on the chosen basis")
{
    const Lattice a = test::generic();
    const Lattice b = make_lattice(a.omega1() * 2.0 + a.omega2() * 3.0, a.omega1() + a.omega2() * 2.0);
    const auto ia = eisenstein_invariants(a);
    const auto ib = eisenstein_invariants(b);
    CHECK(rel(ib.g2, ia.g2) < 1e-12);
    CHECK(rel(ib.g3, ia.g3) < 1e-12);
}

TEST_CASE("invariants are homogeneous")
{
    const Lattice a = test::generic();
    const Complex lambda(0.7, -1.3);
    const auto ia = eisenstein_invariants(a);
    const auto ib = eisenstein_invariants(scale_lattice(a, lambda));
    CHECK(rel(ib.g2, ia.g2 * std::pow(lambda, -4)) < 1e-13);
    CHECK(rel(ib.g3, ia.g3 * std::pow(lambda, -6)) < 1e-13);
    CHECK(rel(ib.eta1 * scale_lattice(a, lambda).omega1(), ia.eta1 * a.omega1()) < 1e-13);
}

TEST_CASE("direct lattice sums agree with the q-expansions")
{
    // truncation error of the square box sum of w^-4 behaves like c / R^2
    for (const Lattice &lat : {test::square(), test::generic()}) {
        const auto inv = eisenstein_invariants(lat);
        Complex g2[3];
        Complex g3[3];
        const long radii[3] = {100, 200, 400};
        for (int k = 0; k < 3; ++k) {
            const auto s = lattice_power_sums(lat, radii[k]);
            g2[k] = 60.0 * s.inv4;
            g3[k] = 140.0 * s.inv6;
        }
        const Complex g2_1 = (4.0 * g2[1] - g2[0]) / 3.0;
        const Complex g2_2 = (4.0 * g2[2] - g2[1]) / 3.0;
        const Complex g2_extrapolated = (16.0 * g2_2 - g2_1) / 15.0;
        CHECK(rel(g2[2], inv.g2) < 1e-5);
        CHECK(rel(g2_extrapolated, inv.g2) < 1e-8);
        // w^-6 converges absolutely and fast
        CHECK(std::abs(g3[2] - inv.g3) < 1e-8 * std::abs(inv.g2));
    }
}

TEST_CASE("shell summation")
{
    const Lattice lat = test::generic();
    const auto inv = eisenstein_invariants(lat);
    CHECK(throws_kind(ErrorKind::SlowConvergence, [&] { eisenstein_shell_sum(lat, 1e-16, 200); }));
    const auto s = eisenstein_shell_sum(lat, 1e-7, 2000);
    CHECK(s.radius > 1);
    CHECK(rel(s.g2, inv.g2) < 1e-4);
    CHECK(rel(s.g3, inv.g3) < 1e-6);
}

TEST_CASE("reduce_point records the translation")
{
    const Lattice lat = test::generic();
    const Complex r(0.31, 0.27);
    for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
            const auto cp = reduce_point(lat, r + lat.point(m, n));
            CHECK(std::abs(cp.reduced + lat.point(cp.m, cp.n) - (r + lat.point(m, n))) < 1e-13);
            CHECK(std::abs(cp.reduced - reduce_point(lat, r).reduced) < 1e-13);
            CHECK(cp.distance_to_lattice == doctest::Approx(reduce_point(lat, r).distance_to_lattice).epsilon(1e-12));
        }
    }
    CHECK(distance_to_lattice(lat, lat.point(2, -1)) < 1e-14);
    CHECK(distance_to_lattice(lat, lat.point(2, -1) + Complex(0.01, 0.0)) == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(rho_min(lat) == doctest::Approx(0.05 * shortest_vector(lat)));
}

TEST_CASE("theta weights and term counts")
{
    const Lattice lat = test::generic();
    const auto w = detail::theta_weights(lat.nome(), 6);
    REQUIRE(w.size() == 6);
    CHECK(w[0] == Complex(1.0));
    CHECK(rel(w[2], std::pow(lat.nome(), 6)) < 1e-14);
    CHECK(rel(w[3], -std::pow(lat.nome(), 12)) < 1e-14);

    const int near = detail::theta_term_count(lat.nome(), 0.0);
    const int far = detail::theta_term_count(lat.nome(), 3.0);
    CHECK(near >= 3);
    CHECK(far >= near);
    CHECK(far <= 64);
}
