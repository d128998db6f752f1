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

#include <sigmadet/kernels/kernels.hpp>
#include <sigmadet/lattice.hpp>

#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string_view>
#include <vector>

using namespace sigmadet;
using namespace sigmadet::kernels;
using sigmadet::test::rel;

namespace
{

struct Inputs {
    std::vector<Complex> weights;
    std::vector<Complex> sin_z;
    std::vector<Complex> cos_z;
};

Inputs random_inputs(std::size_t points, int terms, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const Lattice lat = test::generic();
    Inputs in;
    in.weights = sigmadet::detail::theta_weights(lat.nome(), terms);
    for (std::size_t i = 0; i < points; ++i) {
        const Complex z(M_PI * d(gen), 0.8 * d(gen));
        in.sin_z.push_back(std::sin(z));
        in.cos_z.push_back(std::cos(z));
    }
    return in;
}

double jet_gap(const ThetaJet &a, const ThetaJet &b)
{
    return std::max({rel(a.d0, b.d0), rel(a.d1, b.d1), rel(a.d2, b.d2), rel(a.d3, b.d3)});
}

} // namespace

TEST_CASE("dispatch honours the override")
{
    const char *forced = std::getenv("SIGMADET_KERNEL");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
        CHECK(active_isa() == Isa::scalar);
    } else {
        CHECK(active_isa() == (avx2_available() ? Isa::avx2 : Isa::scalar));
    }
    MESSAGE("active kernel: " << isa_name(active_isa()));
}

TEST_CASE("scalar theta jets against a direct sum")
{
    // d_k = sum_n t_n (2n+1)^k sin^(k)((2n+1) z)
    const auto in = random_inputs(7, 9, 1);
    std::vector<ThetaJet> out(in.sin_z.size());
    scalar::theta_jets({in.weights}, in.sin_z, in.cos_z, out);
    for (std::size_t i = 0; i < in.sin_z.size(); ++i) {
        const Complex z = std::asin(in.sin_z[i]);
        // asin may land on pi - z; the jet only depends on sin z and cos z
        const Complex zz = std::abs(std::cos(z) - in.cos_z[i]) < 1e-12 ? z : Complex(M_PI) - z;
        ThetaJet want{};
        for (std::size_t n = 0; n < in.weights.size(); ++n) {
            const double k = 2.0 * static_cast<double>(n) + 1.0;
            const Complex s = std::sin(k * zz);
            const Complex c = std::cos(k * zz);
            want.d0 += in.weights[n] * s;
            want.d1 += in.weights[n] * k * c;
            want.d2 -= in.weights[n] * k * k * s;
            want.d3 -= in.weights[n] * k * k * k * c;
        }
        CHECK(jet_gap(out[i], want) < 1e-12);
    }
}

#if defined(SIGMADET_HAVE_AVX2)

TEST_CASE("avx2 theta jets match the scalar reference")
{
    if (!avx2_available()) {
        MESSAGE("cpu lacks avx2/fma, skipping");
        return;
    }
    // odd and even lengths exercise the scalar tail
    for (std::size_t points : {1u, 2u, 3u, 8u, 33u}) {
        for (int terms : {1, 2, 5, 12}) {
            const auto in = random_inputs(points, terms, points * 100 + static_cast<std::size_t>(terms));
            std::vector<ThetaJet> a(points);
            std::vector<ThetaJet> b(points);
            scalar::theta_jets({in.weights}, in.sin_z, in.cos_z, a);
            avx2::theta_jets({in.weights}, in.sin_z, in.cos_z, b);
            for (std::size_t i = 0; i < points; ++i) {
                CHECK(jet_gap(a[i], b[i]) < 1e-14);
            }
        }
    }
}

TEST_CASE("avx2 power sums match the scalar reference")
{
    if (!avx2_available()) {
        MESSAGE("cpu lacks avx2/fma, skipping");
        return;
    }
    const Lattice lat = test::generic();
    for (long row : {-7L, 0L, 3L}) {
        for (long width : {1L, 2L, 5L, 40L}) {
            PowerSums a;
            PowerSums b;
            const long begin = row == 0 ? 1 : -width;
            scalar::power_sums_row(lat.omega1(), lat.omega2(), row, begin, width + 1, a);
            avx2::power_sums_row(lat.omega1(), lat.omega2(), row, begin, width + 1, b);
            // row sums cancel, so measure against the sum of moduli
            double abs4 = 0.0;
            double abs6 = 0.0;
            for (long m = begin; m < width + 1; ++m) {
                const double r = std::abs(lat.point(m, row));
                abs4 += std::pow(r, -4);
                abs6 += std::pow(r, -6);
            }
            CHECK(std::abs(b.inv4 - a.inv4) < 1e-15 * abs4);
            CHECK(std::abs(b.inv6 - a.inv6) < 1e-15 * abs6);
        }
    }
}

#endif

TEST_CASE("dispatched kernels agree with the scalar reference")
{
    const auto in = random_inputs(17, 8, 99);
    std::vector<ThetaJet> a(in.sin_z.size());
    std::vector<ThetaJet> b(in.sin_z.size());
    scalar::theta_jets({in.weights}, in.sin_z, in.cos_z, a);
    theta_jets({in.weights}, in.sin_z, in.cos_z, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(jet_gap(a[i], b[i]) < 1e-14);
    }

    const Lattice lat = test::square();
    PowerSums s;
    PowerSums d;
    scalar::power_sums_row(lat.omega1(), lat.omega2(), 2, -30, 31, s);
    power_sums_row(lat.omega1(), lat.omega2(), 2, -30, 31, d);
    CHECK(rel(d.inv4, s.inv4) < 1e-14);
}
