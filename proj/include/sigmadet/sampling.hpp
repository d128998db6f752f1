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

#ifndef SIGMADET_SAMPLING_HPP
#define SIGMADET_SAMPLING_HPP

#include <sigmadet/complex.hpp>
#include <sigmadet/lattice.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace sigmadet
{

// Seeded uniform sampling in the fundamental cell with the "safe point"
// rejection policy: every point and every composite argument stays at least
// rho_min from the lattice. Output depends only on (lattice, seed) and the
// sequence of calls.
class SafeSampler
{
public:
    SafeSampler(const Lattice &lat, std::uint64_t seed);

    std::uint64_t seed() const noexcept
    {
        return m_seed;
    }

    // Uniform in [0, 1), reproducible across standard libraries.
    double uniform() noexcept;

    // a*omega1 + b*omega2 with a, b uniform in [-1/2, 1/2).
    Complex cell_point() noexcept;

    bool is_safe(Complex z) const;

    // n+1 points with each point, each difference and the sum safe.
    std::optional<std::vector<Complex>> hermite_points(int n);

    struct FsPoints {
        std::vector<Complex> us;
        std::vector<Complex> vs;
    };
    // n+1 pairs with all u_a + v_b, u_a - u_b, v_a - v_b and the total sum safe.
    std::optional<FsPoints> fs_points(int n);

    // Single point u with u and each multiple k*u, k in multiples, safe.
    std::optional<Complex> point_with_multiples(std::span<const int> multiples);

    // Cell point satisfying `accept`.
    template <class Accept>
    std::optional<Complex> point_where(Accept accept)
    {
        for (int attempt = 0; attempt < max_attempts; ++attempt) {
            const Complex u = cell_point();
            if (accept(u)) {
                return u;
            }
            ++m_rejections;
        }
        return std::nullopt;
    }

    // Rejected draws so far.
    std::uint64_t rejections() const noexcept
    {
        return m_rejections;
    }

    static constexpr int max_attempts = 10000;

private:
    Lattice m_lattice;
    std::uint64_t m_seed;
    std::mt19937_64 m_engine;
    double m_rho_min;
    std::uint64_t m_rejections = 0;
};

} // namespace sigmadet

#endif
