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

#include <sigmadet/sampling.hpp>

namespace sigmadet
{

SafeSampler::SafeSampler(const Lattice &lat, std::uint64_t seed)
    : m_lattice(lat), m_seed(seed), m_engine(seed), m_rho_min(rho_min(lat))
{
}

double SafeSampler::uniform() noexcept
{
    return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
}

Complex SafeSampler::cell_point() noexcept
{
    const double a = uniform() - 0.5;
    const double b = uniform() - 0.5;
    return a * m_lattice.omega1() + b * m_lattice.omega2();
}

bool SafeSampler::is_safe(Complex z) const
{
    return distance_to_lattice(m_lattice, z) >= m_rho_min;
}

std::optional<std::vector<Complex>> SafeSampler::hermite_points(int n)
{
    const auto count = static_cast<std::size_t>(n + 1);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Complex> us(count);
        for (auto &u : us) {
            u = cell_point();
        }
        bool ok = true;
        Complex total{};
        for (std::size_t a = 0; a < count && ok; ++a) {
            total += us[a];
            ok = is_safe(us[a]);
            for (std::size_t b = 0; b < a && ok; ++b) {
                ok = is_safe(us[a] - us[b]);
            }
        }
        if (ok && is_safe(total)) {
            return us;
        }
        ++m_rejections;
    }
    return std::nullopt;
}

std::optional<SafeSampler::FsPoints> SafeSampler::fs_points(int n)
{
    const auto count = static_cast<std::size_t>(n + 1);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        FsPoints p{std::vector<Complex>(count), std::vector<Complex>(count)};
        for (std::size_t a = 0; a < count; ++a) {
            p.us[a] = cell_point();
            p.vs[a] = cell_point();
        }
        bool ok = true;
        Complex total{};
        for (std::size_t a = 0; a < count && ok; ++a) {
            total += p.us[a] + p.vs[a];
            for (std::size_t b = 0; b < count && ok; ++b) {
                ok = is_safe(p.us[a] + p.vs[b]);
            }
            for (std::size_t b = 0; b < a && ok; ++b) {
                ok = is_safe(p.us[a] - p.us[b]) && is_safe(p.vs[a] - p.vs[b]);
            }
        }
        if (ok && is_safe(total)) {
            return p;
        }
        ++m_rejections;
    }
    return std::nullopt;
}

std::optional<Complex> SafeSampler::point_with_multiples(std::span<const int> multiples)
{
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const Complex u = cell_point();
        bool ok = is_safe(u);
        for (const int k : multiples) {
            ok = ok && is_safe(static_cast<double>(k) * u);
        }
        if (ok) {
            return u;
        }
        ++m_rejections;
    }
    return std::nullopt;
}

} // namespace sigmadet
