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

#ifndef SIGMADET_KERNELS_KERNELS_HPP
#define SIGMADET_KERNELS_KERNELS_HPP

// Data-parallel inner loops of the library. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2/FMA variant. The variant
// used by the public entry points is chosen once at runtime from the CPU
// features (override with SIGMADET_KERNEL=scalar|avx2). Tests call the
// variants directly and check them against each other.

#include <sigmadet/complex.hpp>

#include <span>
#include <string_view>

namespace sigmadet::kernels
{

// Odd theta series with the common q^(1/4) factor removed,
//   S(z) = sum_{n>=0} (-1)^n q^(n(n+1)) sin((2n+1) z),
// and its first three z-derivatives.
struct ThetaJet {
    Complex d0;
    Complex d1;
    Complex d2;
    Complex d3;
};

// Series weights (-1)^n q^(n(n+1)), n = 0..terms-1.
struct ThetaWeights {
    std::span<const Complex> weights;
};

// Accumulated sums of w^-4 and w^-6 over lattice points.
struct PowerSums {
    Complex inv4{};
    Complex inv6{};
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available() noexcept;

// Variant used by theta_jets()/power_sums_row() below.
Isa active_isa() noexcept;

// Evaluates S and its derivatives at every point whose sin z / cos z are
// given. All spans have the same length.
void theta_jets(ThetaWeights w, std::span<const Complex> sin_z, std::span<const Complex> cos_z,
                std::span<ThetaJet> out);

// Adds w^-4, w^-6 for w = m*omega1 + row*omega2, m in [m_begin, m_end), to acc.
// The caller keeps the origin out of the range.
void power_sums_row(Complex omega1, Complex omega2, long row, long m_begin, long m_end, PowerSums &acc);

namespace scalar
{
void theta_jets(ThetaWeights w, std::span<const Complex> sin_z, std::span<const Complex> cos_z,
                std::span<ThetaJet> out);
void power_sums_row(Complex omega1, Complex omega2, long row, long m_begin, long m_end, PowerSums &acc);
} // namespace scalar

#if defined(SIGMADET_HAVE_AVX2)
namespace avx2
{
void theta_jets(ThetaWeights w, std::span<const Complex> sin_z, std::span<const Complex> cos_z,
                std::span<ThetaJet> out);
void power_sums_row(Complex omega1, Complex omega2, long row, long m_begin, long m_end, PowerSums &acc);
} // namespace avx2
#endif

} // namespace sigmadet::kernels

#endif
