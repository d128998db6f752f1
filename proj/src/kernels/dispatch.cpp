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

#include <sigmadet/kernels/kernels.hpp>

#include <cstdlib>
#include <string_view>

namespace sigmadet::kernels
{

namespace
{

Isa select_isa() noexcept
{
    const char *forced = std::getenv("SIGMADET_KERNEL");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
        return Isa::scalar;
    }
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept
{
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool avx2_available() noexcept
{
#if defined(SIGMADET_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Isa active_isa() noexcept
{
    static const Isa isa = select_isa();
    return isa;
}

void theta_jets(ThetaWeights w, std::span<const Complex> sin_z, std::span<const Complex> cos_z,
                std::span<ThetaJet> out)
{
#if defined(SIGMADET_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        avx2::theta_jets(w, sin_z, cos_z, out);
        return;
    }
#endif
    scalar::theta_jets(w, sin_z, cos_z, out);
}

void power_sums_row(Complex omega1, Complex omega2, long row, long m_begin, long m_end, PowerSums &acc)
{
#if defined(SIGMADET_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        avx2::power_sums_row(omega1, omega2, row, m_begin, m_end, acc);
        return;
    }
#endif
    scalar::power_sums_row(omega1, omega2, row, m_begin, m_end, acc);
}

} // namespace sigmadet::kernels
