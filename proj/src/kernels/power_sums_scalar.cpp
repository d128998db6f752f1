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

namespace sigmadet::kernels::scalar
{

void power_sums_row(Complex omega1, Complex omega2, long row, long m_begin, long m_end, PowerSums &acc)
{
    const Complex base = static_cast<double>(row) * omega2;
    Complex s4{}, s6{};
    for (long m = m_begin; m < m_end; ++m) {
        const Complex w = base + static_cast<double>(m) * omega1;
        const Complex w2 = cmul(w, w);
        const double norm = std::norm(w2);
        const Complex inv2{w2.real() / norm, -w2.imag() / norm};
        const Complex inv4 = cmul(inv2, inv2);
        s4 += inv4;
        s6 += cmul(inv4, inv2);
    }
    acc.inv4 += s4;
    acc.inv6 += s6;
}

} // namespace sigmadet::kernels::scalar
