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

void theta_jets(ThetaWeights w, std::span<const Complex> sin_z, std::span<const Complex> cos_z,
                std::span<ThetaJet> out)
{
    const auto terms = w.weights.size();
    for (std::size_t p = 0; p < out.size(); ++p) {
        Complex s = sin_z[p];
        Complex c = cos_z[p];
        // Rotation by 2z: sin 2z = 2 s c, cos 2z = 1 - 2 s^2.
        const Complex s2 = 2.0 * cmul(s, c);
        const Complex c2 = 1.0 - 2.0 * cmul(s, s);

        Complex d0{}, d1{}, d2{}, d3{};
        for (std::size_t n = 0; n < terms; ++n) {
            const double k = static_cast<double>(2 * n + 1);
            const Complex ws = cmul(w.weights[n], s);
            const Complex wc = cmul(w.weights[n], c);
            d0 += ws;
            d1 += k * wc;
            d2 -= (k * k) * ws;
            d3 -= (k * k * k) * wc;

            const Complex sn = cmul(s, c2) + cmul(c, s2);
            const Complex cn = cmul(c, c2) - cmul(s, s2);
            s = sn;
            c = cn;
        }
        out[p] = {d0, d1, d2, d3};
    }
}

} // namespace sigmadet::kernels::scalar
