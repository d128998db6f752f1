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

#include <immintrin.h>

#include "avx2_complex.hpp"

namespace sigmadet::kernels::avx2
{

// Two points per register, interleaved (re, im, re, im).
void theta_jets(ThetaWeights w, std::span<const Complex> sin_z, std::span<const Complex> cos_z,
                std::span<ThetaJet> out)
{
    const std::size_t terms = w.weights.size();
    const std::size_t count = out.size();
    const __m256d one = _mm256_setr_pd(1.0, 0.0, 1.0, 0.0);
    const __m256d two = _mm256_set1_pd(2.0);

    std::size_t p = 0;
    for (; p + 2 <= count; p += 2) {
        __m256d s = load2(&sin_z[p]);
        __m256d c = load2(&cos_z[p]);
        const __m256d s2 = _mm256_mul_pd(two, cmul(s, c));
        const __m256d c2 = _mm256_fnmadd_pd(two, cmul(s, s), one);

        __m256d d0 = _mm256_setzero_pd();
        __m256d d1 = _mm256_setzero_pd();
        __m256d d2 = _mm256_setzero_pd();
        __m256d d3 = _mm256_setzero_pd();
        for (std::size_t n = 0; n < terms; ++n) {
            const double kk = static_cast<double>(2 * n + 1);
            const __m256d k1 = _mm256_set1_pd(kk);
            const __m256d k2 = _mm256_set1_pd(kk * kk);
            const __m256d k3 = _mm256_set1_pd(kk * kk * kk);
            const __m256d wn = broadcast(w.weights[n]);
            const __m256d ws = cmul(wn, s);
            const __m256d wc = cmul(wn, c);
            d0 = _mm256_add_pd(d0, ws);
            d1 = _mm256_fmadd_pd(k1, wc, d1);
            d2 = _mm256_fnmadd_pd(k2, ws, d2);
            d3 = _mm256_fnmadd_pd(k3, wc, d3);

            const __m256d sn = _mm256_add_pd(cmul(s, c2), cmul(c, s2));
            const __m256d cn = _mm256_sub_pd(cmul(c, c2), cmul(s, s2));
            s = sn;
            c = cn;
        }
        store_lo(&out[p].d0, d0);
        store_lo(&out[p].d1, d1);
        store_lo(&out[p].d2, d2);
        store_lo(&out[p].d3, d3);
        store_hi(&out[p + 1].d0, d0);
        store_hi(&out[p + 1].d1, d1);
        store_hi(&out[p + 1].d2, d2);
        store_hi(&out[p + 1].d3, d3);
    }
    if (p < count) {
        scalar::theta_jets(w, sin_z.subspan(p), cos_z.subspan(p), out.subspan(p));
    }
}

} // namespace sigmadet::kernels::avx2
