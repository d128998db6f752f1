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

void power_sums_row(Complex omega1, Complex omega2, long row, long m_begin, long m_end, PowerSums &acc)
{
    const __m256d base = broadcast(static_cast<double>(row) * omega2);
    const __m256d step = broadcast(omega1);
    const __m256d conj_mask = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    const __m256d two = _mm256_set1_pd(2.0);

    __m256d s4 = _mm256_setzero_pd();
    __m256d s6 = _mm256_setzero_pd();
    __m256d mv = _mm256_setr_pd(static_cast<double>(m_begin), static_cast<double>(m_begin),
                                static_cast<double>(m_begin + 1), static_cast<double>(m_begin + 1));

    long m = m_begin;
    for (; m + 2 <= m_end; m += 2) {
        const __m256d w = _mm256_fmadd_pd(mv, step, base);
        const __m256d w2 = cmul(w, w);
        const __m256d sq = _mm256_mul_pd(w2, w2);
        const __m256d norm = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
        const __m256d inv2 = _mm256_div_pd(_mm256_mul_pd(w2, conj_mask), norm);
        const __m256d inv4 = cmul(inv2, inv2);
        s4 = _mm256_add_pd(s4, inv4);
        s6 = _mm256_add_pd(s6, cmul(inv4, inv2));
        mv = _mm256_add_pd(mv, two);
    }
    acc.inv4 += hsum(s4);
    acc.inv6 += hsum(s6);
    if (m < m_end) {
        scalar::power_sums_row(omega1, omega2, row, m, m_end, acc);
    }
}

} // namespace sigmadet::kernels::avx2
