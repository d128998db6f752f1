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

#ifndef SIGMADET_SRC_KERNELS_AVX2_COMPLEX_HPP
#define SIGMADET_SRC_KERNELS_AVX2_COMPLEX_HPP

// Interleaved complex helpers; only included from translation units built
// with -mavx2 -mfma.

#include <sigmadet/complex.hpp>

#include <immintrin.h>

namespace sigmadet::kernels::avx2
{

inline __m256d load2(const Complex *p) noexcept
{
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline __m256d broadcast(Complex z) noexcept
{
    return _mm256_setr_pd(z.real(), z.imag(), z.real(), z.imag());
}

inline void store_lo(Complex *p, __m256d v) noexcept
{
    _mm_storeu_pd(reinterpret_cast<double *>(p), _mm256_castpd256_pd128(v));
}

inline void store_hi(Complex *p, __m256d v) noexcept
{
    _mm_storeu_pd(reinterpret_cast<double *>(p), _mm256_extractf128_pd(v, 1));
}

// (ar br - ai bi, ai br + ar bi) per lane pair.
inline __m256d cmul(__m256d a, __m256d b) noexcept
{
    const __m256d br = _mm256_movedup_pd(b);
    const __m256d bi = _mm256_permute_pd(b, 0xF);
    const __m256d as = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

// Sum of the two lane-pair complex values.
inline Complex hsum(__m256d v) noexcept
{
    const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

} // namespace sigmadet::kernels::avx2

#endif
