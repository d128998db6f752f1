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

#ifndef SIGMADET_COMPLEX_HPP
#define SIGMADET_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <numbers>

namespace sigmadet
{

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex i_unit{0.0, 1.0};

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Plain complex product without the C99 Annex G NaN recovery that
// std::complex<double>::operator* pays for in hot loops.
inline constexpr Complex cmul(Complex a, Complex b) noexcept
{
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

} // namespace sigmadet

#endif
