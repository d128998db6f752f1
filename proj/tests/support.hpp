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

#ifndef SIGMADET_TESTS_SUPPORT_HPP
#define SIGMADET_TESTS_SUPPORT_HPP

#include <sigmadet/complex.hpp>
#include <sigmadet/lattice.hpp>

#include <algorithm>
#include <cmath>

namespace sigmadet::test
{

inline double rel(Complex got, Complex want)
{
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

inline Lattice square()
{
    return make_lattice({2.0, 0.0}, {0.0, 2.0});
}

inline Lattice hexagonal()
{
    return make_lattice({2.0, 0.0}, {1.0, std::sqrt(3.0)});
}

// omega1 = 1, tau = 0.3 + 1.1i
inline Lattice generic()
{
    return make_lattice({1.0, 0.0}, {0.3, 1.1});
}

} // namespace sigmadet::test

#endif
