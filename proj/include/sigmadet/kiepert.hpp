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

#ifndef SIGMADET_KIEPERT_HPP
#define SIGMADET_KIEPERT_HPP

// Hankel determinant of pe-derivatives and the division values it yields:
//
//   det[ pe^(i+j+1)(u) ]_{i,j=0..n-1}  =  (-1)^n (prod_{a>b}(a-b))^2 sigma((n+1)u) / sigma(u)^((n+1)^2)
//
// so psi_m(u) = sigma(m u) / sigma(u)^(m^2) is, up to the constant, the
// (m-1)x(m-1) Hankel determinant, and pe(m u) follows from
// pe(u) - psi_(m+1) psi_(m-1) / psi_m^2.

#include <sigmadet/complex.hpp>
#include <sigmadet/determinant.hpp>
#include <sigmadet/lattice.hpp>

namespace sigmadet
{

struct KiepertReport {
    int n = 0;
    Complex u;
    Complex hankel;
    Complex sigma_ratio;
    double relative_residual = 0.0;
};

// H[i][j] = pe^(i+j+1)(u), 1 <= n <= 6.
SquareMatrix kiepert_hankel_matrix(const Lattice &lat, Complex u, int n);
Complex kiepert_hankel(const Lattice &lat, Complex u, int n);
Complex kiepert_rhs(const Lattice &lat, Complex u, int n);
KiepertReport kiepert_report(const Lattice &lat, Complex u, int n);

enum class DivisionMethod { sigma_ratio, hankel };

// psi_m(u), 2 <= m <= 7.
Complex psi_division_value(const Lattice &lat, Complex u, int m, DivisionMethod method);

// pe(m u) through division values, 2 <= m <= 6.
Complex pe_multiplication(const Lattice &lat, Complex u, int m, DivisionMethod method = DivisionMethod::hankel);

} // namespace sigmadet

#endif
