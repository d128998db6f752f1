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

#ifndef SIGMADET_IDENTITIES_HPP
#define SIGMADET_IDENTITIES_HPP

// Numerical checks of the sigma/zeta/pe determinant identities: the bordered
// zeta determinant
//
//   - | 0  1            ...  1            |
//     | 1  zeta(u0+v0)  ...  zeta(u0+vn)  |  =  sigma(sum u + sum v)
//     | .  .            ...  .            |     * prod_{a>b} sigma(ua-ub) sigma(va-vb)
//     | 1  zeta(un+v0)  ...  zeta(un+vn)  |     / prod_{a,b} sigma(ua+vb)
//
// and its confluent form in the pe-derivatives,
//
//   | 1  pe(u_a)  pe'(u_a)  ...  pe^(n-1)(u_a) |
//     = (-1)^n prod_{a>b}(a-b) sigma(sum u) prod_{a>b} sigma(ua-ub) / (prod sigma(ua))^(n+1).

#include <sigmadet/complex.hpp>
#include <sigmadet/determinant.hpp>
#include <sigmadet/lattice.hpp>

#include <span>
#include <string>

namespace sigmadet
{

struct IdentityReport {
    std::string identity_name;
    int n = 0;
    Complex lhs;
    Complex rhs;
    // |lhs - rhs| / max(|lhs|, |rhs|, residual_floor)
    double relative_residual = 0.0;
    double condition_estimate = 1.0;
    std::string inputs_digest;
};

double relative_residual(Complex lhs, Complex rhs);

// FNV-1a digest of the lattice and argument bit patterns.
std::string inputs_digest(const Lattice &lat, std::span<const Complex> a, std::span<const Complex> b = {});

// (n+2)x(n+2) bordered matrix: entry (0,0) = 0, rest of the border 1,
// entry (a+1, b+1) = zeta(u_a + v_b). TooCloseToPole names the (a, b) pair.
SquareMatrix fs_matrix(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs);

IdentityReport fs_residual(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs);

// n = us.size() - 1 >= 1.
IdentityReport hermite_residual(const Lattice &lat, std::span<const Complex> us);

// |det(fs_matrix)| / (max |entry|)^dim for the given arguments. Expected to
// vanish when u_0 is the Abel point below or duplicates another u.
double r_vanishing_check(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs);

// -(u_1 + ... + u_n + v_0 + ... + v_n) reduced into the fundamental cell.
Complex abel_vanishing_point(const Lattice &lat, std::span<const Complex> us_tail, std::span<const Complex> vs);

// Induction step of the bordered identity: with u_n replaced by
// -v_n + epsilon, (u_n + v_n) * lhs_n should approach lhs_(n-1) of the first
// n pairs. Returns the relative difference; n = us.size() - 1 >= 1.
double fs_degeneration_residual(const Lattice &lat, std::span<const Complex> us, std::span<const Complex> vs,
                                Complex epsilon);

} // namespace sigmadet

#endif
