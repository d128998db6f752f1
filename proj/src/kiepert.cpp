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

#include <sigmadet/determinant.hpp>
#include <sigmadet/error.hpp>
#include <sigmadet/identities.hpp>
#include <sigmadet/kiepert.hpp>
#include <sigmadet/tolerances.hpp>
#include <sigmadet/weierstrass.hpp>

#include <string>
#include <vector>

namespace sigmadet
{

namespace
{

void check_n(int n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "n", "Hankel order must be at least 1");
    }
    if (n > tolerances.max_kiepert_n) {
        throw Error(ErrorKind::OrderTooLarge, "n",
                    "Hankel order " + std::to_string(n) + " exceeds " + std::to_string(tolerances.max_kiepert_n));
    }
}

void check_safe(const Lattice &lat, Complex u, const char *what)
{
    if (distance_to_lattice(lat, u) < rho_min(lat)) {
        throw Error(ErrorKind::TooCloseToPole, what, std::string(what) + " is within rho_min of a lattice point");
    }
}

double sign(int n)
{
    return n % 2 == 0 ? 1.0 : -1.0;
}

// psi_m for m >= 1 with psi_1 = 1.
Complex psi(const Lattice &lat, Complex u, int m, DivisionMethod method)
{
    if (m == 1) {
        return 1.0;
    }
    if (method == DivisionMethod::sigma_ratio) {
        return sigma(lat, static_cast<double>(m) * u) / std::pow(sigma(lat, u), m * m);
    }
    const double c = difference_product_value(m - 1);
    return kiepert_hankel(lat, u, m - 1) / (sign(m - 1) * c * c);
}

} // namespace

SquareMatrix kiepert_hankel_matrix(const Lattice &lat, Complex u, int n)
{
    check_n(n);
    check_safe(lat, u, "u");
    const auto inv = eisenstein_invariants(lat);
    const PeJet jet = pe_jet(lat, u);

    // pe^(1) .. pe^(2n-1)
    std::vector<Complex> d(static_cast<std::size_t>(2 * n));
    for (int k = 1; k <= 2 * n - 1; ++k) {
        d[static_cast<std::size_t>(k)] =
            k == 1 ? jet.pe_prime : derivative_polynomial(k).evaluate(jet.pe, jet.pe_prime, inv.g2, inv.g3);
    }
    SquareMatrix h(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            h(i, j) = d[static_cast<std::size_t>(i + j + 1)];
        }
    }
    return h;
}

Complex kiepert_hankel(const Lattice &lat, Complex u, int n)
{
    return det(kiepert_hankel_matrix(lat, u, n)).value;
}

Complex kiepert_rhs(const Lattice &lat, Complex u, int n)
{
    check_n(n);
    check_safe(lat, u, "u");
    const double c = difference_product_value(n);
    const Complex s = sigma(lat, u);
    return sign(n) * c * c * sigma(lat, static_cast<double>(n + 1) * u) / std::pow(s, (n + 1) * (n + 1));
}

KiepertReport kiepert_report(const Lattice &lat, Complex u, int n)
{
    KiepertReport r;
    r.n = n;
    r.u = u;
    r.hankel = kiepert_hankel(lat, u, n);
    r.sigma_ratio = kiepert_rhs(lat, u, n);
    r.relative_residual = relative_residual(r.hankel, r.sigma_ratio);
    return r;
}

Complex psi_division_value(const Lattice &lat, Complex u, int m, DivisionMethod method)
{
    if (m < tolerances.min_division_m || m > tolerances.max_division_m) {
        throw Error(ErrorKind::InvalidArgument, "m",
                    "division index " + std::to_string(m) + " outside [" +
                        std::to_string(tolerances.min_division_m) + ", " +
                        std::to_string(tolerances.max_division_m) + "]");
    }
    check_safe(lat, u, "u");
    return psi(lat, u, m, method);
}

Complex pe_multiplication(const Lattice &lat, Complex u, int m, DivisionMethod method)
{
    if (m < tolerances.min_multiplication_m || m > tolerances.max_multiplication_m) {
        throw Error(ErrorKind::InvalidArgument, "m",
                    "multiplier " + std::to_string(m) + " outside [" +
                        std::to_string(tolerances.min_multiplication_m) + ", " +
                        std::to_string(tolerances.max_multiplication_m) + "]");
    }
    check_safe(lat, u, "u");
    check_safe(lat, static_cast<double>(m) * u, "m*u");
    const Complex pm = psi(lat, u, m, method);
    return pe(lat, u) - psi(lat, u, m + 1, method) * psi(lat, u, m - 1, method) / (pm * pm);
}

} // namespace sigmadet
