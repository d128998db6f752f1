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

#ifndef SIGMADET_TOLERANCES_HPP
#define SIGMADET_TOLERANCES_HPP

namespace sigmadet
{

// Every numeric threshold the library applies lives here. Distances are
// expressed as fractions of the lattice's shortest vector.
struct Tolerances {
    // make_lattice: |Im(omega2/omega1)| below this (relative) is a real ratio.
    double degenerate_ratio = 1e-14;

    // Eisenstein shell summation.
    double shell_relative = 1e-16;
    int shell_max_radius = 2000;

    // Theta series: stop once the remaining terms are below this many ulps
    // of the partial sum.
    double theta_term_ulps = 1e-3;
    int theta_max_terms = 64;

    // Pole guard for zeta / pe / pe_prime.
    double rho_min_fraction = 0.05;

    // Documented accuracy target of the numeric backend.
    double eval_relative = 1e-10;
    double legendre_relative = 1e-10;

    // Series oracle defaults.
    int series_order = 40;
    double series_radius_fraction = 0.25;

    // Random safe sampling: minimum pairwise separation.
    double pairwise_fraction = 0.05;

    // IdentityReport floor for the relative residual denominator.
    double residual_floor = 1e-300;

    // Confluence: Richardson depth and largest allowed initial step.
    int richardson_depth = 5;
    double confluence_step_fraction = 0.01;

    // Division values below this modulus are excluded from multiplication
    // campaigns.
    double division_value_floor = 1e-6;

    // Size guards.
    int max_derivative_order = 24;
    int max_determinant_dim = 16;
    int max_difference_product_n = 16;
    int max_kiepert_n = 6;
    int min_division_m = 2;
    int max_division_m = 7;
    int min_multiplication_m = 2;
    int max_multiplication_m = 6;
};

inline constexpr Tolerances tolerances{};

} // namespace sigmadet

#endif
