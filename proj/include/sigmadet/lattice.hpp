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

#ifndef SIGMADET_LATTICE_HPP
#define SIGMADET_LATTICE_HPP

#include <sigmadet/complex.hpp>
#include <sigmadet/kernels/kernels.hpp>
#include <sigmadet/tolerances.hpp>

#include <cstdint>
#include <vector>

namespace sigmadet
{

// Period lattice Z*omega1 + Z*omega2 (full periods: pe(u + omega_k) = pe(u)).
// Instances only come out of make_lattice(), so the basis is always
// oriented (Im tau > 0) and reduced (|Re tau| <= 1/2, |tau| >= 1).
class Lattice
{
public:
    Complex omega1() const noexcept
    {
        return m_omega1;
    }
    Complex omega2() const noexcept
    {
        return m_omega2;
    }
    Complex tau() const noexcept
    {
        return m_tau;
    }
    // exp(i pi tau)
    Complex nome() const noexcept
    {
        return m_nome;
    }

    Complex point(std::int64_t m, std::int64_t n) const noexcept
    {
        return static_cast<double>(m) * m_omega1 + static_cast<double>(n) * m_omega2;
    }

private:
    friend Lattice make_lattice(Complex omega1, Complex omega2);

    Lattice(Complex omega1, Complex omega2);

    Complex m_omega1;
    Complex m_omega2;
    Complex m_tau;
    Complex m_nome;
};

// Orients and reduces the basis. Throws DegenerateLattice when omega2/omega1
// is real, InvalidArgument for zero or non-finite generators.
Lattice make_lattice(Complex omega1, Complex omega2);

// lambda * lattice, re-normalized.
Lattice scale_lattice(const Lattice &lat, Complex lambda);

struct EllipticInvariants {
    Complex g2;
    Complex g3;
    Complex discriminant;
    // Quasi-periods: zeta(u + omega_k) = zeta(u) + eta_k, with
    // eta1*omega2 - eta2*omega1 = 2 pi i.
    Complex eta1;
    Complex eta2;
};

EllipticInvariants eisenstein_invariants(const Lattice &lat);

struct CellPoint {
    Complex reduced;
    std::int64_t m = 0;
    std::int64_t n = 0;
    double distance_to_lattice = 0.0;
};

// u = reduced + m*omega1 + n*omega2 with the basis coefficients of `reduced`
// in [-1/2, 1/2).
CellPoint reduce_point(const Lattice &lat, Complex u);

double shortest_vector(const Lattice &lat);

// Minimum distance to the lattice for the pole-bearing functions.
double rho_min(const Lattice &lat);

inline double distance_to_lattice(const Lattice &lat, Complex u)
{
    return reduce_point(lat, u).distance_to_lattice;
}

// Sums of w^-4 and w^-6 over the nonzero points with |m|, |n| <= radius.
kernels::PowerSums lattice_power_sums(const Lattice &lat, long radius);

struct ShellSum {
    Complex g2;
    Complex g3;
    long radius = 0;
};

// g2 = 60 sum' w^-4 and g3 = 140 sum' w^-6 by expanding square shells until
// a whole shell adds less than `relative` of the running total. Throws
// SlowConvergence past `max_radius`.
ShellSum eisenstein_shell_sum(const Lattice &lat, double relative = tolerances.shell_relative,
                              long max_radius = tolerances.shell_max_radius);

namespace detail
{

// (-1)^n q^(n(n+1)) for n = 0..count-1.
std::vector<Complex> theta_weights(Complex q, int count);

// Terms needed for the odd theta series and three derivatives at points with
// |Im z| <= max_abs_im_z.
int theta_term_count(Complex q, double max_abs_im_z);

} // namespace detail

} // namespace sigmadet

#endif
