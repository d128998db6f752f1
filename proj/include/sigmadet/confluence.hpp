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

#ifndef SIGMADET_CONFLUENCE_HPP
#define SIGMADET_CONFLUENCE_HPP

// Confluent limit of an alternating determinant. For analytic f_0..f_n,
//
//   lim_{u_b -> u}  |f_a(u_b)| / prod_{a>b}(u_a - u_b)  =  |f_a^(b)(u)| / prod_{a>b}(a - b).
//
// The left side is sampled on the centred stencil u_b = u + (b - n/2) h for a
// few h and extrapolated to h = 0; the right side is evaluated directly from
// exact derivatives. Reversing the stencil flips both numerator and
// denominator by the same sign, so the sampled quotient is even in h and the
// extrapolation runs in h^2.

#include <sigmadet/complex.hpp>
#include <sigmadet/determinant.hpp>
#include <sigmadet/lattice.hpp>

#include <limits>
#include <span>
#include <vector>

namespace sigmadet
{

// Indexed analytic functions with exact derivatives.
class DerivableFamily
{
public:
    virtual ~DerivableFamily() = default;

    // f_alpha^(beta)(x)
    virtual Complex derivative(int alpha, int beta, Complex x) const = 0;

    Complex value(int alpha, Complex x) const
    {
        return derivative(alpha, 0, x);
    }

    // Largest admissible initial step for confluent_limit.
    virtual double max_step() const
    {
        return std::numeric_limits<double>::infinity();
    }

    // Initial step used by campaigns.
    virtual double default_step() const
    {
        return 0.25;
    }
};

// f_alpha(x) = x^alpha.
class PolynomialFamily final : public DerivableFamily
{
public:
    Complex derivative(int alpha, int beta, Complex x) const override;
};

// f_0 = 1, f_alpha = pe^(alpha-1) for alpha >= 1.
class PeFamily final : public DerivableFamily
{
public:
    explicit PeFamily(Lattice lat) : m_lattice(lat) {}

    Complex derivative(int alpha, int beta, Complex x) const override;
    double max_step() const override;
    double default_step() const override
    {
        return max_step();
    }

private:
    Lattice m_lattice;
};

// Entry (a, b) = f_a(u + b h), a, b = 0..n.
SquareMatrix sample_matrix(const DerivableFamily &family, Complex u, int n, double h);

// Entry (a, b) = Delta^b f_a(u) with Delta f(x) = f(x + h) - f(x).
SquareMatrix difference_matrix(const DerivableFamily &family, Complex u, int n, double h);

// Entry (a, b) = f_a^(b)(u).
SquareMatrix derivative_matrix(const DerivableFamily &family, Complex u, int n);

// Value at 0 of the polynomial through (steps[k], values[k]).
Complex extrapolate_to_zero(std::span<const double> steps, std::span<const Complex> values);

struct ConfluenceResult {
    Complex extrapolated;
    Complex direct;
    double agreement = 0.0;
};

// Points u + (b - n/2) h.
std::vector<Complex> confluence_stencil(Complex u, int n, double h);

// direct = |f_a^(b)(u)| / prod(a - b); extrapolated from the sampled quotient
// at h0 / 2^k, k = 0..depth-1. Throws StepTooLarge when h0 exceeds the
// family's max_step().
ConfluenceResult confluent_limit(const DerivableFamily &family, Complex u, int n, double h0);

} // namespace sigmadet

#endif
