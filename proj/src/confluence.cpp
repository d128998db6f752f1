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

#include <sigmadet/confluence.hpp>
#include <sigmadet/error.hpp>
#include <sigmadet/identities.hpp>
#include <sigmadet/tolerances.hpp>
#include <sigmadet/weierstrass.hpp>

#include <cmath>
#include <sstream>
#include <vector>

namespace sigmadet
{

Complex PolynomialFamily::derivative(int alpha, int beta, Complex x) const
{
    if (beta > alpha) {
        return 0.0;
    }
    // alpha! / (alpha - beta)! x^(alpha - beta)
    double falling = 1.0;
    for (int k = 0; k < beta; ++k) {
        falling *= static_cast<double>(alpha - k);
    }
    return falling * std::pow(x, alpha - beta);
}

Complex PeFamily::derivative(int alpha, int beta, Complex x) const
{
    if (alpha == 0) {
        return beta == 0 ? Complex(1.0) : Complex(0.0);
    }
    return pe_derivative(m_lattice, x, alpha - 1 + beta);
}

double PeFamily::max_step() const
{
    return tolerances.confluence_step_fraction * shortest_vector(m_lattice);
}

SquareMatrix sample_matrix(const DerivableFamily &family, Complex u, int n, double h)
{
    SquareMatrix m(n + 1);
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) {
            m(a, b) = family.value(a, u + static_cast<double>(b) * h);
        }
    }
    return m;
}

SquareMatrix difference_matrix(const DerivableFamily &family, Complex u, int n, double h)
{
    SquareMatrix m(n + 1);
    std::vector<Complex> row(static_cast<std::size_t>(n + 1));
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) {
            row[static_cast<std::size_t>(b)] = family.value(a, u + static_cast<double>(b) * h);
        }
        // In-place forward-difference table; after pass b the slot b holds
        // Delta^b f(u).
        for (int b = 0; b <= n; ++b) {
            m(a, b) = row[static_cast<std::size_t>(b)];
            for (int k = n; k > b; --k) {
                row[static_cast<std::size_t>(k)] -= row[static_cast<std::size_t>(k - 1)];
            }
        }
    }
    return m;
}

SquareMatrix derivative_matrix(const DerivableFamily &family, Complex u, int n)
{
    SquareMatrix m(n + 1);
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) {
            m(a, b) = family.derivative(a, b, u);
        }
    }
    return m;
}

Complex extrapolate_to_zero(std::span<const double> steps, std::span<const Complex> values)
{
    if (steps.empty() || steps.size() != values.size()) {
        throw Error(ErrorKind::InvalidArgument, "steps", "extrapolation needs matching non-empty inputs");
    }
    // Neville's scheme evaluated at h = 0.
    std::vector<Complex> p(values.begin(), values.end());
    const std::size_t count = p.size();
    for (std::size_t level = 1; level < count; ++level) {
        for (std::size_t i = 0; i + level < count; ++i) {
            const double hi = steps[i];
            const double hj = steps[i + level];
            p[i] = (hi * p[i + 1] - hj * p[i]) / (hi - hj);
        }
    }
    return p[0];
}

std::vector<Complex> confluence_stencil(Complex u, int n, double h)
{
    std::vector<Complex> points(static_cast<std::size_t>(n + 1));
    for (int b = 0; b <= n; ++b) {
        points[static_cast<std::size_t>(b)] = u + (static_cast<double>(b) - 0.5 * n) * h;
    }
    return points;
}

ConfluenceResult confluent_limit(const DerivableFamily &family, Complex u, int n, double h0)
{
    if (n < 0 || n + 1 > tolerances.max_determinant_dim) {
        throw Error(ErrorKind::InvalidArgument, "n", "confluence order out of range");
    }
    if (!(h0 > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "h0", "initial step must be positive");
    }
    if (h0 > family.max_step()) {
        std::ostringstream msg;
        msg << "initial step " << h0 << " exceeds " << family.max_step();
        throw Error(ErrorKind::StepTooLarge, "h0", msg.str());
    }

    const double constant = difference_product_value(n);
    const int pairs = n * (n + 1) / 2;
    const int depth = tolerances.richardson_depth;
    std::vector<double> steps(static_cast<std::size_t>(depth));
    std::vector<Complex> quotients(static_cast<std::size_t>(depth));
    for (int k = 0; k < depth; ++k) {
        const double h = std::ldexp(h0, -k);
        // prod_{a>b} (u_a - u_b) = prod (a - b) h^(n(n+1)/2); the difference
        // table has the same determinant as the samples
        const Complex f = det(difference_matrix(family, confluence_stencil(u, n, h).front(), n, h)).value;
        steps[static_cast<std::size_t>(k)] = h * h;
        quotients[static_cast<std::size_t>(k)] = f / (constant * std::pow(h, pairs));
    }

    ConfluenceResult r;
    r.extrapolated = extrapolate_to_zero(steps, quotients);
    r.direct = det(derivative_matrix(family, u, n)).value / constant;
    r.agreement = relative_residual(r.extrapolated, r.direct);
    return r;
}

} // namespace sigmadet
