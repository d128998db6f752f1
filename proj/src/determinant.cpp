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
#include <sigmadet/tolerances.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sigmadet
{

SquareMatrix::SquareMatrix(int dim) : m_dim(dim)
{
    if (dim < 1 || dim > tolerances.max_determinant_dim) {
        throw Error(ErrorKind::InvalidArgument, "dim",
                    "matrix dimension " + std::to_string(dim) + " outside [1, " +
                        std::to_string(tolerances.max_determinant_dim) + "]");
    }
    m_entries.assign(static_cast<std::size_t>(dim * dim), Complex{});
}

void SquareMatrix::swap_rows(int a, int b) noexcept
{
    for (int c = 0; c < m_dim; ++c) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

double SquareMatrix::max_abs_entry() const noexcept
{
    double best = 0.0;
    for (const auto &z : m_entries) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

bool SquareMatrix::all_finite() const noexcept
{
    return std::all_of(m_entries.begin(), m_entries.end(), [](Complex z) { return is_finite(z); });
}

Determinant det(const SquareMatrix &m)
{
    if (!m.all_finite()) {
        throw Error(ErrorKind::InvalidArgument, "matrix", "matrix has non-finite entries");
    }
    SquareMatrix a = m;
    const int n = a.dim();
    Complex value = 1.0;
    double max_pivot = 0.0;
    double min_pivot = std::numeric_limits<double>::infinity();

    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) {
                best = mag;
                pivot_row = r;
            }
        }
        if (best == 0.0) {
            return {Complex{}, std::numeric_limits<double>::infinity(), true};
        }
        if (pivot_row != col) {
            a.swap_rows(pivot_row, col);
            value = -value;
        }
        const Complex pivot = a(col, col);
        value *= pivot;
        max_pivot = std::max(max_pivot, best);
        min_pivot = std::min(min_pivot, best);
        for (int r = col + 1; r < n; ++r) {
            const Complex factor = a(r, col) / pivot;
            if (factor == 0.0) {
                continue;
            }
            for (int c = col + 1; c < n; ++c) {
                a(r, c) -= cmul(factor, a(col, c));
            }
        }
    }
    return {value, max_pivot / min_pivot, false};
}

BigInt difference_product_constant(int n)
{
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "n", "difference product needs n >= 0");
    }
    if (n > tolerances.max_difference_product_n) {
        throw Error(ErrorKind::Overflow, "n",
                    "difference product constant is capped at n = " +
                        std::to_string(tolerances.max_difference_product_n));
    }
    BigInt product = 1;
    BigInt factorial = 1;
    for (int k = 1; k <= n; ++k) {
        factorial *= k;
        product *= factorial;
    }
    return product;
}

} // namespace sigmadet
