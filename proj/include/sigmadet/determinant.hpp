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

#ifndef SIGMADET_DETERMINANT_HPP
#define SIGMADET_DETERMINANT_HPP

#include <sigmadet/complex.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace sigmadet
{

// Dense row-major complex matrix, 1 <= dim <= 16.
class SquareMatrix
{
public:
    explicit SquareMatrix(int dim);

    int dim() const noexcept
    {
        return m_dim;
    }

    Complex &operator()(int row, int col) noexcept
    {
        return m_entries[static_cast<std::size_t>(row * m_dim + col)];
    }
    const Complex &operator()(int row, int col) const noexcept
    {
        return m_entries[static_cast<std::size_t>(row * m_dim + col)];
    }

    void swap_rows(int a, int b) noexcept;
    double max_abs_entry() const noexcept;
    bool all_finite() const noexcept;

private:
    int m_dim;
    std::vector<Complex> m_entries;
};

struct Determinant {
    Complex value;
    // max |pivot| / min |pivot|; infinite when `singular`.
    double condition_estimate = 1.0;
    bool singular = false;
};

// LU with partial pivoting on the largest-modulus entry.
Determinant det(const SquareMatrix &m);

using BigInt = boost::multiprecision::cpp_int;

// prod_{0 <= b < a <= n} (a - b) = prod_{k=1}^{n} k!, for 0 <= n <= 16.
BigInt difference_product_constant(int n);

inline double difference_product_value(int n)
{
    return static_cast<double>(difference_product_constant(n));
}

} // namespace sigmadet

#endif
