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

#include <sigmadet/error.hpp>
#include <sigmadet/tolerances.hpp>
#include <sigmadet/weierstrass.hpp>

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace sigmadet
{

DerivativePolynomial::DerivativePolynomial(int order, std::map<Exponents, Rational> terms)
    : m_order(order), m_terms(std::move(terms))
{
    m_numeric.reserve(m_terms.size());
    for (const auto &[e, c] : m_terms) {
        m_numeric.emplace_back(e, static_cast<double>(c));
    }
}

DerivativePolynomial DerivativePolynomial::identity()
{
    return DerivativePolynomial(0, {{Exponents{1, 0, 0, 0}, Rational(1)}});
}

Rational DerivativePolynomial::coefficient(int i, int j, int a, int b) const
{
    const auto it = m_terms.find(Exponents{i, j, a, b});
    return it == m_terms.end() ? Rational(0) : it->second;
}

DerivativePolynomial DerivativePolynomial::differentiate() const
{
    std::map<Exponents, Rational> out;
    const auto add = [&out](int i, int j, int a, int b, const Rational &c) {
        if (c == 0) {
            return;
        }
        auto &slot = out[Exponents{i, j, a, b}];
        slot += c;
        if (slot == 0) {
            out.erase(Exponents{i, j, a, b});
        }
    };
    for (const auto &[e, c] : m_terms) {
        const auto [i, j, a, b] = e;
        if (j == 0) {
            // d(pe^i) = i pe^(i-1) pe'
            if (i > 0) {
                add(i - 1, 1, a, b, c * i);
            }
        } else {
            // d(pe^i pe') = i pe^(i-1) pe'^2 + pe^i pe''
            //            = i pe^(i-1) (4 pe^3 - g2 pe - g3) + pe^i (6 pe^2 - g2/2)
            if (i > 0) {
                add(i + 2, 0, a, b, c * (4 * i));
                add(i, 0, a + 1, b, -c * i);
                add(i - 1, 0, a, b + 1, -c * i);
            }
            add(i + 2, 0, a, b, c * 6);
            add(i, 0, a + 1, b, -c / 2);
        }
    }
    return DerivativePolynomial(m_order + 1, std::move(out));
}

bool DerivativePolynomial::weight_consistent() const
{
    for (const auto &[e, c] : m_terms) {
        if (2 * e[0] + 3 * e[1] + 4 * e[2] + 6 * e[3] != m_order + 2) {
            return false;
        }
    }
    return true;
}

Complex DerivativePolynomial::evaluate(Complex pe, Complex pe_prime, Complex g2, Complex g3) const
{
    // Powers are small (pe^13 at k = 24), so tabulate them once.
    int max_i = 0, max_a = 0, max_b = 0;
    for (const auto &[e, c] : m_numeric) {
        max_i = std::max(max_i, e[0]);
        max_a = std::max(max_a, e[2]);
        max_b = std::max(max_b, e[3]);
    }
    const auto powers = [](Complex x, int n) {
        std::vector<Complex> p(static_cast<std::size_t>(n + 1));
        p[0] = 1.0;
        for (int k = 1; k <= n; ++k) {
            p[static_cast<std::size_t>(k)] = cmul(p[static_cast<std::size_t>(k - 1)], x);
        }
        return p;
    };
    const auto pp = powers(pe, max_i);
    const auto p2 = powers(g2, max_a);
    const auto p3 = powers(g3, max_b);

    Complex sum{};
    for (const auto &[e, c] : m_numeric) {
        Complex t = c * cmul(pp[static_cast<std::size_t>(e[0])],
                             cmul(p2[static_cast<std::size_t>(e[2])], p3[static_cast<std::size_t>(e[3])]));
        if (e[1] == 1) {
            t = cmul(t, pe_prime);
        }
        sum += t;
    }
    return sum;
}

namespace
{

struct DerivativeTable {
    std::shared_mutex mutex;
    std::map<int, std::unique_ptr<const DerivativePolynomial>> entries;
};

DerivativeTable &derivative_table()
{
    static DerivativeTable table;
    return table;
}

} // namespace

const DerivativePolynomial &derivative_polynomial(int k)
{
    if (k < 0) {
        throw Error(ErrorKind::InvalidArgument, "k", "derivative order must be non-negative");
    }
    if (k > tolerances.max_derivative_order) {
        throw Error(ErrorKind::OrderTooLarge, "k",
                    "derivative order " + std::to_string(k) + " exceeds " +
                        std::to_string(tolerances.max_derivative_order));
    }
    auto &table = derivative_table();
    {
        std::shared_lock lock(table.mutex);
        const auto it = table.entries.find(k);
        if (it != table.entries.end()) {
            return *it->second;
        }
    }
    // Build outside the lock; entries are deterministic so a concurrent
    // builder producing the same value is harmless.
    DerivativePolynomial p = DerivativePolynomial::identity();
    for (int step = 0; step < k; ++step) {
        p = p.differentiate();
    }
    std::unique_lock lock(table.mutex);
    auto [it, inserted] = table.entries.try_emplace(k, std::make_unique<const DerivativePolynomial>(std::move(p)));
    return *it->second;
}

} // namespace sigmadet
