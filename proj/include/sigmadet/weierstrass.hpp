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

#ifndef SIGMADET_WEIERSTRASS_HPP
#define SIGMADET_WEIERSTRASS_HPP

#include <sigmadet/complex.hpp>
#include <sigmadet/lattice.hpp>
#include <sigmadet/series.hpp>

#include <array>
#include <map>
#include <span>
#include <vector>

namespace sigmadet
{

// pe^(k) as a polynomial in (pe, pe') with pe'-degree at most one and
// coefficients that are rational multiples of g2^a g3^b.
class DerivativePolynomial
{
public:
    // (pe power i, pe' power j, g2 power a, g3 power b)
    using Exponents = std::array<int, 4>;

    // pe itself.
    static DerivativePolynomial identity();

    int order() const noexcept
    {
        return m_order;
    }
    const std::map<Exponents, Rational> &terms() const noexcept
    {
        return m_terms;
    }
    Rational coefficient(int i, int j, int a = 0, int b = 0) const;

    // d/du, using pe'' = 6 pe^2 - g2/2 and pe'^2 = 4 pe^3 - g2 pe - g3.
    DerivativePolynomial differentiate() const;

    // 2i + 3j + 4a + 6b == order + 2 for every term.
    bool weight_consistent() const;

    Complex evaluate(Complex pe, Complex pe_prime, Complex g2, Complex g3) const;

private:
    DerivativePolynomial(int order, std::map<Exponents, Rational> terms);

    int m_order = 0;
    std::map<Exponents, Rational> m_terms;
    // coefficients as doubles, same order as m_terms
    std::vector<std::pair<Exponents, double>> m_numeric;
};

// Memoized; safe to call concurrently. Throws OrderTooLarge above 24.
const DerivativePolynomial &derivative_polynomial(int k);

// Standard Weierstrass functions for the lattice. zeta, pe and pe_prime
// throw TooCloseToPole within rho_min(lat) of a lattice point.
Complex sigma(const Lattice &lat, Complex u);
Complex zeta(const Lattice &lat, Complex u);
Complex pe(const Lattice &lat, Complex u);
Complex pe_prime(const Lattice &lat, Complex u);

// pe^(k)(u), k <= 24.
Complex pe_derivative(const Lattice &lat, Complex u, int k);

// Batched forms; out has the same length as us.
void sigma_batch(const Lattice &lat, std::span<const Complex> us, std::span<Complex> out);
void zeta_batch(const Lattice &lat, std::span<const Complex> us, std::span<Complex> out);

// pe and pe' together.
struct PeJet {
    Complex pe;
    Complex pe_prime;
};
PeJet pe_jet(const Lattice &lat, Complex u);

// Same functions without the pole guard, for probing the Laurent behaviour
// close to lattice points. Still undefined at a lattice point itself.
namespace unchecked
{
Complex zeta(const Lattice &lat, Complex u);
Complex pe(const Lattice &lat, Complex u);
Complex pe_prime(const Lattice &lat, Complex u);
} // namespace unchecked

namespace detail
{
// Theta-quotient evaluation at u itself, skipping argument reduction and the
// quasi-period corrections. Used to cross-check those corrections.
Complex sigma_unreduced(const Lattice &lat, Complex u);
Complex zeta_unreduced(const Lattice &lat, Complex u);
Complex pe_unreduced(const Lattice &lat, Complex u);
} // namespace detail

} // namespace sigmadet

#endif
