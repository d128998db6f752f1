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

#ifndef SIGMADET_SERIES_HPP
#define SIGMADET_SERIES_HPP

// Truncated Laurent series in one variable and the Weierstrass expansions
// around u = 0 in terms of (g2, g3). Coefficients are either floating complex
// numbers or exact Gaussian rationals; the exact flavour makes the
// differential-equation checks come out identically zero.

#include <sigmadet/complex.hpp>
#include <sigmadet/error.hpp>
#include <sigmadet/tolerances.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace sigmadet
{

class Lattice;

using Rational = boost::multiprecision::cpp_rational;

// a + b i with a, b rational.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long long value) : re(value), im(0) {}
    GaussianRational(Rational real, Rational imag = Rational(0)) : re(std::move(real)), im(std::move(imag)) {}

    Complex to_complex() const
    {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend GaussianRational operator-(const GaussianRational &a)
    {
        return {-a.re, -a.im};
    }
    friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &b)
    {
        const Rational norm = b.re * b.re + b.im * b.im;
        if (norm == 0) {
            throw Error(ErrorKind::InvalidArgument, "divisor", "division by exact zero");
        }
        return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
    }
    GaussianRational &operator+=(const GaussianRational &b)
    {
        re += b.re;
        im += b.im;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &b)
    {
        re -= b.re;
        im -= b.im;
        return *this;
    }
};

namespace detail
{

inline Complex as_complex(const Complex &z)
{
    return z;
}
inline Complex as_complex(const GaussianRational &z)
{
    return z.to_complex();
}
template <class T>
T from_int(long long k)
{
    if constexpr (std::is_same_v<T, Complex>) {
        return Complex(static_cast<double>(k), 0.0);
    } else {
        return T(k);
    }
}

} // namespace detail

// sum_k coefficients[k] u^(lowest_order + k) + O(u^truncation_order).
// Leading zeros are stripped on construction; the zero series has no
// coefficients and lowest_order == truncation_order.
template <class T>
class TruncatedSeries
{
public:
    TruncatedSeries() = default;

    TruncatedSeries(int lowest_order, std::vector<T> coefficients)
        : m_lowest(lowest_order), m_coefficients(std::move(coefficients))
    {
        normalize();
    }

    static TruncatedSeries monomial(int power, T coefficient, int truncation_order)
    {
        if (truncation_order <= power) {
            return zero(truncation_order);
        }
        std::vector<T> c(static_cast<std::size_t>(truncation_order - power), detail::from_int<T>(0));
        c[0] = std::move(coefficient);
        return TruncatedSeries(power, std::move(c));
    }

    static TruncatedSeries zero(int truncation_order)
    {
        return TruncatedSeries(truncation_order, {});
    }

    int lowest_order() const noexcept
    {
        return m_lowest;
    }
    int truncation_order() const noexcept
    {
        return m_lowest + static_cast<int>(m_coefficients.size());
    }
    const std::vector<T> &coefficients() const noexcept
    {
        return m_coefficients;
    }
    bool is_zero() const noexcept
    {
        return m_coefficients.empty();
    }

    // Coefficient of u^power; zero below the lowest order.
    T coefficient(int power) const
    {
        if (power >= truncation_order()) {
            throw Error(ErrorKind::InvalidArgument, "power",
                        "u^" + std::to_string(power) + " is at or beyond the truncation order " +
                            std::to_string(truncation_order()));
        }
        if (power < m_lowest) {
            return detail::from_int<T>(0);
        }
        return m_coefficients[static_cast<std::size_t>(power - m_lowest)];
    }

private:
    void normalize()
    {
        const T zero_value = detail::from_int<T>(0);
        std::size_t lead = 0;
        while (lead < m_coefficients.size() && m_coefficients[lead] == zero_value) {
            ++lead;
        }
        if (lead > 0) {
            m_coefficients.erase(m_coefficients.begin(), m_coefficients.begin() + static_cast<std::ptrdiff_t>(lead));
            m_lowest += static_cast<int>(lead);
        }
    }

    int m_lowest = 0;
    std::vector<T> m_coefficients;
};

template <class T>
TruncatedSeries<T> series_add(const TruncatedSeries<T> &a, const TruncatedSeries<T> &b)
{
    const int lo = std::min(a.lowest_order(), b.lowest_order());
    const int hi = std::min(a.truncation_order(), b.truncation_order());
    if (hi <= lo) {
        return TruncatedSeries<T>::zero(hi);
    }
    std::vector<T> c(static_cast<std::size_t>(hi - lo), detail::from_int<T>(0));
    for (int p = lo; p < hi; ++p) {
        c[static_cast<std::size_t>(p - lo)] = a.coefficient(p) + b.coefficient(p);
    }
    return TruncatedSeries<T>(lo, std::move(c));
}

template <class T>
TruncatedSeries<T> series_scale(const TruncatedSeries<T> &a, const T &factor)
{
    std::vector<T> c = a.coefficients();
    for (auto &x : c) {
        x = x * factor;
    }
    if (c.empty()) {
        return a;
    }
    return TruncatedSeries<T>(a.lowest_order(), std::move(c));
}

template <class T>
TruncatedSeries<T> series_sub(const TruncatedSeries<T> &a, const TruncatedSeries<T> &b)
{
    return series_add(a, series_scale(b, detail::from_int<T>(-1)));
}

// Multiplication by u^k.
template <class T>
TruncatedSeries<T> series_shift(const TruncatedSeries<T> &a, int k)
{
    if (a.is_zero()) {
        return TruncatedSeries<T>::zero(a.truncation_order() + k);
    }
    return TruncatedSeries<T>(a.lowest_order() + k, a.coefficients());
}

template <class T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T> &a, const TruncatedSeries<T> &b)
{
    const int lo = a.lowest_order() + b.lowest_order();
    const std::size_t len = std::min(a.coefficients().size(), b.coefficients().size());
    if (len == 0) {
        const int hi = std::min(a.lowest_order() + b.truncation_order(), b.lowest_order() + a.truncation_order());
        return TruncatedSeries<T>::zero(hi);
    }
    const auto &x = a.coefficients();
    const auto &y = b.coefficients();
    std::vector<T> c(len, detail::from_int<T>(0));
    for (std::size_t k = 0; k < len; ++k) {
        T sum = detail::from_int<T>(0);
        for (std::size_t j = 0; j <= k; ++j) {
            sum += x[j] * y[k - j];
        }
        c[k] = std::move(sum);
    }
    return TruncatedSeries<T>(lo, std::move(c));
}

template <class T>
TruncatedSeries<T> series_reciprocal(const TruncatedSeries<T> &a)
{
    if (a.is_zero()) {
        throw Error(ErrorKind::ReciprocalOfZero, "series", "reciprocal of a series that is zero to truncation");
    }
    const auto &x = a.coefficients();
    const std::size_t len = x.size();
    const T inv0 = detail::from_int<T>(1) / x[0];
    std::vector<T> r(len, detail::from_int<T>(0));
    r[0] = inv0;
    for (std::size_t k = 1; k < len; ++k) {
        T sum = detail::from_int<T>(0);
        for (std::size_t j = 1; j <= k; ++j) {
            sum += x[j] * r[k - j];
        }
        r[k] = -(sum * inv0);
    }
    return TruncatedSeries<T>(-a.lowest_order(), std::move(r));
}

template <class T>
TruncatedSeries<T> series_differentiate(const TruncatedSeries<T> &a)
{
    if (a.is_zero()) {
        return TruncatedSeries<T>::zero(a.truncation_order() - 1);
    }
    std::vector<T> c = a.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = c[k] * detail::from_int<T>(a.lowest_order() + static_cast<int>(k));
    }
    return TruncatedSeries<T>(a.lowest_order() - 1, std::move(c));
}

// Antiderivative with zero constant term.
template <class T>
TruncatedSeries<T> series_integrate(const TruncatedSeries<T> &a)
{
    if (a.is_zero()) {
        return TruncatedSeries<T>::zero(a.truncation_order() + 1);
    }
    const T zero_value = detail::from_int<T>(0);
    std::vector<T> c = a.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const int power = a.lowest_order() + static_cast<int>(k);
        if (power == -1) {
            if (!(c[k] == zero_value)) {
                throw Error(ErrorKind::IntegrateLogTerm, "series", "series has a u^-1 term");
            }
            continue;
        }
        c[k] = c[k] / detail::from_int<T>(power + 1);
    }
    return TruncatedSeries<T>(a.lowest_order() + 1, std::move(c));
}

// exp(a) for a series without negative or constant terms.
template <class T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T> &a)
{
    const int hi = a.truncation_order();
    if (!a.is_zero() && a.lowest_order() < 1) {
        throw Error(ErrorKind::InvalidArgument, "series", "series_exp needs a series vanishing at u = 0");
    }
    if (hi <= 0) {
        return TruncatedSeries<T>::zero(hi);
    }
    std::vector<T> f(static_cast<std::size_t>(hi), detail::from_int<T>(0));
    for (int p = std::max(1, a.lowest_order()); p < hi; ++p) {
        f[static_cast<std::size_t>(p)] = a.coefficient(p);
    }
    std::vector<T> e(static_cast<std::size_t>(hi), detail::from_int<T>(0));
    e[0] = detail::from_int<T>(1);
    for (int k = 1; k < hi; ++k) {
        T sum = detail::from_int<T>(0);
        for (int j = 1; j <= k; ++j) {
            sum += detail::from_int<T>(j) * f[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(k - j)];
        }
        e[static_cast<std::size_t>(k)] = sum / detail::from_int<T>(k);
    }
    return TruncatedSeries<T>(0, std::move(e));
}

// pe(u) = u^-2 + sum_{k>=2} c_k u^(2k-2), valid below u^order.
template <class T>
TruncatedSeries<T> pe_series(const T &g2, const T &g3, int order = tolerances.series_order)
{
    if (order < 4) {
        throw Error(ErrorKind::InvalidArgument, "order", "pe_series needs order >= 4");
    }
    const int kmax = (order + 1) / 2; // largest k with 2k - 2 < order
    std::vector<T> c(static_cast<std::size_t>(kmax + 1), detail::from_int<T>(0));
    c[2] = g2 / detail::from_int<T>(20);
    if (kmax >= 3) {
        c[3] = g3 / detail::from_int<T>(28);
    }
    for (int k = 4; k <= kmax; ++k) {
        T sum = detail::from_int<T>(0);
        for (int m = 2; m <= k - 2; ++m) {
            sum += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        }
        c[static_cast<std::size_t>(k)] =
            detail::from_int<T>(3) * sum / detail::from_int<T>(static_cast<long long>(2 * k + 1) * (k - 3));
    }

    std::vector<T> coeffs(static_cast<std::size_t>(order + 2), detail::from_int<T>(0));
    coeffs[0] = detail::from_int<T>(1);
    for (int k = 2; k <= kmax; ++k) {
        coeffs[static_cast<std::size_t>(2 * k - 2 + 2)] = c[static_cast<std::size_t>(k)];
    }
    return TruncatedSeries<T>(-2, std::move(coeffs));
}

// zeta(u) = 1/u - integral(pe - u^-2), valid below u^(order+1).
template <class T>
TruncatedSeries<T> zeta_series(const T &g2, const T &g3, int order = tolerances.series_order)
{
    const auto p = pe_series(g2, g3, order);
    const auto regular = series_sub(p, TruncatedSeries<T>::monomial(-2, detail::from_int<T>(1), p.truncation_order()));
    const auto integral = series_integrate(regular);
    return series_sub(TruncatedSeries<T>::monomial(-1, detail::from_int<T>(1), integral.truncation_order()), integral);
}

// sigma(u) = u exp(integral(zeta - 1/u)), valid below u^(order+3).
template <class T>
TruncatedSeries<T> sigma_series(const T &g2, const T &g3, int order = tolerances.series_order)
{
    const auto z = zeta_series(g2, g3, order);
    const auto regular = series_sub(z, TruncatedSeries<T>::monomial(-1, detail::from_int<T>(1), z.truncation_order()));
    return series_shift(series_exp(series_integrate(regular)), 1);
}

struct SeriesValue {
    Complex value;
    // |last kept nonzero term| at u.
    double tail_bound = 0.0;
};

template <class T>
SeriesValue evaluate_series(const TruncatedSeries<T> &s, Complex u)
{
    if (s.is_zero()) {
        return {Complex{}, 0.0};
    }
    if (u == 0.0 && s.lowest_order() < 0) {
        throw Error(ErrorKind::TooCloseToPole, "u", "series with negative powers evaluated at 0");
    }
    const auto &c = s.coefficients();
    Complex acc{};
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = cmul(acc, u) + detail::as_complex(c[k]);
    }
    const Complex lead = std::pow(u, s.lowest_order());
    std::size_t last = c.size() - 1;
    const T zero_value = detail::from_int<T>(0);
    while (last > 0 && c[last] == zero_value) {
        --last;
    }
    const double tail = std::abs(detail::as_complex(c[last])) *
                        std::pow(std::abs(u), s.lowest_order() + static_cast<int>(last));
    return {acc * lead, tail};
}

template <class T>
TruncatedSeries<Complex> to_complex_series(const TruncatedSeries<T> &s)
{
    std::vector<Complex> c;
    c.reserve(s.coefficients().size());
    for (const auto &x : s.coefficients()) {
        c.push_back(detail::as_complex(x));
    }
    if (c.empty()) {
        return TruncatedSeries<Complex>::zero(s.truncation_order());
    }
    return TruncatedSeries<Complex>(s.lowest_order(), std::move(c));
}

// Radius inside which the series oracle is trusted: a fraction of the
// shortest lattice vector.
double series_trusted_radius(const Lattice &lat);

} // namespace sigmadet

#endif
