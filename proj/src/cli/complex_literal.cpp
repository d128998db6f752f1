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

#include <sigmadet/cli/complex_literal.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>

namespace sigmadet::cli
{

namespace
{

// Signed decimal; an empty magnitude ("", "+", "-") means 1 when allowed.
std::optional<double> parse_part(std::string_view text, bool unit_allowed)
{
    double sign = 1.0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        sign = text.front() == '-' ? -1.0 : 1.0;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return unit_allowed ? std::optional<double>(sign) : std::nullopt;
    }
    if (text.front() == '+' || text.front() == '-') {
        return std::nullopt;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return sign * value;
}

} // namespace

std::optional<Complex> parse_complex(std::string_view text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    for (const char c : text) {
        if (c == ' ' || c == '\t') {
            return std::nullopt;
        }
    }
    if (text.back() != 'i') {
        const auto re = parse_part(text, false);
        return re ? std::optional<Complex>(Complex(*re, 0.0)) : std::nullopt;
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // The imaginary part starts at the last sign that is neither leading nor
    // an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        const auto im = parse_part(body, true);
        return im ? std::optional<Complex>(Complex(0.0, *im)) : std::nullopt;
    }
    const auto re = parse_part(body.substr(0, split), false);
    const auto im = parse_part(body.substr(split), true);
    if (!re || !im) {
        return std::nullopt;
    }
    return Complex(*re, *im);
}

std::optional<std::pair<Complex, Complex>> parse_lattice_spec(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        return std::nullopt;
    }
    const auto a = parse_complex(text.substr(0, comma));
    const auto b = parse_complex(text.substr(comma + 1));
    if (!a || !b) {
        return std::nullopt;
    }
    return std::make_pair(*a, *b);
}

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(Complex z)
{
    std::string out = format_real(z.real());
    const std::string im = format_real(z.imag());
    if (im.front() != '-') {
        out += '+';
    }
    out += im;
    out += 'i';
    return out;
}

} // namespace sigmadet::cli
