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

#ifndef SIGMADET_CLI_COMPLEX_LITERAL_HPP
#define SIGMADET_CLI_COMPLEX_LITERAL_HPP

#include <sigmadet/complex.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace sigmadet::cli
{

// "a+bi" with optional signs and no whitespace: "2", "-i", "0.5-1e-3i",
// "2i". Returns nullopt for anything else, including non-finite parts.
std::optional<Complex> parse_complex(std::string_view text);

// Two comma-separated complex literals, e.g. "2,2i".
std::optional<std::pair<Complex, Complex>> parse_lattice_spec(std::string_view text);

// 17 significant digits per part, in the literal syntax parse_complex reads.
std::string format_complex(Complex z);
std::string format_real(double x);

} // namespace sigmadet::cli

#endif
