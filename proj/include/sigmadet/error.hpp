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

#ifndef SIGMADET_ERROR_HPP
#define SIGMADET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmadet
{

enum class ErrorKind {
    DegenerateLattice,
    SlowConvergence,
    TooCloseToPole,
    OrderTooLarge,
    StepTooLarge,
    ReciprocalOfZero,
    IntegrateLogTerm,
    Overflow,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure the library reports carries a kind and, where there is one,
// the name/value of the offending argument so callers (the CLI in
// particular) can print a one-line diagnosis.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, std::string argument, const std::string &message);

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }
    const std::string &argument() const noexcept
    {
        return m_argument;
    }

private:
    ErrorKind m_kind;
    std::string m_argument;
};

} // namespace sigmadet

#endif
