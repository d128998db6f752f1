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

namespace sigmadet
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::DegenerateLattice:
            return "DegenerateLattice";
        case ErrorKind::SlowConvergence:
            return "SlowConvergence";
        case ErrorKind::TooCloseToPole:
            return "TooCloseToPole";
        case ErrorKind::OrderTooLarge:
            return "OrderTooLarge";
        case ErrorKind::StepTooLarge:
            return "StepTooLarge";
        case ErrorKind::ReciprocalOfZero:
            return "ReciprocalOfZero";
        case ErrorKind::IntegrateLogTerm:
            return "IntegrateLogTerm";
        case ErrorKind::Overflow:
            return "Overflow";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string argument, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), m_kind(kind),
      m_argument(std::move(argument))
{
}

} // namespace sigmadet
