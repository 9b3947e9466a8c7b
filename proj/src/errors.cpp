// SPDX-License-Identifier: Apache-2.0
//
// polardeg - operational degrees of polarization for 2D and 3D fields
// Copyright (C) 2026 The polardeg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "polardeg/errors.hpp"

namespace polardeg
{

std::string_view to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::NotHermitian:
        return "NotHermitian";
    case ErrorKind::DimMismatch:
        return "DimMismatch";
    case ErrorKind::UnsupportedDim:
        return "UnsupportedDim";
    case ErrorKind::NonPositiveTrace:
        return "NonPositiveTrace";
    case ErrorKind::NotPositiveSemidefinite:
        return "NotPositiveSemidefinite";
    case ErrorKind::OutsideTriangle:
        return "OutsideTriangle";
    case ErrorKind::BadResolution:
        return "BadResolution";
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    case ErrorKind::InternalConsistency:
        return "InternalConsistency";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
{
}

} // namespace polardeg
