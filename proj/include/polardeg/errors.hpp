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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polardeg
{

enum class ErrorKind
{
    NotHermitian,
    DimMismatch,
    UnsupportedDim,
    NonPositiveTrace,
    NotPositiveSemidefinite,
    OutsideTriangle,
    BadResolution,
    InvalidArgument,
    InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception. what() starts with the kind name
// so that command line messages always name the violated invariant.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &detail);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace polardeg
