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

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace polardeg
{

enum class Measure
{
    MinOverlap,
    PHs,
    PPp,
    PU,
    PPu,
    PLength,
    PPurity,
};

inline constexpr std::size_t kMeasureCount = 7;
inline constexpr std::array<Measure, kMeasureCount> kAllMeasures = {
    Measure::MinOverlap, Measure::PHs, Measure::PPp, Measure::PU, Measure::PPu, Measure::PLength, Measure::PPurity};

// Column name, e.g. "p_hs".
std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

using CellValues = std::array<std::optional<double>, kMeasureCount>;

struct GridCell
{
    double n3 = 0.0;
    double n8 = 0.0;
    bool inside = false;
    CellValues values{};

    std::optional<double> value(Measure m) const { return values[static_cast<std::size_t>(m)]; }
};

// resolution x resolution samples over n3 in [-2/sqrt3, 2/sqrt3], n8 in [-1, 1/2].
// Row-major with n8 as the row index: cells[j * resolution + i] has n8_j and n3_i.
struct TriangleGrid
{
    int resolution = 0;
    std::vector<GridCell> cells;
};

TriangleGrid build_grid(int resolution);

// Values at a single (n3, n8) inside the triangle.
CellValues evaluate_point(double n3, double n8, const std::vector<Measure> &measures);

TriangleGrid evaluate_grid(TriangleGrid grid, const std::vector<Measure> &measures);

// Largest p_hs discrepancy between each inside cell and the five other eigenvalue orderings of
// the same state, each evaluated from scratch.
double check_sixfold_symmetry(const TriangleGrid &grid);

} // namespace polardeg
