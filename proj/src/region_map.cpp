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

#include "polardeg/region_map.hpp"

#include "polardeg/errors.hpp"
#include "polardeg/optimizer.hpp"
#include "polardeg/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polardeg
{

std::string_view measure_name(Measure m)
{
    switch (m)
    {
    case Measure::MinOverlap:
        return "min_overlap";
    case Measure::PHs:
        return "p_hs";
    case Measure::PPp:
        return "p_pp";
    case Measure::PU:
        return "p_u";
    case Measure::PPu:
        return "p_pu";
    case Measure::PLength:
        return "p_length";
    case Measure::PPurity:
        return "p_purity";
    }
    return "";
}

std::optional<Measure> parse_measure(std::string_view name)
{
    for (Measure m : kAllMeasures)
        if (measure_name(m) == name)
            return m;
    return std::nullopt;
}

TriangleGrid build_grid(int resolution)
{
    if (resolution < 2)
        throw Error(ErrorKind::BadResolution, "resolution must be at least 2, got " + std::to_string(resolution));

    const double n3_max = 2.0 / std::sqrt(3.0);
    const double n8_min = -1.0, n8_max = 0.5;
    TriangleGrid grid;
    grid.resolution = resolution;
    grid.cells.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int j = 0; j < resolution; ++j)
    {
        const double n8 = n8_min + (n8_max - n8_min) * j / (resolution - 1);
        for (int i = 0; i < resolution; ++i)
        {
            GridCell cell;
            cell.n3 = -n3_max + 2.0 * n3_max * i / (resolution - 1);
            cell.n8 = n8;
            cell.inside = inside_triangle(cell.n3, cell.n8);
            grid.cells.push_back(cell);
        }
    }
    return grid;
}

CellValues evaluate_point(double n3, double n8, const std::vector<Measure> &measures)
{
    const CoherenceMatrix rho = diagonal_state(n3, n8);
    const DegreeReport report = degree_report(rho);

    CellValues out{};
    for (Measure m : measures)
    {
        double v = 0.0;
        switch (m)
        {
        case Measure::MinOverlap:
            v = degree_hs_analytic(rho).min_overlap;
            break;
        case Measure::PHs:
            v = report.p_hs;
            break;
        case Measure::PPp:
            v = *report.p_pp;
            break;
        case Measure::PU:
            v = *report.p_u;
            break;
        case Measure::PPu:
            v = *report.p_pu;
            break;
        case Measure::PLength:
            v = report.p_length;
            break;
        case Measure::PPurity:
            v = report.p_purity;
            break;
        }
        out[static_cast<std::size_t>(m)] = v;
    }
    return out;
}

TriangleGrid evaluate_grid(TriangleGrid grid, const std::vector<Measure> &measures)
{
    for (auto &cell : grid.cells)
        if (cell.inside)
            cell.values = evaluate_point(cell.n3, cell.n8, measures);
    return grid;
}

double check_sixfold_symmetry(const TriangleGrid &grid)
{
    const double r3 = std::sqrt(3.0);
    double worst = 0.0;
    for (const auto &cell : grid.cells)
    {
        if (!cell.inside)
            continue;
        const auto p_cell = cell.value(Measure::PHs);
        if (!p_cell)
            throw Error(ErrorKind::InvalidArgument, "grid was not evaluated with p_hs");

        // Diagonal entries of the cell state, then every ordering mapped back to (n3, n8).
        std::array<double, 3> d{(1.0 + r3 * cell.n3 + cell.n8) / 3.0, (1.0 - r3 * cell.n3 + cell.n8) / 3.0,
                                (1.0 - 2.0 * cell.n8) / 3.0};
        std::sort(d.begin(), d.end());
        do
        {
            const double n8 = (1.0 - 3.0 * d[2]) / 2.0;
            const double n3 = r3 * (d[0] - d[1]) / 2.0;
            const double p = degree_hs_analytic(diagonal_state(n3, n8)).degree;
            worst = std::max(worst, std::abs(p - *p_cell));
        } while (std::next_permutation(d.begin(), d.end()));
    }
    return worst;
}

} // namespace polardeg
