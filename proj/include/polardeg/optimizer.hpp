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

#include "polardeg/groups.hpp"
#include "polardeg/polarization.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <utility>

namespace polardeg
{

// inf_g Tr(rho rho_g) together with the resulting Hilbert-Schmidt degree,
// degree^2 = Tr(rho^2) - min_overlap.
struct MinimizationResult
{
    double min_overlap = 0.0;
    GroupElement argmin = GroupElement::identity(2);
    double degree = 0.0;
    Method method = Method::Analytic;
    int refinement_steps = 0;
};

struct OracleOptions
{
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    int sweeps = 20;
    int line_search_iterations = 40;
    int line_scan_points = 16;
    unsigned threads = 0; // 0: hardware concurrency
};

// (1/2) Tr[(a - b)^2]
double hs_distance_sq(const CoherenceMatrix &a, const CoherenceMatrix &b);

// Pairs the sorted eigenvalues in reversed order: min_overlap = sum_i l_i l_{n-1-i}, degree = l_1 - l_n.
MinimizationResult degree_hs_analytic(const CoherenceMatrix &rho);

// Brute-force minimization of Tr(rho rho_g): best of `samples` uniform Euler-angle draws, then cyclic
// coordinate descent over the angles. Each line search scans the full range of its coordinate
// and polishes the best scan point with golden-section iterations; each sweep ends with a pattern
// move along its net displacement. Only improvements are accepted, so more sweeps never raise the result.
MinimizationResult degree_hs_oracle(const CoherenceMatrix &rho, const OracleOptions &options);
MinimizationResult degree_hs_oracle(const CoherenceMatrix &rho, std::size_t samples, std::uint64_t seed,
                                    int refine_steps);

// (1/2) Tr|rho - rho_g*| at the analytic Hilbert-Schmidt argmin g*.
double degree_trace_distance(const CoherenceMatrix &rho);

struct TraceDistanceSearch
{
    double max_distance = 0.0; // sup_g (1/2) Tr|rho - rho_g| over the explored elements
    GroupElement argmax = GroupElement::identity(2);
    int refinement_steps = 0;
};

// Oracle on the trace objective. The distance is maximized: g = identity gives distance 0, so the
// degree is the supremum over the group.
TraceDistanceSearch trace_distance_oracle(const CoherenceMatrix &rho, const OracleOptions &options);

enum class Zone
{
    Zone1,
    Zone2,
    Zone3,
    Degenerate
};

const char *to_string(Zone z);

struct ZoneClassification
{
    double x = 0.0; // n8 / n3, +-infinity when n3 = 0
    Zone zone = Zone::Degenerate;
    double theta = 0.0;
    std::array<double, 3> beta_angles{};
};

// Positivity triangle of diagonal states in the (n3, n8) plane. Points within 1e-12 of an edge
// count as inside.
bool inside_triangle(double n3, double n8);

// Diagonal 3x3 state with Stokes components n3, n8 and zeros elsewhere.
CoherenceMatrix diagonal_state(double n3, double n8);

ZoneClassification classify_zone(double n3, double n8);

// [[cos t, -sin t], [sin t, cos t]] * diag(-1, 1) applied to (n3, n8).
std::pair<double, double> overlap_transform(double n3, double n8, double theta);

// su3_from_euler with the zone's (b1, b2, b3) and all other angles zero.
GroupElement zone_element(const ZoneClassification &zc);

} // namespace polardeg
