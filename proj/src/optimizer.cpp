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

#include "polardeg/optimizer.hpp"

#include "polardeg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

namespace polardeg
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kTriangleTol = 1e-12;

using Angles = std::array<double, 8>;
using Objective = std::function<double(const Angles &)>;

ComplexMatrix group_matrix(int dim, const Angles &a)
{
    return dim == 2 ? su2_matrix(a[0], a[1], a[2]) : su3_matrix(a);
}

GroupElement group_element(int dim, const Angles &a)
{
    if (dim == 2)
        return su2_from_euler(EulerSU2(a[0], a[1], a[2]));
    return su3_from_euler(EulerSU3(a));
}

struct SearchResult
{
    double value = 0.0;
    Angles angles{};
    int sweeps = 0;
};

struct Candidate
{
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
};

// Minimum over sample indices, ties broken by the lowest index, independent of the thread count.
Candidate best_sample(int dim, const Objective &f, const OracleOptions &opt)
{
    const std::size_t n = opt.samples;
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 1024)));

    auto scan = [&](std::size_t begin, std::size_t end) {
        Candidate best;
        for (std::size_t i = begin; i < end; ++i)
        {
            Angles a{};
            if (dim == 2)
            {
                const auto s = sample_su2_angles(opt.seed, i);
                std::copy(s.begin(), s.end(), a.begin());
            }
            else
            {
                a = sample_su3_angles(opt.seed, i);
            }
            const double v = f(a);
            if (v < best.value)
                best = {v, i};
        }
        return best;
    };

    if (threads <= 1)
        return scan(0, n);

    std::vector<Candidate> partial(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { partial[t] = scan(n * t / threads, n * (t + 1) / threads); });
    }
    Candidate best;
    for (const auto &c : partial) // chunks are in index order
        if (c.value < best.value)
            best = c;
    return best;
}

double golden_section(const std::function<double(double)> &g, double lo, double hi, int iterations, double &x_best)
{
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int k = 0; k < iterations; ++k)
    {
        if (f1 <= f2)
        {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = g(x1);
        }
        else
        {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = g(x2);
        }
    }
    if (f1 <= f2)
    {
        x_best = x1;
        return f1;
    }
    x_best = x2;
    return f2;
}

SearchResult minimize(int dim, const Objective &f, const OracleOptions &opt)
{
    if (opt.samples < 1)
        throw Error(ErrorKind::InvalidArgument, "oracle needs at least one sample");

    SearchResult res;
    const Candidate start = best_sample(dim, f, opt);
    if (dim == 2)
    {
        const auto s = sample_su2_angles(opt.seed, start.index);
        std::copy(s.begin(), s.end(), res.angles.begin());
    }
    else
    {
        res.angles = sample_su3_angles(opt.seed, start.index);
    }
    res.value = start.value;

    std::array<double, 8> widths{};
    std::size_t coords = 0;
    if (dim == 2)
    {
        const auto w = su2_angle_ranges();
        std::copy(w.begin(), w.end(), widths.begin());
        coords = 3;
    }
    else
    {
        widths = su3_angle_ranges();
        coords = 8;
    }

    const int scan_points = std::max(opt.line_scan_points, 2);
    for (int sweep = 1; sweep <= opt.sweeps; ++sweep)
    {
        const Angles before = res.angles;
        bool improved = false;
        for (std::size_t c = 0; c < coords; ++c)
        {
            Angles trial = res.angles;
            auto along = [&](double x) {
                trial[c] = x;
                return f(trial);
            };

            const double x0 = res.angles[c];
            const double step = widths[c] / scan_points;
            double x_scan = x0, f_scan = res.value;
            for (int k = 1; k < scan_points; ++k)
            {
                const double x = x0 + k * step;
                const double v = along(x);
                if (v < f_scan)
                {
                    f_scan = v;
                    x_scan = x;
                }
            }
            double x_gold = x_scan;
            const double f_gold =
                golden_section(along, x_scan - step, x_scan + step, opt.line_search_iterations, x_gold);

            const double f_new = std::min(f_gold, f_scan);
            if (f_new < res.value)
            {
                res.angles[c] = f_gold <= f_scan ? x_gold : x_scan;
                res.value = f_new;
                improved = true;
            }
        }

        // Pattern move along the net displacement of the sweep.
        if (improved)
        {
            Angles trial{};
            auto along = [&](double t) {
                for (std::size_t c = 0; c < coords; ++c)
                    trial[c] = res.angles[c] + t * (res.angles[c] - before[c]);
                return f(trial);
            };
            double t_best = 0.0, f_best = res.value;
            for (double t = 1.0; t <= 1024.0; t *= 2.0)
            {
                const double v = along(t);
                if (v < f_best)
                {
                    f_best = v;
                    t_best = t;
                }
            }
            if (t_best > 0.0)
            {
                double t_gold = t_best;
                const double f_gold =
                    golden_section(along, 0.5 * t_best, 2.0 * t_best, opt.line_search_iterations, t_gold);
                const double t = f_gold < f_best ? t_gold : t_best;
                along(t);
                res.angles = trial;
                res.value = std::min(f_gold, f_best);
            }
        }
        res.sweeps = sweep;
        if (!improved)
            break;
    }
    return res;
}

double overlap_objective(const CoherenceMatrix &rho, const ComplexMatrix &u)
{
    const ComplexMatrix &m = rho.matrix();
    return trace_product(m, u * m * u.adjoint()).real();
}

ComplexMatrix reversal_matrix(int dim)
{
    ComplexMatrix q(dim);
    if (dim == 2)
    {
        q(1, 0) = 1.0;
        q(0, 1) = -1.0;
    }
    else
    {
        q(2, 0) = -1.0;
        q(1, 1) = -1.0;
        q(0, 2) = -1.0;
    }
    return q;
}

} // namespace

double hs_distance_sq(const CoherenceMatrix &a, const CoherenceMatrix &b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimMismatch, "coherence matrices of different dimension");
    const ComplexMatrix diff = a.matrix() - b.matrix();
    return std::max(0.0, 0.5 * trace_product(diff, diff).real());
}

MinimizationResult degree_hs_analytic(const CoherenceMatrix &rho)
{
    const int n = rho.dim();
    const auto l = rho.eigenvalues();

    MinimizationResult res;
    res.method = Method::Analytic;
    res.min_overlap = 0.0;
    for (int i = 0; i < n; ++i)
        res.min_overlap += l[i] * l[n - 1 - i];
    res.degree = clamp_degree(l[0] - l[n - 1]);

    if (l[0] - l[n - 1] < tol::degen_gap)
    {
        res.argmin = GroupElement::identity(n);
        return res;
    }
    // g = V Q V^dagger maps eigenvector k onto eigenvector n-1-k.
    const ComplexMatrix &v = rho.eigen().vectors;
    res.argmin = GroupElement(v * reversal_matrix(n) * v.adjoint());
    return res;
}

MinimizationResult degree_hs_oracle(const CoherenceMatrix &rho, const OracleOptions &options)
{
    const int dim = rho.dim();
    const Objective f = [&](const Angles &a) { return overlap_objective(rho, group_matrix(dim, a)); };
    const SearchResult s = minimize(dim, f, options);

    MinimizationResult res;
    res.method = Method::Oracle;
    res.min_overlap = s.value;
    res.argmin = group_element(dim, s.angles);
    res.refinement_steps = s.sweeps;
    const double d2 = purity(rho) - s.value;
    res.degree = clamp_degree(std::sqrt(std::max(d2, 0.0)));
    return res;
}

MinimizationResult degree_hs_oracle(const CoherenceMatrix &rho, std::size_t samples, std::uint64_t seed,
                                    int refine_steps)
{
    OracleOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.sweeps = refine_steps;
    return degree_hs_oracle(rho, opt);
}

double degree_trace_distance(const CoherenceMatrix &rho)
{
    const auto g = degree_hs_analytic(rho).argmin;
    const ComplexMatrix &u = g.matrix();
    const ComplexMatrix diff = rho.matrix() - u * rho.matrix() * u.adjoint();
    return clamp_degree(0.5 * trace_norm(hermitize(diff)));
}

TraceDistanceSearch trace_distance_oracle(const CoherenceMatrix &rho, const OracleOptions &options)
{
    const int dim = rho.dim();
    const Objective f = [&](const Angles &a) {
        const ComplexMatrix u = group_matrix(dim, a);
        const auto e = eigenvalues_hermitian(hermitize(rho.matrix() - u * rho.matrix() * u.adjoint()));
        double s = 0.0;
        for (int i = 0; i < dim; ++i)
            s += std::abs(e[i]);
        return -0.5 * s;
    };
    const SearchResult s = minimize(dim, f, options);

    TraceDistanceSearch res;
    res.max_distance = -s.value;
    res.argmax = group_element(dim, s.angles);
    res.refinement_steps = s.sweeps;
    return res;
}

const char *to_string(Zone z)
{
    switch (z)
    {
    case Zone::Zone1:
        return "zone1";
    case Zone::Zone2:
        return "zone2";
    case Zone::Zone3:
        return "zone3";
    case Zone::Degenerate:
        return "degenerate";
    }
    return "unknown";
}

bool inside_triangle(double n3, double n8)
{
    const double r3 = std::sqrt(3.0);
    if (n8 < -1.0 - kTriangleTol || n8 > 0.5 + kTriangleTol)
        return false;
    const double lower = std::max(-(1.0 + n8) / r3, -(2.0 - n8) / r3);
    const double upper = std::min((1.0 + n8) / r3, (2.0 - n8) / r3);
    return n3 >= lower - kTriangleTol && n3 <= upper + kTriangleTol;
}

CoherenceMatrix diagonal_state(double n3, double n8)
{
    StokesVector n(3);
    n[2] = n3;
    n[7] = n8;
    return from_stokes(n);
}

ZoneClassification classify_zone(double n3, double n8)
{
    if (!inside_triangle(n3, n8))
        throw Error(ErrorKind::OutsideTriangle,
                    "(n3, n8) = (" + std::to_string(n3) + ", " + std::to_string(n8) + ") violates positivity");

    const double limit = 1.0 / std::sqrt(3.0);
    ZoneClassification zc;
    if (std::abs(n3) <= kTriangleTol)
    {
        // Two equal eigenvalues: the largest is exchanged with the smallest.
        zc.x = n8 >= 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
        zc.zone = Zone::Degenerate;
        zc.theta = 2.0 * kPi / 3.0;
        zc.beta_angles = {kPi, kPi, kPi};
        return zc;
    }

    zc.x = n8 / n3;
    if (zc.x > limit)
    {
        zc.zone = Zone::Zone1;
        zc.theta = 2.0 * kPi / 3.0;
        zc.beta_angles = {kPi, kPi, kPi};
    }
    else if (zc.x < -limit)
    {
        zc.zone = Zone::Zone3;
        zc.theta = -2.0 * kPi / 3.0;
        zc.beta_angles = {0.0, 0.0, kPi};
    }
    else
    {
        zc.zone = Zone::Zone2;
        zc.theta = 0.0;
        zc.beta_angles = {0.0, kPi, 0.0};
    }
    return zc;
}

std::pair<double, double> overlap_transform(double n3, double n8, double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    return {-c * n3 - s * n8, -s * n3 + c * n8};
}

GroupElement zone_element(const ZoneClassification &zc)
{
    return su3_from_euler(EulerSU3::from_betas(zc.beta_angles[0], zc.beta_angles[1], zc.beta_angles[2]));
}

} // namespace polardeg
