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

#include <catch_amalgamated.hpp>

#include "polardeg/errors.hpp"
#include "polardeg/groups.hpp"
#include "polardeg/matrix.hpp"
#include "test_support.hpp"

#include <array>
#include <cmath>

using namespace polardeg;
using polardeg::test::max_diff;
using polardeg::test::random_hermitian;

namespace
{

// Real roots of l^3 + c2 l^2 + c1 l + c0 by bisection between the critical points, descending.
std::array<double, 3> cubic_roots(double c2, double c1, double c0)
{
    auto p = [&](double l) { return ((l + c2) * l + c1) * l + c0; };
    const double disc = std::max(c2 * c2 - 3.0 * c1, 0.0);
    const double s1 = (-c2 - std::sqrt(disc)) / 3.0;
    const double s2 = (-c2 + std::sqrt(disc)) / 3.0;
    const double bound = 1.0 + std::abs(c2) + std::abs(c1) + std::abs(c0);

    auto bisect = [&](double lo, double hi) {
        double plo = p(lo);
        for (int it = 0; it < 200; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            const double pm = p(mid);
            if ((pm <= 0.0) == (plo <= 0.0))
            {
                lo = mid;
                plo = pm;
            }
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    return {bisect(s2, bound), bisect(s1, s2), bisect(-bound, s1)};
}

} // namespace

TEST_CASE("hermitize - Examples")
{
    ComplexMatrix h(2);
    h(0, 0) = 1.0;
    h(0, 1) = complex(0, 1);
    h(1, 0) = complex(0, -1);
    h(1, 1) = 1.0;
    CHECK(max_diff(hermitize(h), h) == 0.0);

    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(0, 1) = complex(0, 2);
    m(1, 1) = 1.0;
    CHECK(max_diff(hermitize(m), h) < 1e-15);

    const ComplexMatrix z(3);
    CHECK(hermitize(z).max_abs() == 0.0);
}

TEST_CASE("ComplexMatrix - Dimension checks")
{
    CHECK_THROWS_AS(ComplexMatrix(4), Error);
    try
    {
        ComplexMatrix bad(1);
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::UnsupportedDim);
    }
    CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(3), Error);
}

TEST_CASE("eig_hermitian - Examples")
{
    const std::array<double, 2> d{0.25, 0.75};
    const auto e = eig_hermitian(ComplexMatrix::diagonal(d));
    CHECK(std::abs(e.values[0] - 0.75) < 1e-15);
    CHECK(std::abs(e.values[1] - 0.25) < 1e-15);
    CHECK(std::abs(e.vectors(1, 0) - 1.0) < 1e-15);

    ComplexMatrix proj(2);
    proj(0, 0) = proj(0, 1) = proj(1, 0) = proj(1, 1) = 0.5;
    const auto p = eig_hermitian(proj);
    CHECK(std::abs(p.values[0] - 1.0) < 1e-15);
    CHECK(std::abs(p.values[1]) < 1e-15);
    CHECK(std::abs(p.vectors(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);

    ComplexMatrix nh(3);
    nh(0, 1) = 1.0;
    try
    {
        eig_hermitian(nh);
        FAIL("expected NotHermitian");
    }
    catch (const Error &err)
    {
        CHECK(err.kind() == ErrorKind::NotHermitian);
    }
}

TEST_CASE("eig_hermitian - Characteristic polynomial oracle")
{
    for (std::uint64_t k = 0; k < 1000; ++k)
    {
        CounterRng rng(11, k);
        const ComplexMatrix h = random_hermitian(3, rng);
        const double c2 = -h.trace().real();
        const double c1 = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0) + h(0, 0) * h(2, 2) - h(0, 2) * h(2, 0) +
                           h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1))
                              .real();
        const double c0 = -determinant(h).real();
        const auto roots = cubic_roots(c2, c1, c0);
        const auto e = eig_hermitian(h);
        for (int i = 0; i < 3; ++i)
            REQUIRE(std::abs(e.values[i] - roots[i]) < 1e-9);
    }
}

TEST_CASE("eig_hermitian - Reconstruction and orthonormality")
{
    for (int dim : {2, 3})
        for (std::uint64_t k = 0; k < 10000; ++k)
        {
            CounterRng rng(dim, k);
            const ComplexMatrix h = random_hermitian(dim, rng);
            const auto e = eig_hermitian(h);
            REQUIRE(max_diff(e.reconstruct(), h) < 1e-10);
            REQUIRE(max_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(dim)) < 1e-10);
            for (int i = 0; i + 1 < dim; ++i)
                REQUIRE(e.values[i] >= e.values[i + 1]);
            const auto fast = eigenvalues_hermitian(h);
            for (int i = 0; i < dim; ++i)
                REQUIRE(std::abs(fast[i] - e.values[i]) < 1e-10);
        }
}

TEST_CASE("eig_hermitian - Degenerate spectra")
{
    const std::array<double, 3> triple{1.0 / 3, 1.0 / 3, 1.0 / 3};
    const auto e = eig_hermitian(ComplexMatrix::diagonal(triple));
    CHECK(max_diff(e.vectors, ComplexMatrix::identity(3)) == 0.0);

    // Rotated double eigenvalues, both ends of the spectrum.
    const auto g = sample_group(3, 20, 5);
    for (const auto &u : g)
        for (const auto &vals : {std::array<double, 3>{0.5, 0.5, 0.0}, std::array<double, 3>{0.6, 0.2, 0.2},
                                 std::array<double, 3>{0.4, 0.3, 0.3}})
        {
            const ComplexMatrix h = u.matrix() * ComplexMatrix::diagonal(vals) * u.matrix().adjoint();
            const auto s = eig_hermitian(hermitize(h));
            REQUIRE(max_diff(s.reconstruct(), h) < 1e-10);
            REQUIRE(max_diff(s.vectors.adjoint() * s.vectors, ComplexMatrix::identity(3)) < 1e-10);
        }
}

TEST_CASE("eig_hermitian - Phase convention")
{
    for (std::uint64_t k = 0; k < 200; ++k)
    {
        CounterRng rng(3, k);
        const auto e = eig_hermitian(random_hermitian(3, rng));
        for (int c = 0; c < 3; ++c)
        {
            int r = 0;
            while (std::abs(e.vectors(r, c)) <= 1e-10)
                ++r;
            REQUIRE(e.vectors(r, c).imag() == 0.0);
            REQUIRE(e.vectors(r, c).real() > 0.0);
        }
    }
}

TEST_CASE("eig_hermitian - Unitary invariance of eigenvalues")
{
    for (int dim : {2, 3})
    {
        const auto g = sample_group(dim, 500, 99);
        for (std::size_t k = 0; k < g.size(); ++k)
        {
            CounterRng rng(21, k);
            const ComplexMatrix h = random_hermitian(dim, rng);
            const ComplexMatrix r = g[k].matrix() * h * g[k].matrix().adjoint();
            const auto a = eig_hermitian(h);
            const auto b = eig_hermitian(hermitize(r));
            for (int i = 0; i < dim; ++i)
                REQUIRE(std::abs(a.values[i] - b.values[i]) < 1e-10);
        }
    }
}

TEST_CASE("trace_product - Examples and conjugation identity")
{
    const ComplexMatrix id3 = ComplexMatrix::identity(3);
    CHECK(std::abs(trace_product(id3, id3) - 3.0) < 1e-15);
    const std::array<double, 2> half{0.5, 0.5};
    const ComplexMatrix rho = ComplexMatrix::diagonal(half);
    CHECK(std::abs(trace_product(rho, rho) - 0.5) < 1e-15);
    CHECK_THROWS_AS(trace_product(ComplexMatrix(2), ComplexMatrix(3)), Error);

    for (int dim : {2, 3})
        for (std::uint64_t k = 0; k < 1000; ++k)
        {
            CounterRng rng(31 + dim, k);
            const ComplexMatrix a = polardeg::test::random_complex(dim, rng);
            const ComplexMatrix b = polardeg::test::random_complex(dim, rng);
            REQUIRE(std::abs(trace_product(a, b) - std::conj(trace_product(b.adjoint(), a.adjoint()))) < 1e-12);
        }
}

TEST_CASE("trace_norm - Examples")
{
    const std::array<double, 2> d2{0.5, -0.5};
    CHECK(std::abs(trace_norm(ComplexMatrix::diagonal(d2)) - 1.0) < 1e-15);
    CHECK(trace_norm(ComplexMatrix(3)) == 0.0);
    const std::array<double, 3> a{0.5, 0.3, 0.2}, b{0.2, 0.3, 0.5};
    CHECK(std::abs(trace_norm(ComplexMatrix::diagonal(a) - ComplexMatrix::diagonal(b)) - 0.6) < 1e-15);

    ComplexMatrix nh(2);
    nh(0, 1) = 1.0;
    CHECK_THROWS_AS(trace_norm(nh), Error);
}

TEST_CASE("determinant - Identity and product rule")
{
    CHECK(std::abs(determinant(ComplexMatrix::identity(3)) - 1.0) == 0.0);
    for (std::uint64_t k = 0; k < 100; ++k)
    {
        CounterRng rng(41, k);
        const ComplexMatrix a = polardeg::test::random_complex(3, rng);
        const ComplexMatrix b = polardeg::test::random_complex(3, rng);
        const complex lhs = determinant(a * b);
        REQUIRE(std::abs(lhs - determinant(a) * determinant(b)) < 1e-10 * std::max(1.0, std::abs(lhs)));
    }
}
