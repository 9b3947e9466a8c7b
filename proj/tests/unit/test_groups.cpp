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
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace polardeg;
using polardeg::test::max_diff;

namespace
{

constexpr double kPi = std::numbers::pi;

// Measured once over seed 1 with 1e5 samples; Haar measure would give 1.
constexpr double kEulerUniformTraceMoment = 1.2466;

} // namespace

TEST_CASE("su2_from_euler - Examples")
{
    CHECK(max_diff(su2_from_euler(EulerSU2(0, 0, 0)).matrix(), ComplexMatrix::identity(2)) < 1e-15);

    ComplexMatrix flip(2);
    flip(0, 1) = -1.0;
    flip(1, 0) = 1.0;
    CHECK(max_diff(su2_from_euler(EulerSU2(0, kPi, 0)).matrix(), flip) < 1e-15);

    for (std::uint64_t k = 0; k < 1000; ++k)
    {
        const auto a = sample_su2_angles(5, k);
        const auto g = su2_from_euler(EulerSU2(a[0], a[1], a[2]));
        REQUIRE(std::abs(determinant(g.matrix()) - 1.0) < 1e-10);
    }
}

TEST_CASE("EulerSU2 - Canonical ranges without changing the element")
{
    for (std::uint64_t k = 0; k < 2000; ++k)
    {
        CounterRng rng(6, k);
        const double a = 40.0 * (rng.uniform() - 0.5);
        const double b = 40.0 * (rng.uniform() - 0.5);
        const double c = 40.0 * (rng.uniform() - 0.5);
        const EulerSU2 e(a, b, c);
        REQUIRE(e.alpha() >= 0.0);
        REQUIRE(e.alpha() < 4.0 * kPi);
        REQUIRE(e.beta() >= 0.0);
        REQUIRE(e.beta() <= kPi);
        REQUIRE(e.gamma() >= 0.0);
        REQUIRE(e.gamma() < 2.0 * kPi);
        REQUIRE(max_diff(su2_matrix(e.alpha(), e.beta(), e.gamma()), su2_matrix(a, b, c)) < 1e-10);
    }
}

TEST_CASE("EulerSU3 - Reduction keeps the element")
{
    for (std::uint64_t k = 0; k < 2000; ++k)
    {
        CounterRng rng(7, k);
        std::array<double, 8> raw{};
        for (auto &x : raw)
            x = 60.0 * (rng.uniform() - 0.5);
        const EulerSU3 e(raw);
        const auto w = su3_angle_ranges();
        for (std::size_t i = 0; i < 8; ++i)
            REQUIRE((e[i] >= 0.0 && e[i] < 4.0 * kPi));
        REQUIRE(e[EulerSU3::Alpha1] < 2.0 * kPi);
        REQUIRE(e[EulerSU3::Gamma1] < 2.0 * kPi);
        REQUIRE(w[EulerSU3::Gamma2] == 4.0 * kPi);
        REQUIRE(max_diff(su3_matrix(e.angles()), su3_matrix(raw)) < 1e-10);
    }
}

TEST_CASE("su3_from_euler - Examples")
{
    CHECK(max_diff(su3_from_euler(EulerSU3()).matrix(), ComplexMatrix::identity(3)) < 1e-15);

    std::array<double, 8> a{};
    a[EulerSU3::Gamma1] = 0.3;
    a[EulerSU3::Gamma2] = 1.1;
    ComplexMatrix phi(3);
    phi(0, 0) = std::polar(1.0, -0.6);
    phi(1, 1) = std::polar(1.0, 0.3 - 0.55);
    phi(2, 2) = std::polar(1.0, 0.3 + 0.55);
    CHECK(max_diff(su3_from_euler(EulerSU3(a)).matrix(), phi) < 1e-15);

    ComplexMatrix t12(3);
    t12(0, 1) = -1.0;
    t12(1, 0) = 1.0;
    t12(2, 2) = 1.0;
    CHECK(max_diff(su3_from_euler(EulerSU3::from_betas(0, kPi, 0)).matrix(), t12) < 1e-15);
}

TEST_CASE("su3_from_euler - T12 embeds the SU(2) matrix")
{
    for (std::uint64_t k = 0; k < 500; ++k)
    {
        CounterRng rng(8, k);
        const double alpha = 2.0 * kPi * rng.uniform();
        const double beta = kPi * rng.uniform();
        std::array<double, 8> a{};
        a[EulerSU3::Alpha2] = alpha;
        a[EulerSU3::Beta2] = beta;
        const ComplexMatrix u3 = su3_matrix(a);
        const ComplexMatrix u2 = su2_matrix(alpha, beta, -alpha);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                REQUIRE(std::abs(u3(i, j) - u2(i, j)) < 1e-15);
        REQUIRE(std::abs(u3(2, 2) - 1.0) < 1e-15);
        REQUIRE(std::abs(u3(0, 2)) + std::abs(u3(1, 2)) + std::abs(u3(2, 0)) + std::abs(u3(2, 1)) == 0.0);
    }
}

TEST_CASE("GroupElement - Validation")
{
    ComplexMatrix notu(2);
    notu(0, 0) = 2.0;
    notu(1, 1) = 0.5;
    CHECK_THROWS_AS(GroupElement(notu), Error);

    ComplexMatrix u1(2);
    u1(0, 0) = complex(0, 1);
    u1(1, 1) = 1.0;
    CHECK_THROWS_AS(GroupElement(u1), Error);

    CHECK_NOTHROW(GroupElement(ComplexMatrix::identity(3)));
}

TEST_CASE("conjugate - Examples")
{
    CounterRng rng(9, 0);
    const CoherenceMatrix rho = random_coherence(3, rng);
    CHECK(max_diff(conjugate(rho, GroupElement::identity(3)).matrix(), rho.matrix()) < 1e-15);

    const std::array<double, 3> d{0.5, 0.3, 0.2};
    const CoherenceMatrix diag = make_coherence(ComplexMatrix::diagonal(d));
    const CoherenceMatrix swapped = conjugate(diag, su3_from_euler(EulerSU3::from_betas(0, kPi, 0)));
    CHECK(std::abs(swapped.matrix()(0, 0) - 0.3) < 1e-15);
    CHECK(std::abs(swapped.matrix()(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(swapped.matrix()(2, 2) - 0.2) < 1e-15);
    const CoherenceMatrix swapped23 = conjugate(diag, su3_from_euler(EulerSU3::from_betas(0, 0, kPi)));
    CHECK(std::abs(swapped23.matrix()(1, 1) - 0.2) < 1e-15);
    CHECK(std::abs(swapped23.matrix()(2, 2) - 0.3) < 1e-15);

    CHECK_THROWS_AS(conjugate(rho, GroupElement::identity(2)), Error);

    const auto g = sample_group(3, 1000, 10);
    for (std::size_t k = 0; k < g.size(); ++k)
    {
        CounterRng r(10, k);
        const CoherenceMatrix s = random_coherence(3, r);
        const CoherenceMatrix sg = conjugate(s, g[k]);
        REQUIRE(std::abs(purity(s) - purity(sg)) < 1e-10);
        for (int i = 0; i < 3; ++i)
            REQUIRE(std::abs(s.eigenvalues()[i] - sg.eigenvalues()[i]) < 1e-10);
        REQUIRE(max_diff(conjugate(sg, g[k].inverse()).matrix(), s.matrix()) < 1e-10);
    }
}

TEST_CASE("adjoint_on_stokes - Examples")
{
    const std::array<double, 3> up{0, 0, 1};
    const StokesVector n(2, up);
    const StokesVector same = adjoint_on_stokes(n, GroupElement::identity(2));
    for (std::size_t r = 0; r < 3; ++r)
        CHECK(std::abs(same[r] - n[r]) < 1e-15);

    const StokesVector flipped = adjoint_on_stokes(n, su2_from_euler(EulerSU2(0, kPi, 0)));
    CHECK(std::abs(flipped[0]) < 1e-15);
    CHECK(std::abs(flipped[1]) < 1e-15);
    CHECK(std::abs(flipped[2] + 1.0) < 1e-15);

    for (int dim : {2, 3})
    {
        const auto g = sample_group(dim, 500, 11);
        for (std::size_t k = 0; k < g.size(); ++k)
        {
            CounterRng r(11 + dim, k);
            const StokesVector s = to_stokes(random_coherence(dim, r));
            REQUIRE(std::abs(adjoint_on_stokes(s, g[k]).norm() - s.norm()) < 1e-10);
        }
    }
}

TEST_CASE("sample_group - Determinism, ranges and closure")
{
    const auto a = sample_group(3, 5, 42), b = sample_group(3, 5, 42);
    REQUIRE(a.size() == 5);
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(max_diff(a[k].matrix(), b[k].matrix()) == 0.0);
    const auto c = sample_group(3, 5, 43);
    CHECK(max_diff(a[0].matrix(), c[0].matrix()) > 0.0);

    // Sample i does not depend on how many were drawn.
    const auto longer = sample_group(3, 50, 42);
    CHECK(max_diff(longer[4].matrix(), a[4].matrix()) == 0.0);

    for (std::uint64_t k = 0; k < 1000; ++k)
    {
        const auto s2 = sample_su2_angles(3, k);
        REQUIRE((s2[0] >= 0.0 && s2[0] < 4.0 * kPi && s2[1] >= 0.0 && s2[1] <= kPi && s2[2] >= 0.0 &&
                 s2[2] < 2.0 * kPi));
        const auto s3 = sample_su3_angles(3, k);
        const auto w = su3_angle_ranges();
        for (std::size_t i = 0; i < 8; ++i)
            REQUIRE((s3[i] >= 0.0 && s3[i] < w[i]));
    }

    for (int dim : {2, 3})
    {
        const auto g = sample_group(dim, 1000, 12);
        for (std::size_t k = 0; k + 1 < g.size(); ++k)
        {
            const ComplexMatrix &u = g[k].matrix();
            REQUIRE(max_diff(u * u.adjoint(), ComplexMatrix::identity(dim)) < 1e-10);
            const GroupElement p = g[k] * g[k + 1];
            REQUIRE(max_diff(p.matrix() * p.matrix().adjoint(), ComplexMatrix::identity(dim)) < 1e-10);
            REQUIRE(std::abs(determinant(p.matrix()) - 1.0) < 1e-10);
        }
    }
    CHECK_THROWS_AS(sample_group(4, 1, 0), Error);
}

TEST_CASE("sample_group - Frozen trace moment of the Euler-uniform sampler")
{
    const auto g = sample_group(3, 100000, 1);
    double s = 0.0;
    for (const auto &u : g)
        s += std::norm(u.matrix().trace());
    const double mean = s / static_cast<double>(g.size());
    CHECK(std::abs(mean - kEulerUniformTraceMoment) <= 0.05);
}
