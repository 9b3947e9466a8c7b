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

#include "polardeg/matrix.hpp"
#include "polardeg/rng.hpp"

#include <array>
#include <optional>
#include <span>

namespace polardeg
{

// Unit-trace, Hermitian, positive semidefinite coherence matrix of a 2D or 3D field.
// Only make_coherence (and functions built on it) can produce one.
class CoherenceMatrix
{
public:
    int dim() const noexcept { return m_.dim(); }
    const ComplexMatrix &matrix() const noexcept { return m_; }
    const EigenSystem &eigen() const noexcept { return eig_; }

    // Sorted descending; length dim().
    std::span<const double> eigenvalues() const { return {eig_.values.data(), static_cast<std::size_t>(dim())}; }

private:
    CoherenceMatrix(ComplexMatrix m, EigenSystem e) : m_(std::move(m)), eig_(std::move(e)) {}
    friend CoherenceMatrix make_coherence(const ComplexMatrix &raw);

    ComplexMatrix m_;
    EigenSystem eig_;
};

// Pauli (3 components) or Gell-Mann (8 components) expansion coefficients.
class StokesVector
{
public:
    explicit StokesVector(int dim);
    StokesVector(int dim, std::span<const double> components);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 2 ? 3 : 8; }
    double &operator[](std::size_t r) { return c_[r]; }
    double operator[](std::size_t r) const { return c_[r]; }
    std::span<const double> components() const { return {c_.data(), size()}; }

    double norm() const;
    double dot(const StokesVector &other) const;

private:
    int dim_;
    std::array<double, 8> c_{};
};

enum class Method
{
    Analytic,
    Oracle
};

const char *to_string(Method m);

struct DegreeReport
{
    int dim = 0;
    double p_hs = 0.0;
    double p_length = 0.0;
    double p_purity = 0.0;
    std::optional<double> p_pp, p_u, p_pu; // dim 3 only
    std::array<double, 3> eigenvalues{};
    Method method = Method::Analytic;
};

struct Decomposition2D
{
    double weight_unpol = 1.0;
    double weight_pol = 0.0;
    // Empty when the state is unpolarized: the polarized direction is undefined.
    std::optional<CoherenceMatrix> pol_part;
};

struct SheppardDegrees
{
    double p_pp, p_u, p_pu;
};

// Hermitize, normalize to unit trace, clamp eigenvalues in [-1e-10, 0) to zero.
CoherenceMatrix make_coherence(const ComplexMatrix &raw);

StokesVector to_stokes(const CoherenceMatrix &rho);
CoherenceMatrix from_stokes(const StokesVector &n);

double purity(const CoherenceMatrix &rho);

Decomposition2D decompose_2d(const CoherenceMatrix &rho);

double degree_length(const CoherenceMatrix &rho);
double degree_purity(const CoherenceMatrix &rho);
double degree_eigen(const CoherenceMatrix &rho);

SheppardDegrees degree_sheppard(const CoherenceMatrix &rho);

// Every closed-form measure, p_hs from the eigenvalue solution.
DegreeReport degree_report(const CoherenceMatrix &rho);

// Clamp a degree into [0, 1] if within tol::degree_clamp; otherwise InternalConsistency.
double clamp_degree(double value);

// G G^dagger / Tr for G with independent standard complex Gaussian entries.
CoherenceMatrix random_coherence(int dim, CounterRng &rng);

// v v^dagger for a complex Gaussian v.
CoherenceMatrix random_pure(int dim, CounterRng &rng);

} // namespace polardeg
