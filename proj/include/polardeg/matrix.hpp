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
#include <complex>
#include <span>

namespace polardeg
{

using complex = std::complex<double>;

// Tolerances shared by every module.
namespace tol
{
inline constexpr double herm = 1e-9;       // max-entry deviation from Hermiticity
inline constexpr double recon = 1e-10;     // eigen reconstruction / unitarity
inline constexpr double degen_gap = 1e-12; // eigenvalues closer than this are treated as equal
inline constexpr double psd = 1e-10;       // smallest admissible eigenvalue is -psd
inline constexpr double degree_clamp = 1e-9;
} // namespace tol

// Dense complex matrix of dimension 2 or 3. Storage is fixed at 3x3, row-major; only the
// leading dim x dim block is meaningful.
class ComplexMatrix
{
public:
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    int dim() const noexcept { return dim_; }

    complex &operator()(int row, int col) { return a_[3 * row + col]; }
    const complex &operator()(int row, int col) const { return a_[3 * row + col]; }

    ComplexMatrix adjoint() const;
    complex trace() const;
    double max_abs() const; // max-entry norm

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(complex s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix m, complex s) { return m *= s; }
    friend ComplexMatrix operator*(complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);

private:
    int dim_;
    std::array<complex, 9> a_{};
};

// Eigen-decomposition of a Hermitian matrix. values sorted descending; column k of vectors is
// the eigenvector of values[k], with its first non-negligible component real and positive.
struct EigenSystem
{
    int dim = 0;
    std::array<double, 3> values{};
    ComplexMatrix vectors{2};

    ComplexMatrix reconstruct() const;
};

ComplexMatrix hermitize(const ComplexMatrix &m);

double hermitian_deviation(const ComplexMatrix &m);

// Closed form: quadratic formula for dim 2, trigonometric Cardano for dim 3 followed by one
// Rayleigh-quotient pass. Throws NotHermitian above tol::herm.
EigenSystem eig_hermitian(const ComplexMatrix &m);

// Eigenvalues only (descending), no vectors and no refinement. Used on hot paths.
std::array<double, 3> eigenvalues_hermitian(const ComplexMatrix &m);

complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

double trace_norm(const ComplexMatrix &m);

complex determinant(const ComplexMatrix &m);

} // namespace polardeg
