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

#include "polardeg/polarization.hpp"

#include "polardeg/algebra.hpp"
#include "polardeg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace polardeg
{

namespace
{

const GeneratorBasis &basis_for(int dim)
{
    return dim == 2 ? pauli_basis() : gell_mann_basis();
}

void require_dim3(const CoherenceMatrix &rho, const char *what)
{
    if (rho.dim() != 3)
        throw Error(ErrorKind::DimMismatch, std::string(what) + " requires a 3x3 coherence matrix");
}

ComplexMatrix gaussian_matrix(int dim, int cols, CounterRng &rng)
{
    std::normal_distribution<double> normal;
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < cols; ++j)
        {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = complex(re * s, im * s);
        }
    return g;
}

} // namespace

StokesVector::StokesVector(int dim) : dim_(dim)
{
    if (dim != 2 && dim != 3)
        throw Error(ErrorKind::UnsupportedDim, "Stokes vector dimension must be 2 or 3");
}

StokesVector::StokesVector(int dim, std::span<const double> components) : StokesVector(dim)
{
    if (components.size() != size())
        throw Error(ErrorKind::DimMismatch, "dim " + std::to_string(dim) + " Stokes vector needs " +
                                                std::to_string(size()) + " components, got " +
                                                std::to_string(components.size()));
    std::copy(components.begin(), components.end(), c_.begin());
}

double StokesVector::norm() const
{
    return std::sqrt(dot(*this));
}

double StokesVector::dot(const StokesVector &other) const
{
    if (other.dim_ != dim_)
        throw Error(ErrorKind::DimMismatch, "Stokes vectors of different dimension");
    double s = 0.0;
    for (std::size_t r = 0; r < size(); ++r)
        s += c_[r] * other.c_[r];
    return s;
}

const char *to_string(Method m)
{
    return m == Method::Analytic ? "analytic" : "oracle";
}

CoherenceMatrix make_coherence(const ComplexMatrix &raw)
{
    const int n = raw.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(raw(i, j).real()) || !std::isfinite(raw(i, j).imag()))
                throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");

    ComplexMatrix h = hermitize(raw);
    const double tr = h.trace().real();
    if (!(tr > 0.0))
        throw Error(ErrorKind::NonPositiveTrace, "trace is " + std::to_string(tr));
    h *= 1.0 / tr;

    EigenSystem eig = eig_hermitian(h);
    const double smallest = eig.values[n - 1];
    if (smallest < -tol::psd)
        throw Error(ErrorKind::NotPositiveSemidefinite, "smallest eigenvalue is " + std::to_string(smallest));

    if (smallest < 0.0)
    {
        double sum = 0.0;
        for (int k = 0; k < n; ++k)
        {
            eig.values[k] = std::max(eig.values[k], 0.0);
            sum += eig.values[k];
        }
        for (int k = 0; k < n; ++k)
            eig.values[k] /= sum;
        h = hermitize(eig.reconstruct());
    }
    return CoherenceMatrix(std::move(h), std::move(eig));
}

StokesVector to_stokes(const CoherenceMatrix &rho)
{
    const int dim = rho.dim();
    const auto &basis = basis_for(dim);
    const double factor = dim == 2 ? 1.0 : std::sqrt(3.0) / 2.0;
    StokesVector n(dim);
    for (std::size_t r = 0; r < basis.size(); ++r)
        n[r] = factor * trace_product(rho.matrix(), basis[r]).real();
    return n;
}

CoherenceMatrix from_stokes(const StokesVector &n)
{
    const int dim = n.dim();
    const auto &basis = basis_for(dim);
    const double factor = dim == 2 ? 1.0 : std::sqrt(3.0);
    ComplexMatrix m = ComplexMatrix::identity(dim);
    for (std::size_t r = 0; r < basis.size(); ++r)
        m += basis[r] * complex(factor * n[r]);
    m *= 1.0 / dim;
    return make_coherence(m);
}

double purity(const CoherenceMatrix &rho)
{
    return trace_product(rho.matrix(), rho.matrix()).real();
}

Decomposition2D decompose_2d(const CoherenceMatrix &rho)
{
    if (rho.dim() != 2)
        throw Error(ErrorKind::DimMismatch,
                    "a 3x3 coherence matrix has no general polarized/unpolarized decomposition");

    const double p = degree_eigen(rho);
    Decomposition2D out;
    out.weight_unpol = 1.0 - p;
    out.weight_pol = p;
    if (p > tol::degen_gap)
    {
        // rho = lambda_- 1 + (lambda_+ - lambda_-) v v^dagger, with 2 lambda_- = 1 - P.
        const auto &v = rho.eigen().vectors;
        ComplexMatrix proj(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                proj(i, j) = v(i, 0) * std::conj(v(j, 0));
        out.pol_part = make_coherence(proj);
    }
    return out;
}

double clamp_degree(double value)
{
    if (value >= 0.0 && value <= 1.0)
        return value;
    if (value >= -tol::degree_clamp && value <= 1.0 + tol::degree_clamp)
        return std::clamp(value, 0.0, 1.0);
    throw Error(ErrorKind::InternalConsistency, "degree " + std::to_string(value) + " outside [0, 1]");
}

double degree_length(const CoherenceMatrix &rho)
{
    return clamp_degree(to_stokes(rho).norm());
}

double degree_purity(const CoherenceMatrix &rho)
{
    const double tr2 = purity(rho);
    double arg = rho.dim() == 2 ? 2.0 * tr2 - 1.0 : (3.0 * tr2 - 1.0) / 2.0;
    if (arg < 0.0 && arg >= -tol::degree_clamp)
        arg = 0.0;
    if (arg < 0.0)
        throw Error(ErrorKind::InternalConsistency, "purity below 1/dim");
    return clamp_degree(std::sqrt(arg));
}

double degree_eigen(const CoherenceMatrix &rho)
{
    const auto l = rho.eigenvalues();
    return clamp_degree(l.front() - l.back());
}

SheppardDegrees degree_sheppard(const CoherenceMatrix &rho)
{
    require_dim3(rho, "degree_sheppard");
    const auto l = rho.eigenvalues();
    return {clamp_degree(l[0] - l[1]), clamp_degree(3.0 * l[2]), clamp_degree(2.0 * (l[1] - l[2]))};
}

DegreeReport degree_report(const CoherenceMatrix &rho)
{
    DegreeReport r;
    r.dim = rho.dim();
    r.p_hs = degree_eigen(rho);
    r.p_length = degree_length(rho);
    r.p_purity = degree_purity(rho);
    std::copy(rho.eigenvalues().begin(), rho.eigenvalues().end(), r.eigenvalues.begin());
    if (r.dim == 3)
    {
        const auto s = degree_sheppard(rho);
        r.p_pp = s.p_pp;
        r.p_u = s.p_u;
        r.p_pu = s.p_pu;
    }
    r.method = Method::Analytic;
    return r;
}

CoherenceMatrix random_coherence(int dim, CounterRng &rng)
{
    const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
    return make_coherence(g * g.adjoint());
}

CoherenceMatrix random_pure(int dim, CounterRng &rng)
{
    const ComplexMatrix g = gaussian_matrix(dim, 1, rng);
    return make_coherence(g * g.adjoint());
}

} // namespace polardeg
