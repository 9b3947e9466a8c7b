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

#include "polardeg/matrix.hpp"

#include "polardeg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace polardeg
{

namespace
{

void check_dim(int dim)
{
    if (dim != 2 && dim != 3)
        throw Error(ErrorKind::UnsupportedDim, "matrix dimension must be 2 or 3, got " + std::to_string(dim));
}

void check_same_dim(const ComplexMatrix &a, const ComplexMatrix &b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimMismatch,
                    "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ");
}

using Vec3 = std::array<complex, 3>;

double norm_sq(const Vec3 &v)
{
    return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
}

// Bilinear cross product: a . (a x b) = b . (a x b) = 0 without conjugation.
Vec3 cross(const Vec3 &a, const Vec3 &b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// <u, v> = u^dagger v
complex inner(const Vec3 &u, const Vec3 &v)
{
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1] + std::conj(u[2]) * v[2];
}

void scale(Vec3 &v, double s)
{
    for (auto &x : v)
        x *= s;
}

// First component with magnitude above 1e-10 made real positive.
void fix_phase(ComplexMatrix &vectors, int col)
{
    const int n = vectors.dim();
    for (int r = 0; r < n; ++r)
    {
        const double mag = std::abs(vectors(r, col));
        if (mag > 1e-10)
        {
            const complex phase = std::conj(vectors(r, col)) / mag;
            for (int k = 0; k < n; ++k)
                vectors(k, col) *= phase;
            vectors(r, col) = complex(mag, 0.0);
            return;
        }
    }
}

struct Eigen2
{
    double hi, lo;
    complex v_hi[2], v_lo[2];
};

Eigen2 solve_2x2(double a, complex b, double d)
{
    const double mean = 0.5 * (a + d);
    const double half = 0.5 * (a - d);
    const double rad = std::hypot(half, std::abs(b));

    Eigen2 out{mean + rad, mean - rad, {1.0, 0.0}, {0.0, 1.0}};
    if (2.0 * rad < tol::degen_gap)
        return out;

    // Two candidate kernels of (H - hi); the longer one is better conditioned.
    const complex c1[2] = {b, out.hi - a};
    const complex c2[2] = {out.hi - d, std::conj(b)};
    const double n1 = std::norm(c1[0]) + std::norm(c1[1]);
    const double n2 = std::norm(c2[0]) + std::norm(c2[1]);
    const complex *c = n1 >= n2 ? c1 : c2;
    const double inv = 1.0 / std::sqrt(std::max(n1, n2));
    out.v_hi[0] = c[0] * inv;
    out.v_hi[1] = c[1] * inv;
    out.v_lo[0] = -std::conj(out.v_hi[1]);
    out.v_lo[1] = std::conj(out.v_hi[0]);
    return out;
}

std::array<double, 3> cardano(const ComplexMatrix &m)
{
    const double q = (m(0, 0).real() + m(1, 1).real() + m(2, 2).real()) / 3.0;
    ComplexMatrix b = m;
    for (int i = 0; i < 3; ++i)
        b(i, i) -= q;

    double fro = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            fro += std::norm(b(i, j));
    const double p = std::sqrt(fro / 6.0);
    if (p == 0.0)
        return {q, q, q};

    b *= 1.0 / p;
    const double r = std::clamp(0.5 * determinant(b).real(), -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::array<double, 3> e{e1, e2, e3};
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

// Unit vector spanning the kernel of (m - lambda) when lambda is a simple eigenvalue.
Vec3 kernel_vector(const ComplexMatrix &m, double lambda)
{
    Vec3 rows[3];
    for (int i = 0; i < 3; ++i)
        rows[i] = {m(i, 0), m(i, 1), m(i, 2)};
    for (int i = 0; i < 3; ++i)
        rows[i][i] -= lambda;

    Vec3 best = cross(rows[0], rows[1]);
    double best_n = norm_sq(best);
    for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 2}})
    {
        Vec3 c = cross(rows[i], rows[j]);
        const double n = norm_sq(c);
        if (n > best_n)
        {
            best = c;
            best_n = n;
        }
    }
    scale(best, 1.0 / std::sqrt(best_n));
    return best;
}

// Orthonormal basis (u1, u2) of the orthogonal complement of unit vector v.
std::pair<Vec3, Vec3> complement(const Vec3 &v)
{
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(v[i]) < std::abs(v[k]))
            k = i;
    Vec3 u1{};
    u1[k] = 1.0;
    const complex proj = inner(v, u1);
    for (int i = 0; i < 3; ++i)
        u1[i] -= proj * v[i];
    scale(u1, 1.0 / std::sqrt(norm_sq(u1)));

    Vec3 u2 = cross(v, u1);
    for (auto &x : u2)
        x = std::conj(x);
    scale(u2, 1.0 / std::sqrt(norm_sq(u2)));
    return {u1, u2};
}

Vec3 mat_vec(const ComplexMatrix &m, const Vec3 &v)
{
    Vec3 out{};
    for (int i = 0; i < 3; ++i)
        out[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    return out;
}

EigenSystem eig_3x3(const ComplexMatrix &m)
{
    const auto e = cardano(m);
    Vec3 vec[3];

    if (e[0] - e[2] < tol::degen_gap)
    {
        vec[0] = {1.0, 0.0, 0.0};
        vec[1] = {0.0, 1.0, 0.0};
        vec[2] = {0.0, 0.0, 1.0};
    }
    else
    {
        // Deflate on the better separated end of the spectrum, then solve the remaining 2x2 block.
        const int iso = (e[0] - e[1] >= e[1] - e[2]) ? 0 : 2;
        const Vec3 v = kernel_vector(m, e[iso]);
        const auto [u1, u2] = complement(v);
        const Vec3 mu1 = mat_vec(m, u1), mu2 = mat_vec(m, u2);
        const auto sub = solve_2x2(inner(u1, mu1).real(), inner(u1, mu2), inner(u2, mu2).real());

        Vec3 hi{}, lo{};
        for (int i = 0; i < 3; ++i)
        {
            hi[i] = sub.v_hi[0] * u1[i] + sub.v_hi[1] * u2[i];
            lo[i] = sub.v_lo[0] * u1[i] + sub.v_lo[1] * u2[i];
        }
        if (iso == 0)
        {
            vec[0] = v;
            vec[1] = hi;
            vec[2] = lo;
        }
        else
        {
            vec[0] = hi;
            vec[1] = lo;
            vec[2] = v;
        }
    }

    // Rayleigh quotients replace the Cardano values.
    std::array<std::pair<double, int>, 3> order;
    for (int k = 0; k < 3; ++k)
        order[k] = {inner(vec[k], mat_vec(m, vec[k])).real(), k};
    std::stable_sort(order.begin(), order.end(), [](auto &l, auto &r) { return l.first > r.first; });

    EigenSystem out;
    out.dim = 3;
    out.vectors = ComplexMatrix(3);
    for (int c = 0; c < 3; ++c)
    {
        out.values[c] = order[c].first;
        for (int r = 0; r < 3; ++r)
            out.vectors(r, c) = vec[order[c].second][r];
        fix_phase(out.vectors, c);
    }
    return out;
}

EigenSystem eig_2x2(const ComplexMatrix &m)
{
    const auto s = solve_2x2(m(0, 0).real(), m(0, 1), m(1, 1).real());
    EigenSystem out;
    out.dim = 2;
    out.vectors = ComplexMatrix(2);
    out.values = {s.hi, s.lo, 0.0};
    for (int r = 0; r < 2; ++r)
    {
        out.vectors(r, 0) = s.v_hi[r];
        out.vectors(r, 1) = s.v_lo[r];
    }
    fix_phase(out.vectors, 0);
    fix_phase(out.vectors, 1);
    return out;
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim)
{
    check_dim(dim);
}

ComplexMatrix ComplexMatrix::identity(int dim)
{
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values)
{
    ComplexMatrix m(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        m(static_cast<int>(i), static_cast<int>(i)) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            out(i, j) = std::conj((*this)(j, i));
    return out;
}

complex ComplexMatrix::trace() const
{
    complex t = 0.0;
    for (int i = 0; i < dim_; ++i)
        t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const
{
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs)
{
    check_same_dim(*this, rhs);
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs)
{
    check_same_dim(*this, rhs);
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(complex s)
{
    for (auto &x : a_)
        x *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs)
{
    check_same_dim(lhs, rhs);
    const int n = lhs.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            complex s = 0.0;
            for (int k = 0; k < n; ++k)
                s += lhs(i, k) * rhs(k, j);
            out(i, j) = s;
        }
    return out;
}

ComplexMatrix EigenSystem::reconstruct() const
{
    ComplexMatrix out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
        {
            complex s = 0.0;
            for (int k = 0; k < dim; ++k)
                s += vectors(i, k) * values[k] * std::conj(vectors(j, k));
            out(i, j) = s;
        }
    return out;
}

ComplexMatrix hermitize(const ComplexMatrix &m)
{
    ComplexMatrix out = m + m.adjoint();
    out *= 0.5;
    return out;
}

double hermitian_deviation(const ComplexMatrix &m)
{
    return (m - m.adjoint()).max_abs();
}

EigenSystem eig_hermitian(const ComplexMatrix &m)
{
    const double dev = hermitian_deviation(m);
    if (dev > tol::herm)
        throw Error(ErrorKind::NotHermitian, "max deviation from Hermiticity is " + std::to_string(dev));
    const ComplexMatrix h = hermitize(m);
    return h.dim() == 2 ? eig_2x2(h) : eig_3x3(h);
}

std::array<double, 3> eigenvalues_hermitian(const ComplexMatrix &m)
{
    if (m.dim() == 2)
    {
        const auto s = solve_2x2(m(0, 0).real(), m(0, 1), m(1, 1).real());
        return {s.hi, s.lo, 0.0};
    }
    return cardano(m);
}

complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b)
{
    check_same_dim(a, b);
    const int n = a.dim();
    complex s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            s += a(i, k) * b(k, i);
    return s;
}

double trace_norm(const ComplexMatrix &m)
{
    const double dev = hermitian_deviation(m);
    if (dev > tol::herm)
        throw Error(ErrorKind::NotHermitian, "max deviation from Hermiticity is " + std::to_string(dev));
    const auto e = eigenvalues_hermitian(hermitize(m));
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        s += std::abs(e[i]);
    return s;
}

complex determinant(const ComplexMatrix &m)
{
    if (m.dim() == 2)
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

} // namespace polardeg
