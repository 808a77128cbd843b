// Copyright 2026 The locclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference computations. Everything here works on plain Eigen
// objects with full matrices and bit strings, and never calls the library's
// numerics, so it can serve as an independent check of them.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Vec kron(const Vec &a, const Vec &b) {
    Mat am = a;
    Mat bm = b;
    return kron(am, bm).col(0);
}

// Bit string of `index` for n qubits, qubit 0 first.
inline std::vector<int> bits_of(std::size_t index, int n) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int q = n - 1; q >= 0; --q) {
        bits[static_cast<std::size_t>(q)] = static_cast<int>(index & 1U);
        index >>= 1U;
    }
    return bits;
}

inline std::size_t index_of(const std::vector<int> &bits) {
    std::size_t out = 0;
    for (int b : bits) {
        out = (out << 1U) | static_cast<std::size_t>(b);
    }
    return out;
}

// Full 2^n x 2^n matrix of a single-qubit gate on `target`.
inline Mat embed(const Eigen::Matrix2cd &u, int target, int n) {
    Mat out = Mat::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        out = kron(out, q == target ? Mat(u) : Mat(Mat::Identity(2, 2)));
    }
    return out;
}

// Permutation matrix of CNOT(control -> target) on n qubits.
inline Mat cnot(int control, int target, int n) {
    const std::size_t dim = std::size_t{1} << n;
    Mat out = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        auto bits = bits_of(x, n);
        bits[static_cast<std::size_t>(target)] ^= bits[static_cast<std::size_t>(control)];
        out(static_cast<Eigen::Index>(index_of(bits)), static_cast<Eigen::Index>(x)) = 1.0;
    }
    return out;
}

// Reduced state on `keep` of a pure state, via M M^dagger with M the
// amplitude array reshaped to (keep) x (rest).
inline Mat marginal_of_pure(const Vec &psi, int n, const std::vector<int> &keep) {
    std::vector<int> rest;
    for (int q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            rest.push_back(q);
        }
    }
    const auto dk = Eigen::Index{1} << keep.size();
    const auto dr = Eigen::Index{1} << rest.size();
    Mat m = Mat::Zero(dk, dr);
    for (std::size_t x = 0; x < static_cast<std::size_t>(psi.size()); ++x) {
        const auto bits = bits_of(x, n);
        std::size_t r = 0;
        std::size_t c = 0;
        for (int q : keep) {
            r = (r << 1U) | static_cast<std::size_t>(bits[static_cast<std::size_t>(q)]);
        }
        for (int q : rest) {
            c = (c << 1U) | static_cast<std::size_t>(bits[static_cast<std::size_t>(q)]);
        }
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = psi(static_cast<Eigen::Index>(x));
    }
    return m * m.adjoint();
}

// Partial transpose on the qubits in `side_b`, through explicit bit strings.
inline Mat partial_transpose(const Mat &rho, int n, const std::vector<int> &side_b) {
    Mat out(rho.rows(), rho.cols());
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        for (Eigen::Index c = 0; c < rho.cols(); ++c) {
            auto rb = bits_of(static_cast<std::size_t>(r), n);
            auto cb = bits_of(static_cast<std::size_t>(c), n);
            for (int q : side_b) {
                std::swap(rb[static_cast<std::size_t>(q)], cb[static_cast<std::size_t>(q)]);
            }
            out(static_cast<Eigen::Index>(index_of(rb)), static_cast<Eigen::Index>(index_of(cb))) =
                rho(r, c);
        }
    }
    return out;
}

// Eigenvalues (ascending) of a 2x2 Hermitian matrix from trace/determinant.
inline std::array<double, 2> eig2(const Mat &m) {
    const double tr = std::real(m(0, 0) + m(1, 1));
    const double det = std::real(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
    return {(tr - disc) / 2.0, (tr + disc) / 2.0};
}

inline double trace_norm(const Mat &h) {
    Eigen::SelfAdjointEigenSolver<Mat> s(h, Eigen::EigenvaluesOnly);
    return s.eigenvalues().cwiseAbs().sum();
}

// Haar-random unitary via QR of a complex Gaussian matrix.
inline Mat random_unitary(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Mat z(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            z(i, j) = C(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const C d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

inline Vec random_state(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = C(g(rng), g(rng));
    }
    return v.normalized();
}

// Literal kets written out from the basis definitions, qubit 1 first.
inline Vec ket(const char *bits) {
    const std::size_t n = std::char_traits<char>::length(bits);
    Vec v = Vec::Zero(Eigen::Index{1} << n);
    std::size_t idx = 0;
    for (std::size_t t = 0; t < n; ++t) {
        idx = (idx << 1U) | static_cast<std::size_t>(bits[t] == '1');
    }
    v(static_cast<Eigen::Index>(idx)) = 1.0;
    return v;
}

}  // namespace oracle
