// SPDX-License-Identifier: Apache-2.0
//
// recdft — robust adaptive beamforming via autocorrelation-sequence
// reconstruction and DFT spatial spectrum sampling
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

#ifndef RECDFT_TYPES_HPP
#define RECDFT_TYPES_HPP

#include <armadillo>
#include <complex>
#include <stdexcept>

namespace recdft
{
    using cxd = std::complex<double>;

    // N x N complex covariance, Hermitian by construction. The constructor
    // symmetrizes (M + M^H)/2, which also forces a real diagonal. Diagonal
    // sign is a role property (an SCM has a non-negative diagonal, a DSCM
    // residual may not) and is not enforced here.
    class HermitianCovariance
    {
    public:
        HermitianCovariance() = default;

        explicit HermitianCovariance(arma::cx_mat m)
        {
            if (m.n_rows != m.n_cols)
                throw std::invalid_argument("HermitianCovariance: matrix must be square");
            m_ = 0.5 * (m + m.t()); // .t() is the conjugate transpose for cx_mat
        }

        static HermitianCovariance identity(arma::uword n, double scale = 1.0)
        {
            return HermitianCovariance(arma::cx_mat(scale * arma::eye<arma::mat>(n, n),
                                                    arma::mat(n, n, arma::fill::zeros)));
        }

        const arma::cx_mat &mat() const { return m_; }
        arma::uword dim() const { return m_.n_rows; }
        bool empty() const { return m_.n_elem == 0; }

        double trace_real() const { return arma::trace(m_).real(); }

        // Returns this + loading * I.
        HermitianCovariance loaded(double loading) const
        {
            arma::cx_mat out = m_;
            out.diag() += cxd(loading, 0.0);
            return HermitianCovariance(std::move(out));
        }

        double min_eigenvalue() const
        {
            arma::vec ev;
            if (!arma::eig_sym(ev, m_))
                throw std::runtime_error("HermitianCovariance: eigendecomposition failed");
            return ev.min();
        }

    private:
        arma::cx_mat m_;
    };

    inline HermitianCovariance operator+(const HermitianCovariance &a, const HermitianCovariance &b)
    {
        return HermitianCovariance(a.mat() + b.mat());
    }

    inline HermitianCovariance operator-(const HermitianCovariance &a, const HermitianCovariance &b)
    {
        return HermitianCovariance(a.mat() - b.mat());
    }

    // Complex autocorrelation sequence r(n), n = -(N-1) ... (N-1), stored as a
    // vector of length 2N-1 with lag n at index n + (N-1). Conjugate symmetry
    // r(-n) = conj(r(n)) is enforced on construction; the zero lag is realized.
    class AutocorrelationSequence
    {
    public:
        explicit AutocorrelationSequence(arma::cx_vec values) : v_(std::move(values))
        {
            if (v_.n_elem == 0 || v_.n_elem % 2 == 0)
                throw std::invalid_argument("AutocorrelationSequence: length must be odd (2N-1)");
            symmetrize();
        }

        // Builds the full sequence from lags 0..N-1; negative lags by conjugation.
        static AutocorrelationSequence from_nonnegative_lags(const arma::cx_vec &head)
        {
            const arma::uword n = head.n_elem;
            if (n == 0)
                throw std::invalid_argument("AutocorrelationSequence: empty lag vector");
            arma::cx_vec full(2 * n - 1);
            for (arma::uword k = 0; k < n; ++k)
            {
                full(n - 1 + k) = head(k);
                full(n - 1 - k) = std::conj(head(k));
            }
            full(n - 1) = cxd(head(0).real(), 0.0);
            return AutocorrelationSequence(std::move(full));
        }

        arma::uword n_sensors() const { return (v_.n_elem + 1) / 2; }
        int max_lag() const { return static_cast<int>(n_sensors()) - 1; }

        cxd at(int lag) const
        {
            const int idx = lag + max_lag();
            if (idx < 0 || idx >= static_cast<int>(v_.n_elem))
                throw std::out_of_range("AutocorrelationSequence: lag out of range");
            return v_(static_cast<arma::uword>(idx));
        }

        const arma::cx_vec &values() const { return v_; }

        double l1_norm() const { return arma::accu(arma::abs(v_)); }

    private:
        void symmetrize()
        {
            const int m = max_lag();
            for (int n = 1; n <= m; ++n)
            {
                const cxd avg = 0.5 * (v_(static_cast<arma::uword>(m + n)) +
                                       std::conj(v_(static_cast<arma::uword>(m - n))));
                v_(static_cast<arma::uword>(m + n)) = avg;
                v_(static_cast<arma::uword>(m - n)) = std::conj(avg);
            }
            v_(static_cast<arma::uword>(m)) = cxd(v_(static_cast<arma::uword>(m)).real(), 0.0);
        }

        arma::cx_vec v_;
    };

    inline double db_from_linear(double x) { return 10.0 * std::log10(x); }
    inline double linear_from_db(double x_db) { return std::pow(10.0, x_db / 10.0); }

} // namespace recdft

#endif
