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

#include "recdft/baselines.hpp"

#include "recdft/array_model.hpp"

#include <cmath>

namespace recdft
{
    BeamformerWeights smi_mvdr(const HermitianCovariance &r_hat, const arma::cx_vec &assumed_sv,
                               double loading)
    {
        if (loading < 0.0)
            throw std::invalid_argument("smi_mvdr: loading must be >= 0");
        const HermitianCovariance r = loading > 0.0 ? r_hat.loaded(loading) : r_hat;
        return capon_weights(r, assumed_sv);
    }

    double capon_spectrum(const HermitianCovariance &r, double theta_electrical)
    {
        const arma::cx_vec a = steering_vector(theta_electrical, r.dim());
        const double rc = arma::rcond(r.mat());
        if (!std::isfinite(rc) || rc < 1e-13)
            throw ConditioningError(rc);
        arma::cx_vec x;
        if (!arma::solve(x, r.mat(), a, arma::solve_opts::likely_sympd + arma::solve_opts::no_approx))
            throw ConditioningError(rc);
        return 1.0 / std::real(arma::cdot(a, x));
    }

    HermitianCovariance capon_npicm(const HermitianCovariance &r, const arma::vec &theta,
                                    const arma::vec &step_weights)
    {
        if (theta.n_elem == 0)
            throw std::invalid_argument("capon_npicm: empty angle set");
        if (theta.n_elem != step_weights.n_elem)
            throw std::invalid_argument("capon_npicm: angle/weight size mismatch");
        const arma::uword n = r.dim();
        const double rc = arma::rcond(r.mat());
        if (!std::isfinite(rc) || rc < 1e-13)
            throw ConditioningError(rc);
        arma::cx_mat out(n, n, arma::fill::zeros);
        for (arma::uword p = 0; p < theta.n_elem; ++p)
        {
            const arma::cx_vec a = steering_vector(theta(p), n);
            arma::cx_vec x;
            if (!arma::solve(x, r.mat(), a,
                             arma::solve_opts::likely_sympd + arma::solve_opts::no_approx))
                throw ConditioningError(rc);
            const double rho = 1.0 / std::real(arma::cdot(a, x));
            out += (rho * step_weights(p)) * (a * a.t());
        }
        return HermitianCovariance(std::move(out));
    }

    HermitianCovariance capon_npicm(const HermitianCovariance &r, const AngularGrid &grid)
    {
        if (grid.ipn_bin_count() == 0)
            throw std::invalid_argument("capon_npicm: empty ipn mask");
        std::vector<double> th;
        th.reserve(grid.n_dft);
        for (arma::uword i = 0; i < grid.n_dft; ++i)
            if (grid.ipn_mask[i])
                th.push_back(grid.theta(i));
        const arma::vec theta(th);
        const arma::vec weights(theta.n_elem,
                                arma::fill::value(2.0 * M_PI / static_cast<double>(grid.n_dft)));
        return capon_npicm(r, theta, weights);
    }

    void dense_ipn_angles(double soi_lo_deg, double soi_hi_deg, arma::uword q,
                          arma::vec &theta_out, arma::vec &weights_out)
    {
        if (q < 2)
            throw std::invalid_argument("dense_ipn_angles: need at least 2 points");
        std::vector<double> th, wt;
        th.reserve(q);
        wt.reserve(q);
        const double dphi_deg = 180.0 / static_cast<double>(q);
        for (arma::uword p = 0; p < q; ++p)
        {
            const double phi_deg = -90.0 + (static_cast<double>(p) + 0.5) * dphi_deg;
            if (phi_deg >= soi_lo_deg && phi_deg <= soi_hi_deg)
                continue;
            th.push_back(electrical_from_deg(phi_deg));
            // d(theta) = pi * cos(phi) * d(phi): the electrical measure of the bin.
            wt.push_back(M_PI * std::cos(phi_deg * M_PI / 180.0) * dphi_deg * M_PI / 180.0);
        }
        theta_out = arma::vec(th);
        weights_out = arma::vec(wt);
    }

} // namespace recdft
