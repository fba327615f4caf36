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

#include "recdft/beamformer.hpp"

#include <cmath>

namespace recdft
{
    namespace
    {
        // Hermitian solve with a condition check. K < N sample covariances are
        // routinely near-singular, so failures are reported, not asserted.
        arma::cx_vec solve_hermitian(const arma::cx_mat &a, const arma::cx_vec &b)
        {
            const double rc = arma::rcond(a);
            if (!std::isfinite(rc) || rc < 1e-13)
                throw ConditioningError(rc);
            arma::cx_vec x;
            if (!arma::solve(x, a, b, arma::solve_opts::likely_sympd + arma::solve_opts::no_approx))
            {
                if (!arma::solve(x, a, b, arma::solve_opts::no_approx))
                    throw ConditioningError(rc);
            }
            return x;
        }

        // Principal generalized eigenpair of (R_s, R_ipn) via Cholesky whitening.
        std::pair<double, arma::cx_vec> principal_pair(const HermitianCovariance &r_s,
                                                       const HermitianCovariance &r_ipn)
        {
            arma::cx_mat chol_l;
            if (!arma::chol(chol_l, r_ipn.mat(), "lower"))
                throw ConditioningError(arma::rcond(r_ipn.mat()));
            const arma::cx_mat li = arma::inv(arma::trimatl(chol_l));
            arma::cx_mat m = li * r_s.mat() * li.t();
            m = 0.5 * (m + m.t());
            arma::vec ev;
            arma::cx_mat vec;
            if (!arma::eig_sym(ev, vec, m))
                throw std::runtime_error("output_sinr: eigendecomposition failed");
            arma::cx_vec w = arma::solve(arma::trimatu(chol_l.t()), vec.col(vec.n_cols - 1));
            return {ev.max(), std::move(w)};
        }
    } // namespace

    HermitianCovariance dscm(const HermitianCovariance &r_hat, const HermitianCovariance &r_ipn_rec)
    {
        if (r_hat.dim() != r_ipn_rec.dim())
            throw std::invalid_argument("dscm: dimension mismatch");
        return r_hat - r_ipn_rec;
    }

    arma::cx_vec estimate_sv(const HermitianCovariance &r_s, const arma::cx_vec &assumed_sv,
                             bool renormalize_to_sqrt_n)
    {
        if (r_s.dim() != assumed_sv.n_elem)
            throw std::invalid_argument("estimate_sv: dimension mismatch");
        arma::cx_vec est = r_s.mat() * assumed_sv;
        const double nrm = arma::norm(est);
        if (nrm == 0.0)
            throw std::runtime_error("estimate_sv: zero steering-vector estimate");
        if (renormalize_to_sqrt_n)
            est *= std::sqrt(static_cast<double>(est.n_elem)) / nrm;
        return est;
    }

    BeamformerWeights capon_weights(const HermitianCovariance &r_ipn, const arma::cx_vec &sv)
    {
        if (r_ipn.dim() != sv.n_elem)
            throw std::invalid_argument("capon_weights: dimension mismatch");
        arma::cx_vec x = solve_hermitian(r_ipn.mat(), sv);
        const cxd denom = arma::cdot(sv, x);
        if (denom == cxd(0.0, 0.0))
            throw ConditioningError(0.0);
        return BeamformerWeights{x / denom};
    }

    double optimal_sinr_linear(const TrialTruth &truth)
    {
        if (truth.rank1)
        {
            const arma::cx_vec x = solve_hermitian(truth.r_ipn.mat(), truth.soi_sv);
            return truth.soi_power * std::abs(arma::cdot(truth.soi_sv, x));
        }
        return principal_pair(truth.r_s, truth.r_ipn).first;
    }

    BeamformerWeights optimal_weights(const TrialTruth &truth)
    {
        if (truth.rank1)
            return capon_weights(truth.r_ipn, truth.soi_sv);
        return BeamformerWeights{principal_pair(truth.r_s, truth.r_ipn).second};
    }

    SinrReport output_sinr(const BeamformerWeights &weights, const TrialTruth &truth)
    {
        const arma::cx_vec &w = weights.w;
        const double denom = std::real(arma::cdot(w, truth.r_ipn.mat() * w));
        double sinr = 0.0;
        if (truth.rank1)
        {
            const double num = truth.soi_power * std::norm(arma::cdot(w, truth.soi_sv));
            sinr = num / denom;
        }
        else
        {
            const double num = std::real(arma::cdot(w, truth.r_s.mat() * w));
            sinr = num / denom;
        }
        SinrReport rep;
        rep.output_sinr_db = db_from_linear(sinr);
        rep.optimal_sinr_db = db_from_linear(optimal_sinr_linear(truth));
        rep.deviation_db = rep.optimal_sinr_db - rep.output_sinr_db;
        return rep;
    }

    SinrLossPrediction predicted_sinr_loss(double epsilon, double phi_rad,
                                           double optimal_sinr_linear)
    {
        SinrLossPrediction pred;
        pred.expansion_valid = (epsilon < 0.5) && (std::abs(phi_rad) < 0.2);
        pred.sinr_linear =
            optimal_sinr_linear * (1.0 - epsilon * epsilon * phi_rad * phi_rad / 12.0);
        return pred;
    }

    double epsilon_model(arma::uword n_s_bins, arma::uword n_dft, double snr_linear)
    {
        if (n_s_bins == 0 || n_s_bins >= n_dft)
            throw std::invalid_argument("epsilon_model: require 0 < n_s_bins < n_dft");
        if (snr_linear <= 0.0)
            throw std::invalid_argument("epsilon_model: SNR must be positive");
        return static_cast<double>(n_s_bins) / (static_cast<double>(n_dft) * snr_linear);
    }

} // namespace recdft
