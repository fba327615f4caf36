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

#ifndef RECDFT_BEAMFORMER_HPP
#define RECDFT_BEAMFORMER_HPP

#include "recdft/array_model.hpp"
#include "recdft/types.hpp"

namespace recdft
{
    struct BeamformerWeights
    {
        arma::cx_vec w;
    };

    struct ConditioningError : std::runtime_error
    {
        explicit ConditioningError(double rcond_estimate)
            : std::runtime_error("linear solve failed: reciprocal condition estimate " +
                                 std::to_string(rcond_estimate)),
              rcond(rcond_estimate)
        {
        }
        double rcond;
    };

    // Desired-signal covariance by subtraction, R_s = R_hat - R_ipn_rec.
    // Hermitian but deliberately not forced positive semidefinite: the residual
    // noise model keeps the raw difference.
    HermitianCovariance dscm(const HermitianCovariance &r_hat,
                             const HermitianCovariance &r_ipn_rec);

    // SV estimate a~ = R_s * a_bar, unnormalized. Throws on an exactly zero
    // product (catastrophic DSCM). The optional sqrt(N) renormalization is for
    // diagnostics only; the SINR is scale invariant in the estimate.
    arma::cx_vec estimate_sv(const HermitianCovariance &r_s, const arma::cx_vec &assumed_sv,
                             bool renormalize_to_sqrt_n = false);

    // Capon weights w = R^{-1} a / (a^H R^{-1} a) via a Hermitian linear solve
    // (no explicit inverse). Throws ConditioningError with the reciprocal
    // condition estimate when the solve is untrustworthy.
    BeamformerWeights capon_weights(const HermitianCovariance &r_ipn, const arma::cx_vec &sv);

    struct SinrReport
    {
        double output_sinr_db = 0.0;
        double optimal_sinr_db = 0.0;
        double deviation_db = 0.0; // optimal - output
    };

    // Output SINR against the trial truth. Rank-1 truth scores
    // sigma_s^2 |w^H a_s|^2 / (w^H R_ipn w); general-rank truth scores the
    // quotient w^H R_s w / w^H R_ipn w against the principal generalized
    // eigenvalue of (R_s, R_ipn).
    SinrReport output_sinr(const BeamformerWeights &weights, const TrialTruth &truth);

    double optimal_sinr_linear(const TrialTruth &truth);

    // The matching optimal weights: R_ipn^{-1} a_s for rank-1 truth, the
    // principal generalized eigenvector otherwise.
    BeamformerWeights optimal_weights(const TrialTruth &truth);

    struct SinrLossPrediction
    {
        double sinr_linear = 0.0;
        bool expansion_valid = true; // false when eps >= 0.5 or |phi| >= 0.2 rad
    };

    // Second-order SINR-loss predictor: optimal * (1 - eps^2 phi^2 / 12), where
    // eps is the residual-to-signal power ratio of the estimated DSCM and phi
    // the electrical look-angle error.
    SinrLossPrediction predicted_sinr_loss(double epsilon, double phi_rad,
                                           double optimal_sinr_linear);

    // Residual-to-signal ratio model eps ~= N_s / (N_DFT * SNR).
    double epsilon_model(arma::uword n_s_bins, arma::uword n_dft, double snr_linear);

} // namespace recdft

#endif
