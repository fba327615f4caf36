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

#ifndef RECDFT_BASELINES_HPP
#define RECDFT_BASELINES_HPP

#include "recdft/beamformer.hpp"
#include "recdft/spectrum.hpp"
#include "recdft/types.hpp"

namespace recdft
{
    // Sample-matrix-inversion MVDR with optional diagonal loading:
    // w = (R + lambda I)^{-1} a / (a^H (R + lambda I)^{-1} a).
    // With lambda = 0 and K < N the solve fails and is reported.
    BeamformerWeights smi_mvdr(const HermitianCovariance &r_hat, const arma::cx_vec &assumed_sv,
                               double loading);

    // Capon spatial spectrum 1 / (a(theta)^H R^{-1} a(theta)).
    double capon_spectrum(const HermitianCovariance &r, double theta_electrical);

    // Covariance reconstruction by sampling the Capon spectrum:
    //   sum_p a(theta_p) a(theta_p)^H / (a^H R^{-1} a) * weight_p.
    // step_weights carries the per-point angular measure (constant 2*pi/N for
    // the aligned coarse grid, pi*cos(phi)*dphi for a physical-angle grid).
    HermitianCovariance capon_npicm(const HermitianCovariance &r, const arma::vec &theta,
                                    const arma::vec &step_weights);

    // Convenience: sum over the grid's ipn-masked bins with the grid step 2*pi/n_dft.
    HermitianCovariance capon_npicm(const HermitianCovariance &r, const AngularGrid &grid);

    // Q uniform physical-angle points over [-90, 90] minus the SOI sector,
    // mapped to electrical angle; weights are the mapped angular measure.
    void dense_ipn_angles(double soi_lo_deg, double soi_hi_deg, arma::uword q,
                          arma::vec &theta_out, arma::vec &weights_out);

} // namespace recdft

#endif
