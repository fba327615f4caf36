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

#ifndef RECDFT_ARRAY_MODEL_HPP
#define RECDFT_ARRAY_MODEL_HPP

#include "recdft/rng.hpp"
#include "recdft/scenario.hpp"
#include "recdft/types.hpp"

#include <vector>

namespace recdft
{
    // ULA steering vector for half-wavelength spacing, a[n] = exp(-j*n*theta),
    // n = 0..N-1, where theta = pi*sin(phi) is the electrical angle. Throws
    // for fewer than two sensors.
    arma::cx_vec steering_vector(double theta_electrical, arma::uword n_sensors);

    // Electrical angle theta = pi*sin(phi) from the physical angle in degrees.
    double electrical_from_deg(double physical_deg);

    // Physical angle in degrees from the electrical angle (theta in [-pi, pi]).
    double deg_from_electrical(double theta_electrical);

    // Geometry of one trial before/after mismatch perturbation. For the
    // incoherent-scattering model the SOI is carried by several paths and the
    // desired-signal covariance is no longer rank one.
    struct TrialGeometry
    {
        double soi_doa_deg = 0.0;
        std::vector<double> interferer_doas_deg;
        // SOI per-path steering vectors. One entry for a point source (possibly
        // perturbed or composite), several for incoherent scattering.
        std::vector<arma::cx_vec> soi_path_svs;
        bool rank1 = true;   // false => per-path waveforms are independent
        bool clipped = false;
    };

    // Draws the trial's mismatch realization. Per-trial randomness only; the
    // waveforms are drawn later, per snapshot.
    TrialGeometry apply_mismatch(const MismatchModel &model, const ScenarioConfig &nominal,
                                 TrialRng &rng);

    struct TrialTruth
    {
        arma::cx_vec soi_sv;          // actual SOI steering vector (rank-1 models)
        HermitianCovariance r_s;      // desired-signal covariance
        HermitianCovariance r_ipn;    // noise-plus-interference covariance
        double soi_power = 0.0;       // sigma_s^2 (per-path power x paths for rank-1 composites)
        arma::vec interferer_powers;  // sigma_l^2
        double noise_power = 1.0;     // sigma_n^2
        bool rank1 = true;
        bool clipped = false;
        std::vector<double> actual_doas_deg; // SOI first, then interferers
    };

    struct SnapshotBatch
    {
        arma::cx_mat samples; // N x K
        TrialTruth truth;
    };

    // Synthesizes one trial: mismatch draws first (fixed across snapshots),
    // then K snapshots of SOI + interference + unit-variance sensor noise.
    // SNR accounting is per sensor: trace(R_s)/N = SNR * sigma_n^2.
    SnapshotBatch synthesize_trial(const ScenarioConfig &scenario, TrialRng &rng);

    // Same, with the axis values overridden (used by sweep loops).
    SnapshotBatch synthesize_trial(const ScenarioConfig &scenario, double snr_db,
                                   unsigned snapshots, TrialRng &rng);

} // namespace recdft

#endif
