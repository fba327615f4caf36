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

#include "recdft/array_model.hpp"

#include <cmath>

namespace recdft
{
    arma::cx_vec steering_vector(double theta_electrical, arma::uword n_sensors)
    {
        if (n_sensors < 2)
            throw std::invalid_argument("steering_vector: need at least 2 sensors");
        arma::cx_vec a(n_sensors);
        for (arma::uword n = 0; n < n_sensors; ++n)
            a(n) = std::polar(1.0, -static_cast<double>(n) * theta_electrical);
        return a;
    }

    double electrical_from_deg(double physical_deg)
    {
        return M_PI * std::sin(physical_deg * M_PI / 180.0);
    }

    double deg_from_electrical(double theta_electrical)
    {
        return std::asin(theta_electrical / M_PI) * 180.0 / M_PI;
    }

    namespace
    {
        // Open interval (-90, 90): perturbed DoAs are clipped just inside.
        bool clip_doa(double &doa_deg)
        {
            constexpr double bound = 90.0 - 1e-9;
            if (doa_deg > bound)
            {
                doa_deg = bound;
                return true;
            }
            if (doa_deg < -bound)
            {
                doa_deg = -bound;
                return true;
            }
            return false;
        }
    } // namespace

    TrialGeometry apply_mismatch(const MismatchModel &model, const ScenarioConfig &nominal,
                                 TrialRng &rng)
    {
        model.validate();
        const arma::uword n = nominal.n_sensors;
        TrialGeometry g;
        g.soi_doa_deg = nominal.soi_doa_deg;
        g.interferer_doas_deg = nominal.interferer_doas_deg;

        switch (model.kind)
        {
        case MismatchKind::none:
            g.soi_path_svs.push_back(steering_vector(electrical_from_deg(g.soi_doa_deg), n));
            break;

        case MismatchKind::random_look_direction:
        {
            const double hw = model.look_halfwidth_deg;
            g.soi_doa_deg += rng.uniform(-hw, hw);
            g.clipped |= clip_doa(g.soi_doa_deg);
            for (double &doa : g.interferer_doas_deg)
            {
                doa += rng.uniform(-hw, hw);
                g.clipped |= clip_doa(doa);
            }
            g.soi_path_svs.push_back(steering_vector(electrical_from_deg(g.soi_doa_deg), n));
            break;
        }

        case MismatchKind::incoherent_scattering:
        {
            // Direct path at the nominal DoA plus scattered paths with
            // independent waveforms; the DSCM has rank paths+1.
            g.rank1 = false;
            g.soi_path_svs.push_back(steering_vector(electrical_from_deg(g.soi_doa_deg), n));
            for (int r = 0; r < model.scatter_paths; ++r)
            {
                double doa = g.soi_doa_deg + model.scatter_std_deg * rng.gaussian();
                g.clipped |= clip_doa(doa);
                g.soi_path_svs.push_back(steering_vector(electrical_from_deg(doa), n));
            }
            break;
        }

        case MismatchKind::wavefront_distortion:
        {
            // Phase increments accumulate along the array; element 0 is the
            // phase reference.
            arma::cx_vec a = steering_vector(electrical_from_deg(g.soi_doa_deg), n);
            double psi = 0.0;
            for (arma::uword m = 1; m < n; ++m)
            {
                psi += model.phase_increment_std * rng.gaussian();
                a(m) *= std::polar(1.0, psi);
            }
            g.soi_path_svs.push_back(std::move(a));
            break;
        }

        case MismatchKind::coherent_scattering:
        {
            // Single composite steering vector: direct path plus coherently
            // scattered paths with random phases.
            std::vector<double> path_doas(static_cast<std::size_t>(model.scatter_paths));
            for (double &doa : path_doas)
            {
                doa = g.soi_doa_deg + model.scatter_std_deg * rng.gaussian();
                g.clipped |= clip_doa(doa);
            }
            arma::cx_vec a = steering_vector(electrical_from_deg(g.soi_doa_deg), n);
            for (double doa : path_doas)
            {
                const double phase = rng.uniform(0.0, 2.0 * M_PI);
                a += std::polar(1.0, phase) * steering_vector(electrical_from_deg(doa), n);
            }
            g.soi_path_svs.push_back(std::move(a));
            break;
        }
        }
        return g;
    }

    SnapshotBatch synthesize_trial(const ScenarioConfig &scenario, TrialRng &rng)
    {
        return synthesize_trial(scenario, scenario.snr_db, scenario.snapshots, rng);
    }

    SnapshotBatch synthesize_trial(const ScenarioConfig &scenario, double snr_db,
                                   unsigned snapshots, TrialRng &rng)
    {
        const arma::uword n = scenario.n_sensors;
        const arma::uword n_int = scenario.interferer_doas_deg.size();
        if (snapshots < 1)
            throw std::invalid_argument("synthesize_trial: need at least one snapshot");

        const TrialGeometry geom = apply_mismatch(scenario.mismatch, scenario, rng);

        SnapshotBatch batch;
        TrialTruth &truth = batch.truth;
        truth.noise_power = 1.0;
        truth.rank1 = geom.rank1;
        truth.clipped = geom.clipped;
        truth.actual_doas_deg.push_back(geom.soi_doa_deg);
        for (double d : geom.interferer_doas_deg)
            truth.actual_doas_deg.push_back(d);

        // Per-sensor SNR accounting: trace(R_s)/N = SNR * sigma_n^2.
        const double snr_lin = scenario.soi_enabled ? linear_from_db(snr_db) : 0.0;
        const std::size_t n_paths = geom.soi_path_svs.size();
        arma::cx_mat r_s(n, n, arma::fill::zeros);
        std::vector<double> path_powers(n_paths, 0.0);
        if (geom.rank1)
        {
            const arma::cx_vec &a = geom.soi_path_svs.front();
            const double norm2 = std::real(arma::cdot(a, a));
            const double sig_s = snr_lin * truth.noise_power * static_cast<double>(n) / norm2;
            path_powers[0] = sig_s;
            truth.soi_power = sig_s;
            truth.soi_sv = a;
            r_s = sig_s * (a * a.t());
        }
        else
        {
            // Equal power split over all paths; trace works out to N * SNR
            // because each ideal path has squared norm N.
            const double per_path = snr_lin * truth.noise_power / static_cast<double>(n_paths);
            for (std::size_t p = 0; p < n_paths; ++p)
            {
                path_powers[p] = per_path;
                r_s += per_path * (geom.soi_path_svs[p] * geom.soi_path_svs[p].t());
            }
            truth.soi_power = snr_lin * truth.noise_power;
            truth.soi_sv = geom.soi_path_svs.front();
        }
        truth.r_s = HermitianCovariance(r_s);

        truth.interferer_powers.set_size(n_int);
        std::vector<arma::cx_vec> int_svs;
        int_svs.reserve(n_int);
        arma::cx_mat r_ipn(n, n, arma::fill::eye);
        r_ipn *= truth.noise_power;
        for (arma::uword l = 0; l < n_int; ++l)
        {
            truth.interferer_powers(l) = linear_from_db(scenario.inr_db.at(l)) * truth.noise_power;
            int_svs.push_back(steering_vector(electrical_from_deg(geom.interferer_doas_deg[l]), n));
            r_ipn += truth.interferer_powers(l) * (int_svs.back() * int_svs.back().t());
        }
        truth.r_ipn = HermitianCovariance(r_ipn);

        batch.samples.set_size(n, snapshots);
        for (unsigned k = 0; k < snapshots; ++k)
        {
            arma::cx_vec x(n, arma::fill::zeros);
            if (scenario.soi_enabled)
            {
                for (std::size_t p = 0; p < n_paths; ++p)
                {
                    const cxd s = std::sqrt(path_powers[p]) * rng.complex_gaussian();
                    x += s * geom.soi_path_svs[p];
                }
            }
            for (arma::uword l = 0; l < n_int; ++l)
            {
                const cxd s = std::sqrt(truth.interferer_powers(l)) * rng.complex_gaussian();
                x += s * int_svs[l];
            }
            const double sigma_n = std::sqrt(truth.noise_power);
            for (arma::uword m = 0; m < n; ++m)
                x(m) += sigma_n * rng.complex_gaussian();
            batch.samples.col(k) = x;
        }
        return batch;
    }

} // namespace recdft
