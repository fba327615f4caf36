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

#ifndef RECDFT_SCENARIO_HPP
#define RECDFT_SCENARIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace recdft
{
    enum class MismatchKind
    {
        none,
        random_look_direction,
        incoherent_scattering,
        wavefront_distortion,
        coherent_scattering
    };

    std::string to_string(MismatchKind kind);
    MismatchKind mismatch_kind_from_string(const std::string &name);

    struct MismatchModel
    {
        MismatchKind kind = MismatchKind::none;
        double look_halfwidth_deg = 4.0;  // random_look_direction: DoA offset ~ U[-hw, hw]
        int scatter_paths = 4;            // incoherent/coherent scattering
        double scatter_std_deg = 2.0;     // scattered-path angle std-dev around the nominal DoA
        double phase_increment_std = 0.04; // wavefront distortion, radians per element

        void validate() const;
    };

    // Inclusive sweep start:step:stop.
    struct SweepSpec
    {
        double start = 0.0;
        double step = 1.0;
        double stop = 0.0;
        bool active = false;

        std::vector<double> values() const;
    };

    struct BeamformerSelection
    {
        bool rec_dft = true;
        bool smi = true;
        bool capon_rec = false;
        bool optimal = true;
        double smi_loading = 0.0; // diagonal loading added to the SCM before inversion
        int capon_rec_points = 300;
    };

    enum class GridConvention
    {
        full_range, // theta_i = 2*pi*i/N_DFT over [-pi, pi)
        half_range  // theta_i = -pi/2 + (i-1)*pi/N_DFT over [-pi/2, pi/2)
    };

    struct ConfigError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct ScenarioConfig
    {
        unsigned n_sensors = 30;
        double soi_doa_deg = 0.0;
        bool soi_enabled = true;
        std::vector<double> interferer_doas_deg{40.0, -50.0};
        std::vector<double> inr_db{30.0, 30.0};
        double snr_db = 10.0;
        SweepSpec snr_sweep;
        unsigned snapshots = 30;
        SweepSpec snapshot_sweep;
        MismatchModel mismatch;
        unsigned n_trials = 100;
        std::uint64_t master_seed = 1;
        unsigned n_dft = 38;
        double soi_sector_halfwidth_deg = 4.0;
        BeamformerSelection beamformers;
        GridConvention grid_convention = GridConvention::full_range;
        std::string csv_path;
        std::string plot_path;
        bool plot_deviation = false;

        void validate() const; // throws ConfigError
    };

    // The four built-in mismatch scenarios with the reference parameter set
    // (N = 30, interferers {40, -50} deg at INR 30 dB, K = 30, 100 trials,
    // N_DFT = 38, SOI sector half-width 4 deg).
    ScenarioConfig preset(const std::string &name);
    std::vector<std::string> preset_names();

    // Flat key-value config file with [sections]; throws ConfigError with a
    // line-numbered message on malformed input.
    ScenarioConfig parse_config_file(const std::string &path);
    ScenarioConfig parse_config_text(const std::string &text, const std::string &origin);

} // namespace recdft

#endif
