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

#include "recdft/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace recdft
{
    std::string to_string(MismatchKind kind)
    {
        switch (kind)
        {
        case MismatchKind::none: return "none";
        case MismatchKind::random_look_direction: return "random_look";
        case MismatchKind::incoherent_scattering: return "incoherent";
        case MismatchKind::wavefront_distortion: return "wavefront";
        case MismatchKind::coherent_scattering: return "coherent";
        }
        return "none";
    }

    MismatchKind mismatch_kind_from_string(const std::string &name)
    {
        if (name == "none") return MismatchKind::none;
        if (name == "random_look") return MismatchKind::random_look_direction;
        if (name == "incoherent") return MismatchKind::incoherent_scattering;
        if (name == "wavefront") return MismatchKind::wavefront_distortion;
        if (name == "coherent") return MismatchKind::coherent_scattering;
        throw ConfigError("unknown mismatch kind '" + name + "'");
    }

    void MismatchModel::validate() const
    {
        if (!std::isfinite(look_halfwidth_deg) || look_halfwidth_deg < 0.0)
            throw ConfigError("mismatch: look half-width must be finite and >= 0");
        if (scatter_paths < 0)
            throw ConfigError("mismatch: scatter path count must be >= 0");
        if (!std::isfinite(scatter_std_deg) || scatter_std_deg < 0.0)
            throw ConfigError("mismatch: scatter std-dev must be finite and >= 0");
        if (!std::isfinite(phase_increment_std) || phase_increment_std < 0.0)
            throw ConfigError("mismatch: phase increment std-dev must be finite and >= 0");
    }

    std::vector<double> SweepSpec::values() const
    {
        std::vector<double> out;
        if (!active)
            return out;
        if (step <= 0.0)
            throw ConfigError("sweep: step must be > 0");
        for (double v = start; v <= stop + 1e-9 * std::abs(step); v += step)
            out.push_back(v);
        if (out.empty())
            throw ConfigError("sweep: empty range");
        return out;
    }

    void ScenarioConfig::validate() const
    {
        if (n_sensors < 2)
            throw ConfigError("n_sensors must be >= 2");
        if (std::abs(soi_doa_deg) >= 90.0)
            throw ConfigError("SOI DoA must lie inside (-90, 90) degrees");
        for (double d : interferer_doas_deg)
            if (std::abs(d) >= 90.0)
                throw ConfigError("interferer DoAs must lie inside (-90, 90) degrees");
        if (inr_db.size() != interferer_doas_deg.size())
            throw ConfigError("inr_db must have one entry per interferer");
        if (!std::isfinite(snr_db))
            throw ConfigError("snr_db must be finite");
        if (snapshots < 1)
            throw ConfigError("snapshots must be >= 1");
        if (n_trials < 1)
            throw ConfigError("n_trials must be >= 1");
        if (soi_sector_halfwidth_deg <= 0.0)
            throw ConfigError("soi_sector_halfwidth_deg must be > 0");
        if (n_dft % 2 != 0 || n_dft < n_sensors)
            throw ConfigError("n_dft must be even and >= n_sensors");
        if (snr_sweep.active && snapshot_sweep.active)
            throw ConfigError("choose a single sweep axis (snr_sweep or snapshot_sweep)");
        if (snr_sweep.active)
            snr_sweep.values();
        if (snapshot_sweep.active)
        {
            for (double v : snapshot_sweep.values())
                if (v < 1.0 || std::floor(v) != v)
                    throw ConfigError("snapshot_sweep values must be positive integers");
        }
        if (beamformers.smi_loading < 0.0)
            throw ConfigError("smi_loading must be >= 0");
        if (beamformers.capon_rec_points < 2)
            throw ConfigError("capon_rec_points must be >= 2");
        mismatch.validate();
    }

    ScenarioConfig preset(const std::string &name)
    {
        ScenarioConfig c;
        c.beamformers.capon_rec = true;
        if (name == "random-look")
            c.mismatch.kind = MismatchKind::random_look_direction;
        else if (name == "incoherent")
            c.mismatch.kind = MismatchKind::incoherent_scattering;
        else if (name == "wavefront")
            c.mismatch.kind = MismatchKind::wavefront_distortion;
        else if (name == "coherent")
            c.mismatch.kind = MismatchKind::coherent_scattering;
        else
            throw ConfigError("unknown preset '" + name + "' (try: random-look, incoherent, wavefront, coherent)");
        return c;
    }

    std::vector<std::string> preset_names()
    {
        return {"random-look", "incoherent", "wavefront", "coherent"};
    }

    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return "";
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        [[noreturn]] void fail(const std::string &origin, int line, const std::string &what)
        {
            throw ConfigError(origin + ":" + std::to_string(line) + ": " + what);
        }

        double to_double(const std::string &origin, int line, const std::string &v)
        {
            try
            {
                std::size_t pos = 0;
                const double d = std::stod(v, &pos);
                if (pos != v.size())
                    fail(origin, line, "trailing characters in number '" + v + "'");
                return d;
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::exception &)
            {
                fail(origin, line, "expected a number, got '" + v + "'");
            }
        }

        unsigned to_unsigned(const std::string &origin, int line, const std::string &v)
        {
            const double d = to_double(origin, line, v);
            if (d < 0.0 || std::floor(d) != d)
                fail(origin, line, "expected a non-negative integer, got '" + v + "'");
            return static_cast<unsigned>(d);
        }

        bool to_bool(const std::string &origin, int line, const std::string &v)
        {
            if (v == "on" || v == "true" || v == "1") return true;
            if (v == "off" || v == "false" || v == "0") return false;
            fail(origin, line, "expected on/off, got '" + v + "'");
        }

        std::vector<double> to_list(const std::string &origin, int line, const std::string &v)
        {
            std::vector<double> out;
            std::stringstream ss(v);
            std::string item;
            while (std::getline(ss, item, ','))
            {
                item = trim(item);
                if (!item.empty())
                    out.push_back(to_double(origin, line, item));
            }
            return out;
        }

        SweepSpec to_sweep(const std::string &origin, int line, const std::string &v)
        {
            SweepSpec s;
            std::stringstream ss(v);
            std::string part;
            std::vector<double> parts;
            while (std::getline(ss, part, ':'))
                parts.push_back(to_double(origin, line, trim(part)));
            if (parts.size() != 3)
                fail(origin, line, "sweep must be start:step:stop, got '" + v + "'");
            s.start = parts[0];
            s.step = parts[1];
            s.stop = parts[2];
            s.active = true;
            return s;
        }
    } // namespace

    ScenarioConfig parse_config_text(const std::string &text, const std::string &origin)
    {
        ScenarioConfig c;
        std::string section;
        std::istringstream in(text);
        std::string raw;
        int line = 0;
        while (std::getline(in, raw))
        {
            ++line;
            std::string s = raw;
            const auto hash = s.find('#');
            if (hash != std::string::npos)
                s = s.substr(0, hash);
            s = trim(s);
            if (s.empty())
                continue;
            if (s.front() == '[')
            {
                if (s.back() != ']')
                    fail(origin, line, "unterminated section header");
                section = trim(s.substr(1, s.size() - 2));
                if (section != "scenario" && section != "beamformers" && section != "output")
                    fail(origin, line, "unknown section '" + section + "'");
                continue;
            }
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                fail(origin, line, "expected key = value");
            const std::string key = trim(s.substr(0, eq));
            const std::string val = trim(s.substr(eq + 1));
            if (key.empty() || val.empty())
                fail(origin, line, "expected key = value");

            if (section == "scenario" || section.empty())
            {
                if (key == "n_sensors") c.n_sensors = to_unsigned(origin, line, val);
                else if (key == "soi_doa_deg") c.soi_doa_deg = to_double(origin, line, val);
                else if (key == "soi_enabled") c.soi_enabled = to_bool(origin, line, val);
                else if (key == "interferers_deg") c.interferer_doas_deg = to_list(origin, line, val);
                else if (key == "inr_db") c.inr_db = to_list(origin, line, val);
                else if (key == "snr_db") c.snr_db = to_double(origin, line, val);
                else if (key == "snr_sweep") c.snr_sweep = to_sweep(origin, line, val);
                else if (key == "snapshots") c.snapshots = to_unsigned(origin, line, val);
                else if (key == "snapshot_sweep") c.snapshot_sweep = to_sweep(origin, line, val);
                else if (key == "mismatch")
                {
                    try { c.mismatch.kind = mismatch_kind_from_string(val); }
                    catch (const ConfigError &e) { fail(origin, line, e.what()); }
                }
                else if (key == "look_halfwidth_deg") c.mismatch.look_halfwidth_deg = to_double(origin, line, val);
                else if (key == "scatter_paths") c.mismatch.scatter_paths = static_cast<int>(to_unsigned(origin, line, val));
                else if (key == "scatter_std_deg") c.mismatch.scatter_std_deg = to_double(origin, line, val);
                else if (key == "phase_std_rad") c.mismatch.phase_increment_std = to_double(origin, line, val);
                else if (key == "n_trials") c.n_trials = to_unsigned(origin, line, val);
                else if (key == "seed") c.master_seed = static_cast<std::uint64_t>(to_double(origin, line, val));
                else if (key == "n_dft") c.n_dft = to_unsigned(origin, line, val);
                else if (key == "soi_sector_halfwidth_deg") c.soi_sector_halfwidth_deg = to_double(origin, line, val);
                else if (key == "grid_convention")
                {
                    if (val == "full_range") c.grid_convention = GridConvention::full_range;
                    else if (val == "half_range") c.grid_convention = GridConvention::half_range;
                    else fail(origin, line, "grid_convention must be full_range or half_range");
                }
                else fail(origin, line, "unknown key '" + key + "' in [scenario]");
            }
            else if (section == "beamformers")
            {
                if (key == "rec_dft") c.beamformers.rec_dft = to_bool(origin, line, val);
                else if (key == "smi") c.beamformers.smi = to_bool(origin, line, val);
                else if (key == "capon_rec") c.beamformers.capon_rec = to_bool(origin, line, val);
                else if (key == "optimal") c.beamformers.optimal = to_bool(origin, line, val);
                else if (key == "smi_loading") c.beamformers.smi_loading = to_double(origin, line, val);
                else if (key == "capon_rec_points") c.beamformers.capon_rec_points = static_cast<int>(to_unsigned(origin, line, val));
                else fail(origin, line, "unknown key '" + key + "' in [beamformers]");
            }
            else // output
            {
                if (key == "csv") c.csv_path = val;
                else if (key == "plot") c.plot_path = val;
                else if (key == "metric")
                {
                    if (val == "sinr") c.plot_deviation = false;
                    else if (val == "deviation") c.plot_deviation = true;
                    else fail(origin, line, "metric must be sinr or deviation");
                }
                else fail(origin, line, "unknown key '" + key + "' in [output]");
            }
        }
        c.validate();
        return c;
    }

    ScenarioConfig parse_config_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_config_text(ss.str(), path);
    }

} // namespace recdft
