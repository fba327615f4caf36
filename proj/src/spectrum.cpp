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

#include "recdft/spectrum.hpp"

#include "recdft/covariance.hpp"

#include <algorithm>
#include <cmath>

namespace recdft
{
    arma::uword AngularGrid::soi_bin_count() const
    {
        return static_cast<arma::uword>(std::count(soi_mask.begin(), soi_mask.end(), true));
    }

    arma::uword AngularGrid::ipn_bin_count() const
    {
        return static_cast<arma::uword>(std::count(ipn_mask.begin(), ipn_mask.end(), true));
    }

    AngularGrid build_grid(arma::uword n_dft, double soi_lo_deg, double soi_hi_deg,
                           arma::uword n_sensors, GridConvention convention)
    {
        if (n_dft % 2 != 0)
            throw std::invalid_argument("build_grid: n_dft must be even");
        if (n_dft < n_sensors)
            throw std::invalid_argument("build_grid: n_dft must be >= n_sensors");
        if (soi_hi_deg < soi_lo_deg)
            throw std::invalid_argument("build_grid: empty SOI sector interval");
        if (soi_hi_deg - soi_lo_deg >= 180.0)
            throw std::invalid_argument("build_grid: SOI sector wider than 180 degrees");

        AngularGrid g;
        g.n_dft = n_dft;
        g.n_sensors = n_sensors;
        g.convention = convention;
        g.below_parseval = (n_dft < 2 * n_sensors - 1);
        g.theta.set_size(n_dft);
        if (convention == GridConvention::full_range)
        {
            const auto half = static_cast<long long>(n_dft / 2);
            for (long long i = -half; i < half; ++i)
                g.theta(static_cast<arma::uword>(i + half)) =
                    2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_dft);
        }
        else
        {
            for (arma::uword i = 1; i <= n_dft; ++i)
                g.theta(i - 1) = -M_PI / 2.0 +
                                 static_cast<double>(i - 1) * M_PI / static_cast<double>(n_dft);
        }

        g.soi_mask.resize(n_dft, false);
        g.ipn_mask.resize(n_dft, false);
        for (arma::uword i = 0; i < n_dft; ++i)
        {
            const double phys = std::asin(std::clamp(g.theta(i) / M_PI, -1.0, 1.0)) * 180.0 / M_PI;
            g.soi_mask[i] = (phys >= soi_lo_deg && phys <= soi_hi_deg);
            g.ipn_mask[i] = !g.soi_mask[i];
        }
        return g;
    }

    AngularSpectrum power_spectrum(const AutocorrelationSequence &acs, const AngularGrid &grid)
    {
        const int max_lag = acs.max_lag();
        AngularSpectrum spec;
        spec.grid = grid;
        spec.values.set_size(grid.n_dft);
        const double residue_bound = 1e-9 * acs.l1_norm() + 1e-15;
        for (arma::uword i = 0; i < grid.n_dft; ++i)
        {
            cxd sum(0.0, 0.0);
            for (int n = -max_lag; n <= max_lag; ++n)
                sum += acs.at(n) * std::polar(1.0, -static_cast<double>(n) * grid.theta(i));
            if (std::abs(sum.imag()) > residue_bound)
                throw std::logic_error("power_spectrum: imaginary residue exceeds bound");
            spec.values(i) = sum.real();
        }
        return spec;
    }

    AutocorrelationSequence masked_correlation_sequence(const AngularSpectrum &spectrum,
                                                        const std::vector<bool> &mask)
    {
        const AngularGrid &g = spectrum.grid;
        if (mask.size() != g.n_dft)
            throw std::invalid_argument("masked_correlation_sequence: mask/grid size mismatch");
        const arma::uword n = g.n_sensors;
        arma::cx_vec head(n, arma::fill::zeros);
        for (arma::uword i = 0; i < g.n_dft; ++i)
        {
            if (!mask[i])
                continue;
            for (arma::uword lag = 0; lag < n; ++lag)
                head(lag) += spectrum.values(i) *
                             std::polar(1.0, static_cast<double>(lag) * g.theta(i));
        }
        head /= static_cast<double>(g.n_dft);
        return AutocorrelationSequence::from_nonnegative_lags(head);
    }

    AutocorrelationSequence ipn_correlation_sequence(const AngularSpectrum &spectrum)
    {
        if (spectrum.grid.ipn_bin_count() == 0)
            throw std::invalid_argument("ipn_correlation_sequence: empty ipn mask");
        return masked_correlation_sequence(spectrum, spectrum.grid.ipn_mask);
    }

    HermitianCovariance toeplitz_from_acs(const AutocorrelationSequence &acs)
    {
        const arma::uword n = acs.n_sensors();
        arma::cx_mat t(n, n);
        for (arma::uword k = 0; k < n; ++k)
            for (arma::uword j = 0; j < n; ++j)
                t(k, j) = acs.at(static_cast<int>(j) - static_cast<int>(k));
        return HermitianCovariance(std::move(t));
    }

    namespace
    {
        AutocorrelationSequence windowed(const AutocorrelationSequence &acs, LagWindow window)
        {
            if (window == LagWindow::rectangular)
                return acs;
            const int m = acs.max_lag();
            const double n = static_cast<double>(acs.n_sensors());
            arma::cx_vec v = acs.values();
            for (int lag = -m; lag <= m; ++lag)
                v(static_cast<arma::uword>(lag + m)) *= (n - std::abs(lag)) / n;
            return AutocorrelationSequence(std::move(v));
        }

        double lower_quartile(std::vector<double> v)
        {
            if (v.empty())
                return 0.0;
            std::sort(v.begin(), v.end());
            return v[(v.size() - 1) / 4];
        }
    } // namespace

    NpicmReconstruction reconstruct_npicm(const HermitianCovariance &r_hat,
                                          const AngularGrid &grid, const NpicmOptions &options)
    {
        if (grid.n_sensors != r_hat.dim())
            throw std::invalid_argument("reconstruct_npicm: grid/covariance dimension mismatch");
        if (grid.ipn_bin_count() == 0)
            throw std::invalid_argument("reconstruct_npicm: empty ipn mask");

        // Stage 1-2: diagonal-averaged ACS and its (windowed) spatial spectrum.
        const AutocorrelationSequence acs = windowed(diagonal_average_acs(r_hat), options.window);
        const AngularSpectrum spectrum = power_spectrum(acs, grid);

        NpicmReconstruction out;
        out.smoothed_scm = toeplitz_from_acs(acs);

        // Stage 3: correlation sequence of the noise-plus-interference part.
        if (options.complement_form)
        {
            const AutocorrelationSequence soi_acs =
                masked_correlation_sequence(spectrum, grid.soi_mask);
            out.soi_sector = toeplitz_from_acs(soi_acs);
            out.npicm = out.smoothed_scm - out.soi_sector;
        }
        else
        {
            const AutocorrelationSequence ipn_acs = ipn_correlation_sequence(spectrum);
            out.npicm = toeplitz_from_acs(ipn_acs);
            out.soi_sector = out.smoothed_scm - out.npicm;
        }

        // Stage 4: conditioning fallback. Lift the smallest eigenvalue to the
        // loading target; flagged so experiments can report trigger rates.
        const double tiny = 1e-8 * std::abs(out.npicm.trace_real()) /
                            static_cast<double>(grid.n_sensors);
        double target = tiny;
        if (options.floor_scale > 0.0)
        {
            std::vector<double> ipn_values;
            ipn_values.reserve(grid.n_dft);
            for (arma::uword i = 0; i < grid.n_dft; ++i)
                if (grid.ipn_mask[i])
                    ipn_values.push_back(spectrum.values(i));
            target = std::max(tiny, options.floor_scale * lower_quartile(std::move(ipn_values)));
        }
        const double ev_min = out.npicm.min_eigenvalue();
        if (ev_min < target)
        {
            out.loading = target - ev_min;
            out.npicm = out.npicm.loaded(out.loading);
            out.loading_applied = true;
        }
        return out;
    }

} // namespace recdft
