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

#ifndef RECDFT_SPECTRUM_HPP
#define RECDFT_SPECTRUM_HPP

#include "recdft/scenario.hpp"
#include "recdft/types.hpp"

#include <vector>

namespace recdft
{
    // Uniform electrical-angle grid with SOI / noise-plus-interference bin
    // masks. The masks partition the bins: a bin belongs to the SOI sector iff
    // its physical angle asin(theta/pi) lies inside [soi_lo_deg, soi_hi_deg].
    struct AngularGrid
    {
        arma::uword n_dft = 0;
        arma::uword n_sensors = 0;
        arma::vec theta;           // electrical angles, one per bin
        std::vector<bool> soi_mask;
        std::vector<bool> ipn_mask;
        GridConvention convention = GridConvention::full_range;
        bool below_parseval = false; // n_dft < 2N-1: full-grid IDFT round trip is lossy

        arma::uword soi_bin_count() const;
        arma::uword ipn_bin_count() const;
    };

    // full_range: theta_i = 2*pi*i/n_dft, i = -n_dft/2 .. n_dft/2 - 1.
    // half_range: theta_i = -pi/2 + (i-1)*pi/n_dft, i = 1 .. n_dft.
    // Requires n_dft even and >= n_sensors; rejects sectors wider than 180 deg.
    AngularGrid build_grid(arma::uword n_dft, double soi_lo_deg, double soi_hi_deg,
                           arma::uword n_sensors,
                           GridConvention convention = GridConvention::full_range);

    struct AngularSpectrum
    {
        arma::vec values; // linear power, may be negative (truncation sidelobes)
        AngularGrid grid;
    };

    // P(theta_i) = sum_{n=-(N-1)}^{N-1} r(n) exp(-j n theta_i). The imaginary
    // residue must stay below 1e-9 * ||r||_1 (guaranteed by the conjugate
    // symmetry of the ACS); a violation throws.
    AngularSpectrum power_spectrum(const AutocorrelationSequence &acs, const AngularGrid &grid);

    // r~(n) = (1/n_dft) * sum_{theta_i in mask} P(theta_i) exp(+j n theta_i)
    // for n = -(N-1)..(N-1). Real spectrum values make the result conjugate
    // symmetric by construction.
    AutocorrelationSequence masked_correlation_sequence(const AngularSpectrum &spectrum,
                                                        const std::vector<bool> &mask);

    // Restriction to the noise-plus-interference bins; throws if the mask is empty.
    AutocorrelationSequence ipn_correlation_sequence(const AngularSpectrum &spectrum);

    // Hermitian Toeplitz matrix whose n-th diagonal above the main carries
    // r(n): T(k, j) = r(j - k). diagonal_average_acs inverts this exactly.
    HermitianCovariance toeplitz_from_acs(const AutocorrelationSequence &acs);

    // Lag window applied to the ACS before the DFT synthesis inside
    // reconstruct_npicm. bartlett yields the nonnegative spatial periodogram
    // (1/N) a(theta)^H R a(theta), whose -26 dB sidelobes keep strong
    // interference from burying the noise floor; rectangular is the raw
    // truncated-sequence transform.
    enum class LagWindow
    {
        rectangular,
        bartlett
    };

    struct NpicmOptions
    {
        LagWindow window = LagWindow::bartlett;

        // complement form: r~_ipn = r - IDFT over the SOI bins. Identical to the
        // ipn-bin IDFT whenever n_dft >= 2N-1, and free of lag aliasing below
        // that, so the interference structure is carried at full ACS accuracy.
        bool complement_form = true;

        // Loading target = floor_scale x lower-quartile of the synthesized
        // spectrum over the ipn bins. The subtraction of the SOI sector
        // removes the noise there as well; refilling the gap to the estimated
        // noise floor keeps the matrix positive definite without biasing the
        // interference structure. floor_scale = 0 reduces to the minimal
        // conditioning threshold 1e-8 * trace/N.
        double floor_scale = 2.0;
    };

    struct NpicmReconstruction
    {
        HermitianCovariance npicm;
        // Toeplitz matrix of the (windowed) full ACS; the variance-reduced SCM
        // surrogate the DSCM subtraction is taken against.
        HermitianCovariance smoothed_scm;
        // smoothed_scm - npicm before loading: the SOI-sector component.
        HermitianCovariance soi_sector;
        bool loading_applied = false;
        double loading = 0.0;
    };

    // Full pipeline: diagonal-average ACS -> (windowed) DFT spatial spectrum ->
    // sector-masked IDFT -> Hermitian Toeplitz NPICM, with a diagnostic-flagged
    // diagonal loading fallback that restores positive definiteness.
    NpicmReconstruction reconstruct_npicm(const HermitianCovariance &r_hat,
                                          const AngularGrid &grid,
                                          const NpicmOptions &options = {});

} // namespace recdft

#endif
