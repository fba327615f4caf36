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

#include "recdft/covariance.hpp"

namespace recdft
{
    HermitianCovariance sample_covariance(const arma::cx_mat &snapshots)
    {
        if (snapshots.n_cols < 1)
            throw std::invalid_argument("sample_covariance: need at least one snapshot");
        arma::cx_mat r = snapshots * snapshots.t();
        r /= static_cast<double>(snapshots.n_cols);
        return HermitianCovariance(std::move(r));
    }

    AutocorrelationSequence diagonal_average_acs(const HermitianCovariance &R)
    {
        const arma::uword n = R.dim();
        if (n < 2)
            throw std::invalid_argument("diagonal_average_acs: need N >= 2");
        const arma::cx_mat &m = R.mat();
        arma::cx_vec head(n);
        for (arma::uword lag = 0; lag < n; ++lag)
        {
            cxd sum(0.0, 0.0);
            for (arma::uword k = 0; k + lag < n; ++k)
                sum += m(k, k + lag);
            head(lag) = sum / static_cast<double>(n - lag);
        }
        return AutocorrelationSequence::from_nonnegative_lags(head);
    }

} // namespace recdft
