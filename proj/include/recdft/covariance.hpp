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

#ifndef RECDFT_COVARIANCE_HPP
#define RECDFT_COVARIANCE_HPP

#include "recdft/types.hpp"

namespace recdft
{
    // Sample covariance matrix (1/K) sum_k x(k) x(k)^H from an N x K snapshot
    // matrix. Hermitian by construction; K < N leaves it rank deficient and
    // nothing here attempts to invert it.
    HermitianCovariance sample_covariance(const arma::cx_mat &snapshots);

    // Autocorrelation sequence by diagonal averaging:
    //   r(n) = (1/(N-n)) * sum_{k} R(k, k+n),  n >= 0   (n-th upper diagonal)
    //   r(-n) = conj(r(n))
    // For a Hermitian R the conjugate mirror equals the average of the n-th
    // lower diagonal, so both one-sided forms agree.
    AutocorrelationSequence diagonal_average_acs(const HermitianCovariance &R);

} // namespace recdft

#endif
