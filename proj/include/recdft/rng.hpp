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

#ifndef RECDFT_RNG_HPP
#define RECDFT_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace recdft
{
    // Per-trial random stream. A (master seed, trial index) pair maps to an
    // independent substream, so trial t produces the same draws no matter in
    // which order or on which thread the trials run. Distribution transforms
    // are spelled out (Box-Muller) so a stream is reproducible bit-for-bit
    // across standard library implementations.
    class TrialRng
    {
    public:
        TrialRng(std::uint64_t master_seed, std::uint64_t trial_index);

        // Uniform on [0, 1).
        double uniform();

        double uniform(double lo, double hi);

        // Standard normal N(0, 1).
        double gaussian();

        // Circular complex Gaussian CN(0, 1): E|z|^2 = 1.
        std::complex<double> complex_gaussian();

    private:
        std::mt19937_64 engine_;
    };

} // namespace recdft

#endif
