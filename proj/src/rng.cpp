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

#include "recdft/rng.hpp"

#include <cmath>

namespace recdft
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t &state)
        {
            state += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            return z ^ (z >> 31);
        }
    } // namespace

    TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
    {
        std::uint64_t s = master_seed ^ (0xB5297A4D3F84D5A9ULL * (trial_index + 1));
        const std::uint64_t a = splitmix64(s);
        const std::uint64_t b = splitmix64(s);
        std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        engine_.seed(seq);
    }

    double TrialRng::uniform()
    {
        // 53-bit mantissa from the top bits of the engine output.
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double TrialRng::uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform();
    }

    double TrialRng::gaussian()
    {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    std::complex<double> TrialRng::complex_gaussian()
    {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1)); // |z|^2 ~ Exp(1) => E|z|^2 = 1
        return std::polar(r, 2.0 * M_PI * u2);
    }

} // namespace recdft
