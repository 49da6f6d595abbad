// Copyright 2026 The gadsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace gadsim {

/// splitmix64 finalizer; used only to derive well-separated seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Portable random stream: std::mt19937_64 (whose output sequence the C++
/// standard pins down exactly) seeded through splitmix64. Distributions are
/// implemented here rather than taken from <random>, whose algorithms are
/// implementation-defined, so draws are bit-identical on every platform.
class RngStream {
   public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {
    }

    std::uint64_t seed() const noexcept {
        return seed_;
    }

    /// Independent stream for work item `index`, depending only on
    /// (seed, index) and not on how many values this stream has produced.
    RngStream substream(std::uint64_t index) const {
        return RngStream(splitmix64(seed_ ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
    }

    std::uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Exact binomial(n, p) draw as a sum of Bernoulli trials.
    std::uint64_t binomial(std::uint64_t n, double p) {
        if (p <= 0) {
            return 0;
        }
        if (p >= 1) {
            return n;
        }
        std::uint64_t hits = 0;
        for (std::uint64_t k = 0; k < n; k++) {
            hits += uniform() < p ? 1 : 0;
        }
        return hits;
    }

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace gadsim
