// Copyright 2026 The weaklab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace weaklab {

// Deterministic pseudo-random source. The engine is std::mt19937_64, whose
// output sequence is fixed by the C++ standard, and every derived draw below
// uses only bit operations and IEEE arithmetic, so identical seeds give
// identical streams on every conforming platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the spare value is cached so draws
    // consume uniforms in a fixed, countable pattern.
    double next_gaussian();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Bit-mixing finalizer with full 64-bit avalanche (splitmix64 style).
std::uint64_t mix_bits(std::uint64_t x);

}  // namespace weaklab
