// Copyright 2026 The fpt Authors
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

#include <array>
#include <cstdint>
#include <optional>

namespace fpt {

// 64-bit finalizer from SplitMix64; used to derive substream seeds.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Deterministic random stream identified by (master_seed, stream_index).
///
/// The underlying engine is xoshiro256** (period 2^256 - 1). Its state is
/// seeded from a SplitMix64 sequence started at a mix of both identifiers,
/// so two streams with the same identifiers produce the same variates on any
/// thread and in any execution order. A stream is single-owner.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on (0, 1], 53 bits of resolution.
  double uniform() noexcept;

  // Box-Muller pairs; the second member is cached for the next call.
  double gaussian() noexcept;

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::array<std::uint64_t, 4> state_{};
  std::optional<double> spare_gaussian_;
};

/// Parameters of the inverse Gaussian law I(mean, shape).
struct InverseGaussianParams {
  double mean;
  double shape;

  /// Throws Error(kInvalidArgument) unless both are finite and positive.
  InverseGaussianParams(double mean, double shape);
};

double sample_gaussian(RngStream& stream) noexcept;

/// Michael-Schucany-Haas transformation with two roots. Always finite and > 0.
double sample_inverse_gaussian(RngStream& stream,
                               const InverseGaussianParams& params) noexcept;

RngStream split_stream(const RngStream& stream, std::uint64_t trial_index);

}  // namespace fpt
