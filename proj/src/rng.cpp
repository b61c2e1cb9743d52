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

#include "fpt/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fpt/error.hpp"

namespace fpt {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
  // Two rounds of mixing keep (s, i) and (s', i') with s ^ i == s' ^ i' apart.
  std::uint64_t sm = mix64(mix64(master_seed + kGolden) ^
                           (stream_index * 0xd1342543de82ef95ULL + kGolden));
  for (auto& word : state_) {
    sm += kGolden;
    word = mix64(sm);
  }
}

std::uint64_t RngStream::next_u64() noexcept {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::uniform() noexcept {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::gaussian() noexcept {
  if (spare_gaussian_) {
    const double g = *spare_gaussian_;
    spare_gaussian_.reset();
    return g;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_gaussian_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

InverseGaussianParams::InverseGaussianParams(double mean_, double shape_)
    : mean(mean_), shape(shape_) {
  if (!(std::isfinite(mean) && mean > 0.0 && std::isfinite(shape) &&
        shape > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "inverse Gaussian parameters must be finite and positive");
  }
}

double sample_gaussian(RngStream& stream) noexcept { return stream.gaussian(); }

double sample_inverse_gaussian(RngStream& stream,
                               const InverseGaussianParams& params) noexcept {
  const double mu = params.mean;
  const double g = stream.gaussian();
  const double nu = g * g;
  // With y = mu*nu/lambda the smaller root is mu*(1 + y/2 - sqrt(y + y^2/4)).
  // The roots multiply to mu^2, so write it as mu/q with q the larger factor;
  // this avoids the cancellation of the textbook form when y is large.
  const double y = mu * nu / params.shape;
  double radicand = y + 0.25 * y * y;
  double root;
  if (std::isfinite(radicand)) {
    if (!(radicand > 0.0)) radicand = 0.0;
    root = std::sqrt(radicand);
  } else {
    root = 0.5 * y * std::sqrt(1.0 + 4.0 / y);
  }
  const double q = 1.0 + 0.5 * y + root;
  // Accept the smaller root mu/q with probability mu/(mu + mu/q) = q/(1+q).
  const double u = stream.uniform();
  double x = (u * (1.0 + q) <= q) ? mu / q : mu * q;
  constexpr double kTiny = std::numeric_limits<double>::min();
  constexpr double kHuge = std::numeric_limits<double>::max();
  if (!(x >= kTiny)) x = kTiny;
  if (!(x <= kHuge)) x = kHuge;
  return x;
}

RngStream split_stream(const RngStream& stream, std::uint64_t trial_index) {
  return RngStream(stream.master_seed(), trial_index);
}

}  // namespace fpt
