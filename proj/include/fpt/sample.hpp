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

#include <cstdint>
#include <string_view>
#include <vector>

namespace fpt {

enum class ExitReason {
  kEpsilon,     // boundary gap fell to epsilon
  kHorizon,     // truncation horizon K reached
  kGridHit,     // Euler path crossed at a grid time
  kBridgeHit,   // Euler bridge correction declared a crossing inside a cell
};

std::string_view to_string(ExitReason reason);

/// One visited point of an iterative run.
struct TracePoint {
  double time;      // T_k
  double boundary;  // phi(T_k)
  double gap;       // algo1: phi(T_k) - phi(T_{k-1}); algo2: H_k
  double draw;      // variate that produced T_k (G for algo1, G-hat for algo2)
};

/// Outcome of one simulated first passage.
struct HitSample {
  double tau = 0.0;
  std::uint64_t steps = 0;
  bool truncated = false;
  ExitReason exit = ExitReason::kEpsilon;
  std::vector<TracePoint> trace;  // empty unless recording was requested
};

}  // namespace fpt
