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

#include "fpt/sample.hpp"

namespace fpt {

std::string_view to_string(ExitReason reason) {
  switch (reason) {
    case ExitReason::kEpsilon: return "epsilon";
    case ExitReason::kHorizon: return "horizon";
    case ExitReason::kGridHit: return "grid_hit";
    case ExitReason::kBridgeHit: return "bridge_hit";
  }
  return "unknown";
}

}  // namespace fpt
