// Copyright 2026 The ICP Simulator Authors
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

#ifndef ICP_CORE_OBS_KEY_H_
#define ICP_CORE_OBS_KEY_H_

#include <string>

#include "icp/core/episode.h"
#include "icp/core/inbox.h"

namespace icp {

// Canonical byte serialization of (observation, decoded inbox), used as the
// tabular state index. Integers are written little-endian so keys are
// identical across processes and platforms. The step counter is not part of
// the key; environments that need time in the state put it in the payload.
struct ObservationKey {
  std::string bytes;

  friend bool operator==(const ObservationKey&, const ObservationKey&) =
      default;
  friend auto operator<=>(const ObservationKey&, const ObservationKey&) =
      default;
};

struct KeyOptions {
  // Drop inbox entries older than the current step.
  bool fresh_only = false;
};

ObservationKey MakeObservationKey(const Observation& obs, const Inbox& inbox,
                                  KeyOptions options = {});

// Lowercase hex rendering of key bytes, for text dumps.
std::string KeyToHex(const std::string& bytes);
std::string KeyFromHex(const std::string& hex);

}  // namespace icp

#endif  // ICP_CORE_OBS_KEY_H_
