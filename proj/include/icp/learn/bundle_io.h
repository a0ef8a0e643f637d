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

#ifndef ICP_LEARN_BUNDLE_IO_H_
#define ICP_LEARN_BUNDLE_IO_H_

#include <iosfwd>
#include <string>

#include "icp/core/environment.h"
#include "icp/learn/agent_step.h"
#include "icp/learn/q_heads.h"

namespace icp::learn {

// Learned tables plus everything needed to replay them greedily.
struct PolicyBundle {
  std::string env_name;
  std::string env_params;
  Protocol protocol;
  QHeads heads;

  // Throws ConfigError when `env` is not the environment this bundle was
  // trained on.
  void CheckCompatible(const Environment& env) const;
};

PolicyBundle MakeBundle(const Environment& env, const Protocol& protocol,
                        const QHeads& heads);

// Text format, first line "icp-bundle v1". Values are written with 17
// significant digits, so a round trip is exact. Target tables are not
// stored; loading sets them equal to the live tables.
void SaveBundle(const PolicyBundle& bundle, std::ostream& out);
PolicyBundle LoadBundle(std::istream& in);
void SaveBundleFile(const PolicyBundle& bundle, const std::string& path);
PolicyBundle LoadBundleFile(const std::string& path);

}  // namespace icp::learn

#endif  // ICP_LEARN_BUNDLE_IO_H_
