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

#ifndef ICP_HARNESS_ORACLE_TASKS_H_
#define ICP_HARNESS_ORACLE_TASKS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "icp/envs/guessing.h"
#include "json.hpp"

namespace icp::harness {

// Machine-readable oracle results on the standard segment table.
nlohmann::json OracleTreeDepth(const std::vector<int>& alphabet);
nlohmann::json OracleHintMap(const std::vector<int>& alphabet);
// `policy` is scripted or random.
nlohmann::json OracleExhaustiveEval(const guessing::GuessConfig& config,
                                    const std::string& policy, size_t bound);

}  // namespace icp::harness

#endif  // ICP_HARNESS_ORACLE_TASKS_H_
