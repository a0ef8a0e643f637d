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

#ifndef ICP_ENVS_REGISTRY_H_
#define ICP_ENVS_REGISTRY_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "icp/core/environment.h"

namespace icp {

using ParamMap = std::map<std::string, std::string>;

// Known environment names: guessing, revealing, hanabi_lite.
std::vector<std::string> RegisteredEnvironments();

// Builds an environment from string parameters. Throws ConfigError on an
// unknown name, an unknown key, or a malformed value.
std::unique_ptr<Environment> MakeEnvironment(const std::string& name,
                                             const ParamMap& params);

// Parsers shared with the config layer.
int ParseIntValue(const std::string& key, const std::string& value);
double ParseDoubleValue(const std::string& key, const std::string& value);
bool ParseBoolValue(const std::string& key, const std::string& value);
std::vector<int> ParseIntList(const std::string& key,
                              const std::string& value);

}  // namespace icp

#endif  // ICP_ENVS_REGISTRY_H_
