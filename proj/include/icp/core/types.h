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

#ifndef ICP_CORE_TYPES_H_
#define ICP_CORE_TYPES_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace icp {

using AgentId = int;
using ActionId = int;

// Placeholder entry for agents that do not act on a given step of a
// turn-based environment.
inline constexpr ActionId kNoAction = -1;

using JointAction = std::vector<ActionId>;

// A message on an implicit or direct channel. Zero-based: 0 <= value < K.
struct Message {
  int value = 0;

  friend bool operator==(const Message&, const Message&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalActionError : public std::runtime_error {
 public:
  IllegalActionError(AgentId agent, const std::string& what)
      : std::runtime_error(what), agent_(agent) {}
  AgentId agent() const { return agent_; }

 private:
  AgentId agent_;
};

class EpisodeFinishedError : public std::logic_error {
 public:
  EpisodeFinishedError() : std::logic_error("episode finished") {}
};

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by exhaustive procedures when the configured size bound is exceeded.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Common environment parameters.
struct EnvParams {
  double gamma = 1.0;
  int horizon = 1;

  void Validate() const;
};

}  // namespace icp

#endif  // ICP_CORE_TYPES_H_
