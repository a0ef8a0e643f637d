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

#ifndef ICP_LEARN_CLUSTER_H_
#define ICP_LEARN_CLUSTER_H_

#include <cstdint>
#include <vector>

#include "icp/channel/message_strategy.h"
#include "icp/core/environment.h"
#include "icp/learn/agent_step.h"
#include "icp/learn/q_heads.h"

namespace icp::learn {

// Lloyd's k-means on L2-normalized copies of `points` with k = min(k, n).
// The first center is point seed % n; each further center is the point
// farthest from the chosen ones. Ties go to the lowest index. Labels are
// renumbered by order of first occurrence.
std::vector<int> KMeans(const std::vector<std::vector<double>>& points, int k,
                        uint64_t seed, int max_iterations = 100);

// Mean action-value row per hidden context, gathered at the acting agent's
// own key during rollouts.
struct ContextVectors {
  std::vector<std::vector<double>> mean;
  std::vector<int> counts;
};

ContextVectors CollectContextVectors(const Environment& prototype,
                                     const QHeads& heads,
                                     const Protocol& protocol, int episodes,
                                     double epsilon, uint64_t seed);

// phi(context) = cluster label of the context's vector. Contexts never
// observed get label 0. The strategy alphabet has size `k`.
MessageStrategy ClusterInformationSets(const ContextVectors& vectors, int k,
                                       uint64_t seed);

}  // namespace icp::learn

#endif  // ICP_LEARN_CLUSTER_H_
