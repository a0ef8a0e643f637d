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

#ifndef ICP_LEARN_Q_HEADS_H_
#define ICP_LEARN_Q_HEADS_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "icp/core/obs_key.h"

namespace icp::learn {

// Tabular Q-function: one row of `width` values per observation key. Rows
// that were never written read as default_value.
class QTable {
 public:
  QTable() = default;
  QTable(int width, double default_value);

  int width() const { return width_; }
  double default_value() const { return default_value_; }
  size_t size() const { return rows_.size(); }

  double Get(const ObservationKey& key, int index) const;
  // A copy of the row, or the default row.
  std::vector<double> Row(const ObservationKey& key) const;
  // Inserts the default row on first access.
  double& At(const ObservationKey& key, int index);
  void SetRow(const ObservationKey& key, std::vector<double> row);

  // Keys in byte order.
  std::vector<std::string> SortedKeys() const;
  const std::unordered_map<std::string, std::vector<double>>& rows() const {
    return rows_;
  }

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  void CheckIndex(int index) const;

  int width_ = 0;
  double default_value_ = 0.0;
  std::unordered_map<std::string, std::vector<double>> rows_;
};

// Action head, message head and their target copies.
struct QHeads {
  QTable action;
  QTable message;
  QTable action_target;
  QTable message_target;

  QHeads() = default;
  QHeads(int action_width, int message_width, double default_value);

  void SyncTargets();
};

}  // namespace icp::learn

#endif  // ICP_LEARN_Q_HEADS_H_
