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

#ifndef ICP_HARNESS_CODEC_CHECK_H_
#define ICP_HARNESS_CODEC_CHECK_H_

#include <string>
#include <vector>

namespace icp::harness {

struct CodecCheckOptions {
  int k_min = 2;
  int k_max = 13;
  int r_min = 1;
  int r_max = 5;
  // Receivers assume the reversed receiver order when picking out the
  // other receivers' locals: a designed negative case.
  bool corrupt_order = false;
  // Cases with more tuples than this are rejected as infeasible.
  long long max_tuples = 5'000'000;
};

struct CodecCheckReport {
  int cases = 0;
  long long tuples = 0;
  long long failures = 0;
  std::vector<std::string> notices;
  bool passed() const { return failures == 0 && cases > 0; }
};

// Exhaustive hat-code round trip: for every modulus K and receiver count r
// in range, every one of the K^r local tuples is encoded by sender 0 and
// decoded by each receiver. K = 1 is skipped with a notice. Throws
// BoundError when a case exceeds max_tuples.
CodecCheckReport RunCodecCheck(const CodecCheckOptions& options);

}  // namespace icp::harness

#endif  // ICP_HARNESS_CODEC_CHECK_H_
