// Copyright 2026 The ufpath Authors
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

#ifndef UFP_GENERATORS_H_
#define UFP_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "ufp/io.h"
#include "ufp/model.h"

namespace ufp {

// 64-bit SplitMix sequence.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t Next();
  // lo + Next() % (hi - lo + 1); requires lo <= hi.
  int64_t Uniform(int64_t lo, int64_t hi);

 private:
  uint64_t state_;
};

// Generator for phase `stream`: seeded with output number stream + 1 of
// SplitMix64(seed).
SplitMix64 Substream(uint64_t seed, uint64_t stream);

enum class CapacityRegime { kUniform, kStaircase, kTight };

std::string ToString(CapacityRegime regime);
// Throws InputError for unknown names.
CapacityRegime ParseRegime(std::string_view name);

struct GenSpec {
  int n = 10;
  int m = 3;
  uint64_t seed = 1;
  int64_t demand_lo = 1;
  int64_t demand_hi = 20;
  int64_t weight_lo = 1;
  int64_t weight_hi = 50;
  CapacityRegime regime = CapacityRegime::kUniform;
  int bags = 0;  // 0 = plain UFP
};

// Tasks (stream 1): ids 1..n, first edge uniform in [1, m], last uniform in
// [first, m], then demand and weight uniform in their ranges.
// Capacities (stream 0):
//   uniform    u(e) uniform in [dh, max(dh, n dh / 2)], dh = demand_hi;
//   staircase  u(1) = dh, u(e) = u(e-1) + uniform [0, dh];
//   tight      every task joins a sample with one PRNG bit; u(e) is the
//              larger of the sample's load on e and the largest demand of a
//              task using e.
// Bags (stream 2): Fisher-Yates shuffle of the ids, the first `bags` ids open
// bags 1..bags, every other id goes to a uniform bag.
// Every task fits its path alone. Throws InputError on invalid ranges, on
// more bags than tasks and on the tight regime without tasks.
ParsedInstance GenRandom(const GenSpec& spec);

}  // namespace ufp

#endif  // UFP_GENERATORS_H_
