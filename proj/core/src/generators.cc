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

#include "ufp/generators.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "ufp/errors.h"

namespace ufp {

uint64_t SplitMix64::Next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int64_t SplitMix64::Uniform(int64_t lo, int64_t hi) {
  if (lo > hi) throw PreconditionError("empty uniform range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  const uint64_t draw = Next();
  return lo + static_cast<int64_t>(span == 0 ? draw : draw % span);
}

SplitMix64 Substream(uint64_t seed, uint64_t stream) {
  SplitMix64 root(seed);
  uint64_t value = root.Next();
  for (uint64_t s = 0; s < stream; ++s) value = root.Next();
  return SplitMix64(value);
}

std::string ToString(CapacityRegime regime) {
  switch (regime) {
    case CapacityRegime::kUniform:
      return "uniform";
    case CapacityRegime::kStaircase:
      return "staircase";
    case CapacityRegime::kTight:
      return "tight";
  }
  return "unknown";
}

CapacityRegime ParseRegime(std::string_view name) {
  if (name == "uniform") return CapacityRegime::kUniform;
  if (name == "staircase") return CapacityRegime::kStaircase;
  if (name == "tight") return CapacityRegime::kTight;
  throw InputError("unknown capacity regime '" + std::string(name) + "'");
}

ParsedInstance GenRandom(const GenSpec& spec) {
  if (spec.n < 0 || spec.m < 1) throw InputError("need n >= 0 and m >= 1");
  if (spec.demand_lo < 0 || spec.demand_lo > spec.demand_hi) {
    throw InputError("invalid demand range");
  }
  if (spec.weight_lo < 0 || spec.weight_lo > spec.weight_hi) {
    throw InputError("invalid weight range");
  }
  if (spec.bags < 0 || spec.bags > spec.n) {
    throw InputError("bag count must lie in [0, n]");
  }
  if (spec.regime == CapacityRegime::kTight && spec.n == 0) {
    throw InputError("tight regime needs at least one task");
  }

  SplitMix64 task_rng = Substream(spec.seed, 1);
  std::vector<Task> tasks;
  tasks.reserve(spec.n);
  for (int id = 1; id <= spec.n; ++id) {
    Task t;
    t.id = id;
    t.path.first = static_cast<int>(task_rng.Uniform(1, spec.m));
    t.path.last = static_cast<int>(task_rng.Uniform(t.path.first, spec.m));
    t.demand = static_cast<long>(task_rng.Uniform(spec.demand_lo, spec.demand_hi));
    t.weight = static_cast<long>(task_rng.Uniform(spec.weight_lo, spec.weight_hi));
    tasks.push_back(std::move(t));
  }

  SplitMix64 cap_rng = Substream(spec.seed, 0);
  const int64_t dh = spec.demand_hi;
  std::vector<Rational> caps(spec.m, Rational(0));
  switch (spec.regime) {
    case CapacityRegime::kUniform: {
      const int64_t hi = std::max<int64_t>(dh, spec.n * dh / 2);
      for (Rational& c : caps) c = static_cast<long>(cap_rng.Uniform(dh, hi));
      break;
    }
    case CapacityRegime::kStaircase: {
      int64_t level = dh;
      for (int e = 0; e < spec.m; ++e) {
        if (e > 0) level += cap_rng.Uniform(0, dh);
        caps[e] = static_cast<long>(level);
      }
      break;
    }
    case CapacityRegime::kTight: {
      std::vector<Rational> sample(spec.m, Rational(0));
      for (const Task& t : tasks) {
        const bool joins = (cap_rng.Next() & 1U) != 0;
        for (int e = t.path.first; e <= t.path.last; ++e) {
          if (joins) sample[e - 1] += t.demand;
          caps[e - 1] = std::max(caps[e - 1], t.demand);
        }
      }
      for (int e = 0; e < spec.m; ++e) caps[e] = std::max(caps[e], sample[e]);
      break;
    }
  }

  Instance base(spec.m, std::move(caps), std::move(tasks));
  if (spec.bags == 0) return base;

  SplitMix64 bag_rng = Substream(spec.seed, 2);
  std::vector<int> order(spec.n);
  for (int i = 0; i < spec.n; ++i) order[i] = i + 1;
  for (int i = spec.n - 1; i > 0; --i) {
    std::swap(order[i], order[bag_rng.Uniform(0, i)]);
  }
  std::vector<Bag> bags(spec.bags);
  for (int b = 0; b < spec.bags; ++b) bags[b].id = b + 1;
  for (int i = 0; i < spec.n; ++i) {
    const int b = i < spec.bags ? i
                                : static_cast<int>(bag_rng.Uniform(0, spec.bags - 1));
    bags[b].task_ids.push_back(order[i]);
  }
  for (Bag& bag : bags) std::sort(bag.task_ids.begin(), bag.task_ids.end());
  return BagInstance(std::move(base), std::move(bags));
}

}  // namespace ufp
