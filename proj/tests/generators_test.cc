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

#include <gtest/gtest.h>

#include "brute.h"
#include "ufp/errors.h"
#include "ufp/io.h"

namespace ufp {
namespace {

TEST(SplitMix64Test, ReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.Next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.Next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.Next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64Test, UniformStaysInRange) {
  SplitMix64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const int64_t v = rng.Uniform(-2, 5);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 5);
  }
  EXPECT_EQ(rng.Uniform(4, 4), 4);
}

TEST(SubstreamTest, DerivedFromRootOutputs) {
  SplitMix64 root(17);
  const uint64_t first = root.Next();
  const uint64_t second = root.Next();
  EXPECT_EQ(Substream(17, 0).Next(), SplitMix64(first).Next());
  EXPECT_EQ(Substream(17, 1).Next(), SplitMix64(second).Next());
}

TEST(GenRandomTest, SameSpecSameBytes) {
  GenSpec spec;
  spec.n = 10;
  spec.m = 3;
  spec.seed = 1;
  const std::string a = SerializeInstance(GenRandom(spec));
  const std::string b = SerializeInstance(GenRandom(spec));
  EXPECT_EQ(a, b);
  spec.seed = 2;
  EXPECT_NE(SerializeInstance(GenRandom(spec)), a);
}

TEST(GenRandomTest, BagsPartitionWithoutEmptyBags) {
  for (int bags = 1; bags <= 6; ++bags) {
    GenSpec spec;
    spec.n = 12;
    spec.m = 3;
    spec.seed = 40 + bags;
    spec.bags = bags;
    const BagInstance inst = std::get<BagInstance>(GenRandom(spec));
    ASSERT_EQ(inst.bags().size(), static_cast<std::size_t>(bags));
    std::size_t total = 0;
    for (const Bag& b : inst.bags()) {
      EXPECT_FALSE(b.task_ids.empty());
      total += b.task_ids.size();
    }
    EXPECT_EQ(total, 12U);
  }
}

TEST(GenRandomTest, EveryTaskFitsAloneAndSurvivesPreprocessing) {
  for (uint64_t seed = 1; seed <= 90; ++seed) {
    GenSpec spec;
    spec.n = 14;
    spec.m = 4;
    spec.seed = seed;
    spec.regime = static_cast<CapacityRegime>(seed % 3);
    const Instance inst = std::get<Instance>(GenRandom(spec));
    for (const Task& t : inst.tasks()) {
      EXPECT_TRUE(brute::Fits(inst, {t.id})) << "seed " << seed;
    }
    const Preprocessed<Instance> pre = Preprocess(inst);
    EXPECT_TRUE(pre.dropped.empty());
    EXPECT_EQ(pre.instance, inst);
  }
}

TEST(GenRandomTest, TightRegimeForcesSelection) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    GenSpec spec;
    spec.n = 10;
    spec.m = 3;
    spec.seed = seed;
    spec.regime = CapacityRegime::kTight;
    const Instance inst = std::get<Instance>(GenRandom(spec));
    std::vector<int> all;
    for (const Task& t : inst.tasks()) all.push_back(t.id);
    EXPECT_LT(brute::Opt(inst).value, brute::Weight(inst, all)) << "seed " << seed;
  }
}

TEST(GenRandomTest, RejectsImpossibleSpecs) {
  GenSpec spec;
  spec.n = 0;
  spec.regime = CapacityRegime::kTight;
  EXPECT_THROW(GenRandom(spec), InputError);
  spec = GenSpec{};
  spec.bags = spec.n + 1;
  EXPECT_THROW(GenRandom(spec), InputError);
  spec = GenSpec{};
  spec.demand_lo = 5;
  spec.demand_hi = 4;
  EXPECT_THROW(GenRandom(spec), InputError);
  EXPECT_THROW(ParseRegime("steep"), InputError);
  EXPECT_EQ(ParseRegime(ToString(CapacityRegime::kStaircase)),
            CapacityRegime::kStaircase);
}

}  // namespace
}  // namespace ufp
