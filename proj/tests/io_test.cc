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

#include "ufp/io.h"

#include <filesystem>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "ufp/errors.h"
#include "ufp/generators.h"

namespace ufp {
namespace {

TEST(ParseInstanceTest, ReadsTaskLine) {
  const ParsedInstance p = ParseInstance("m 2\ncap 5 4\ntask 7 1 2 3/2 5\n");
  const Instance& inst = std::get<Instance>(p);
  ASSERT_EQ(inst.num_tasks(), 1U);
  const Task& t = inst.task(7);
  EXPECT_EQ(t.path, (Subpath{1, 2}));
  EXPECT_EQ(t.demand, Rational(3, 2));
  EXPECT_EQ(t.weight, 5);
}

TEST(ParseInstanceTest, CapacityCountMismatch) {
  try {
    ParseInstance("m 3\ncap 5 4\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("capacity count mismatch"),
              std::string::npos);
  }
}

TEST(ParseInstanceTest, ReportsLineNumbers) {
  try {
    ParseInstance("m 2\ncap 5 4\n# note\ntask 1 1 3 1 1\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(ParseInstanceTest, RejectsBadInput) {
  EXPECT_THROW(ParseInstance("cap 5\n"), InputError);
  EXPECT_THROW(ParseInstance("m 1\ncap 5\ntask 1 1 1 1 1\ntask 1 1 1 1 1\n"),
               InputError);
  EXPECT_THROW(ParseInstance("m 1\ncap 5\ntask 1 1 1 1 1\nbag 1 2\n"), InputError);
  EXPECT_THROW(ParseInstance("m 1\ncap 5\ntask 1 1 1 1 1\ntask 2 1 1 1 1\nbag 1 1\n"),
               InputError);
  EXPECT_THROW(ParseInstance("m 1\ncap 5\nfoo 1\n"), InputError);
}

TEST(ParseInstanceTest, BagLinesMakeBagInstance) {
  const ParsedInstance p =
      ParseInstance(SerializeInstance(testing::E2()));
  ASSERT_TRUE(std::holds_alternative<BagInstance>(p));
  EXPECT_EQ(std::get<BagInstance>(p), testing::E2());
}

TEST(SerializeInstanceTest, RoundTripsE1) {
  const Instance e1 = testing::E1();
  EXPECT_EQ(std::get<Instance>(ParseInstance(SerializeInstance(e1))), e1);
}

TEST(SerializeInstanceTest, RoundTripsGeneratedInstances) {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    GenSpec spec;
    spec.n = 9;
    spec.m = 4;
    spec.seed = seed;
    spec.regime = static_cast<CapacityRegime>(seed % 3);
    spec.bags = static_cast<int>(seed % 4);
    const ParsedInstance inst = GenRandom(spec);
    const std::string text = SerializeInstance(inst);
    EXPECT_EQ(ParseInstance(text), inst);
    EXPECT_EQ(SerializeInstance(ParseInstance(text)), text);
  }
}

TEST(DigestTest, StableAndSensitive) {
  const ParsedInstance a = testing::E1();
  const ParsedInstance b = testing::E2();
  EXPECT_EQ(InstanceDigest(a), InstanceDigest(testing::E1()));
  EXPECT_NE(InstanceDigest(a), InstanceDigest(b));
  EXPECT_EQ(InstanceDigest(a).size(), 16U);
}

TEST(FileTest, AtomicWriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "ufp_io_test.ufp";
  WriteTextFileAtomic(path, SerializeInstance(testing::E1()));
  EXPECT_EQ(std::get<Instance>(ReadInstanceFile(path)), testing::E1());
  std::filesystem::remove(path);
  EXPECT_THROW(ReadTextFile(path), InputError);
}

}  // namespace
}  // namespace ufp
