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

#ifndef UFP_TESTS_FIXTURES_H_
#define UFP_TESTS_FIXTURES_H_

#include <vector>

#include "ufp/generators.h"
#include "ufp/model.h"
#include "ufp/rational.h"

namespace ufp::testing {

inline Rational Q(const char* text) { return ParseRational(text); }

// Canonical a / b; the two-argument mpq constructor does not reduce.
inline Rational Frac(long a, unsigned long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// m = 2, u = (5, 4); t1 [1,1] d 3 w 10; t2 [2,2] d 4 w 6; t3 [1,2] d 2 w 7.
inline Instance E1() {
  return Instance(2, {Rational(5), Rational(4)},
                  {Task{1, {1, 1}, 3, 10}, Task{2, {2, 2}, 4, 6},
                   Task{3, {1, 2}, 2, 7}});
}

// E1 with bags {t1, t3} and {t2}.
inline BagInstance E2() {
  return BagInstance(E1(), {Bag{1, {1, 3}}, Bag{2, {2}}});
}

inline Instance RandomUfp(uint64_t seed, int n, int m,
                          CapacityRegime regime = CapacityRegime::kTight) {
  GenSpec spec;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.regime = regime;
  return std::get<Instance>(GenRandom(spec));
}

inline BagInstance RandomBag(uint64_t seed, int n, int m, int bags,
                             CapacityRegime regime = CapacityRegime::kTight) {
  GenSpec spec;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.regime = regime;
  spec.bags = bags;
  return std::get<BagInstance>(GenRandom(spec));
}

}  // namespace ufp::testing

#endif  // UFP_TESTS_FIXTURES_H_
