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

#ifndef UFP_RATIONAL_H_
#define UFP_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ufp {

// Exact arithmetic used on every solver path. mpq_class keeps values in
// lowest terms with a positive denominator after each arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "a/b", "a", "+a", "-a/b". Throws InputError on anything else or on a
// zero denominator. The result is canonical.
Rational ParseRational(std::string_view text);

// Canonical short form: "17", "-3/2".
std::string ToString(const Rational& value);

// Always "a/b" (integers become "a/1"); used by the JSON reports.
std::string ToFractionString(const Rational& value);

BigInt Floor(const Rational& value);
BigInt Ceil(const Rational& value);

Rational Pow(const Rational& base, unsigned long exponent);

bool IsInteger(const Rational& value);

// Value of a BigInt that is known to fit; throws PreconditionError otherwise.
int64_t ToInt64(const BigInt& value);

std::string ToString(const BigInt& value);

BigInt Binomial(unsigned long n, unsigned long k);

}  // namespace ufp

#endif  // UFP_RATIONAL_H_
