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

#ifndef UFP_IO_H_
#define UFP_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ufp/model.h"

namespace ufp {

// Line-oriented text format, `#` starts a comment:
//
//   m <int>
//   cap <r_1> ... <r_m>
//   task <id> <first> <last> <demand> <weight>
//   bag <bag_id> <task_id> ...
//
// Any bag line makes the file a BagUFP instance.
using ParsedInstance = std::variant<Instance, BagInstance>;

// Throws InputError with the offending line number.
ParsedInstance ParseInstance(std::string_view text);

std::string SerializeInstance(const Instance& instance);
std::string SerializeInstance(const BagInstance& instance);
std::string SerializeInstance(const ParsedInstance& instance);

ParsedInstance ReadInstanceFile(const std::filesystem::path& path);

std::string ReadTextFile(const std::filesystem::path& path);
// Writes through a temporary sibling and renames it into place.
void WriteTextFileAtomic(const std::filesystem::path& path,
                         std::string_view contents);

// Whitespace tokens of `line` with any `#` comment removed.
std::vector<std::string_view> Tokenize(std::string_view line);

int ParseInt(std::string_view token);

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string InstanceDigest(const ParsedInstance& instance);

}  // namespace ufp

#endif  // UFP_IO_H_
