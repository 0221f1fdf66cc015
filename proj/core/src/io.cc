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

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <system_error>

#include "ufp/errors.h"

namespace ufp {
namespace {

[[noreturn]] void Fail(int line_no, const std::string& message) {
  throw InputError("line " + std::to_string(line_no) + ": " + message);
}

void WriteBase(std::ostream& os, const Instance& instance) {
  os << "m " << instance.num_edges() << '\n';
  os << "cap";
  for (const Rational& c : instance.capacities()) os << ' ' << ToString(c);
  os << '\n';
  for (const Task& t : instance.tasks()) {
    os << "task " << t.id << ' ' << t.path.first << ' ' << t.path.last << ' '
       << ToString(t.demand) << ' ' << ToString(t.weight) << '\n';
  }
}

}  // namespace

std::vector<std::string_view> Tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int ParseInt(std::string_view token) {
  int value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw InputError("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

ParsedInstance ParseInstance(std::string_view text) {
  std::optional<int> num_edges;
  std::optional<std::vector<Rational>> capacities;
  int cap_line = 0;
  std::vector<Task> tasks;
  std::vector<Bag> bags;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view directive = tokens[0];
    try {
      if (directive == "m") {
        if (tokens.size() != 2) Fail(line_no, "expected 'm <int>'");
        if (num_edges) Fail(line_no, "duplicate 'm' line");
        num_edges = ParseInt(tokens[1]);
        if (*num_edges < 1) Fail(line_no, "edge count must be at least 1");
      } else if (directive == "cap") {
        if (capacities) Fail(line_no, "duplicate 'cap' line");
        std::vector<Rational> caps;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          caps.push_back(ParseRational(tokens[i]));
        }
        capacities = std::move(caps);
        cap_line = line_no;
      } else if (directive == "task") {
        if (tokens.size() != 6) {
          Fail(line_no,
               "expected 'task <id> <first> <last> <demand> <weight>'");
        }
        Task t;
        t.id = ParseInt(tokens[1]);
        t.path = Subpath{ParseInt(tokens[2]), ParseInt(tokens[3])};
        if (t.path.first < 1 || t.path.first > t.path.last ||
            (num_edges && t.path.last > *num_edges)) {
          Fail(line_no, "task " + std::to_string(t.id) +
                            " has out-of-range subpath [" +
                            std::to_string(t.path.first) + "," +
                            std::to_string(t.path.last) + "]");
        }
        t.demand = ParseRational(tokens[4]);
        t.weight = ParseRational(tokens[5]);
        tasks.push_back(std::move(t));
      } else if (directive == "bag") {
        if (tokens.size() < 3) {
          Fail(line_no, "expected 'bag <bag_id> <task_id> ...'");
        }
        Bag bag;
        bag.id = ParseInt(tokens[1]);
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          bag.task_ids.push_back(ParseInt(tokens[i]));
        }
        bags.push_back(std::move(bag));
      } else {
        Fail(line_no, "unknown directive '" + std::string(directive) + "'");
      }
    } catch (const InputError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      Fail(line_no, what);
    }
  }
  if (!num_edges) throw InputError("missing 'm' line");
  if (!capacities) throw InputError("missing 'cap' line");
  if (static_cast<int>(capacities->size()) != *num_edges) {
    Fail(cap_line, "capacity count mismatch: m is " +
                       std::to_string(*num_edges) + " but " +
                       std::to_string(capacities->size()) +
                       " capacities given");
  }
  Instance instance(*num_edges, std::move(*capacities), std::move(tasks));
  if (bags.empty()) return instance;
  return BagInstance(std::move(instance), std::move(bags));
}

std::string SerializeInstance(const Instance& instance) {
  std::ostringstream os;
  WriteBase(os, instance);
  return os.str();
}

std::string SerializeInstance(const BagInstance& instance) {
  std::ostringstream os;
  WriteBase(os, instance.base());
  for (const Bag& bag : instance.bags()) {
    os << "bag " << bag.id;
    for (int id : bag.task_ids) os << ' ' << id;
    os << '\n';
  }
  return os.str();
}

std::string SerializeInstance(const ParsedInstance& instance) {
  return std::visit([](const auto& x) { return SerializeInstance(x); },
                    instance);
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFileAtomic(const std::filesystem::path& path,
                         std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ParsedInstance ReadInstanceFile(const std::filesystem::path& path) {
  try {
    return ParseInstance(ReadTextFile(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string InstanceDigest(const ParsedInstance& instance) {
  const std::string text = SerializeInstance(instance);
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << hash;
  return os.str();
}

}  // namespace ufp
