// Copyright 2026 The hypersync Authors
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

#include "hypersync/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "hypersync/error.hpp"

namespace hypersync {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Partition::Partition(const std::vector<std::size_t>& class_ids)
    : ids_(class_ids.size()) {
  std::unordered_map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < class_ids.size(); ++i) {
    auto [it, inserted] = renumber.emplace(class_ids[i], renumber.size());
    ids_[i] = it->second;
  }
  count_ = renumber.size();
}

Partition Partition::from_classes(
    std::size_t size, const std::vector<std::vector<std::size_t>>& classes) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(size, kUnset);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw Error(ErrorCode::kInvalidPartition, "empty class");
    }
    for (std::size_t element : classes[c]) {
      if (element >= size) {
        throw Error(ErrorCode::kInvalidPartition, "element out of range");
      }
      if (ids[element] != kUnset) {
        throw Error(ErrorCode::kInvalidPartition,
                    "element " + std::to_string(element) + " listed twice");
      }
      ids[element] = c;
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (ids[i] == kUnset) {
      throw Error(ErrorCode::kInvalidPartition,
                  "element " + std::to_string(i) + " not covered");
    }
  }
  return Partition(ids);
}

Partition Partition::singletons(std::size_t size) {
  std::vector<std::size_t> ids(size);
  for (std::size_t i = 0; i < size; ++i) ids[i] = i;
  return Partition(ids);
}

Partition Partition::whole(std::size_t size) {
  return Partition(std::vector<std::size_t>(size, 0));
}

std::vector<std::vector<std::size_t>> Partition::classes() const {
  std::vector<std::vector<std::size_t>> out(count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) out[ids_[i]].push_back(i);
  return out;
}

std::vector<std::size_t> Partition::representatives() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == out.size()) out.push_back(i);
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  std::vector<std::size_t> image(count_, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    auto& slot = image[ids_[i]];
    if (slot == static_cast<std::size_t>(-1)) {
      slot = coarser.ids_[i];
    } else if (slot != coarser.ids_[i]) {
      return false;
    }
  }
  return true;
}

Partition Partition::restrict_prefix(std::size_t count) const {
  return Partition(
      std::vector<std::size_t>(ids_.begin(), ids_.begin() + count));
}

Partition parse_partition(std::string_view text,
                          const std::vector<std::string>& labels) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<std::vector<std::size_t>> classes;
  for (std::string_view group : split(text, '|')) {
    std::vector<std::size_t> members;
    for (std::string_view item : split(group, ',')) {
      item = trim(item);
      auto it = index.find(std::string(item));
      if (it == index.end()) {
        throw Error(ErrorCode::kInvalidPartition,
                    "unknown label '" + std::string(item) + "' in partition");
      }
      members.push_back(it->second);
    }
    classes.push_back(std::move(members));
  }
  return Partition::from_classes(labels.size(), classes);
}

std::string format_partition(const Partition& partition,
                             const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& cls : partition.classes()) {
    if (!out.empty()) out += '|';
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ',';
      out += labels[cls[i]];
    }
  }
  return out;
}

}  // namespace hypersync
