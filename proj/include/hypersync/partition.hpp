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

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hypersync {

// Equivalence relation on {0..size-1} in canonical restricted-growth form:
// class ids are 0..p-1, numbered by first occurrence.
class Partition {
 public:
  Partition() = default;

  // Any labelling; renumbered canonically.
  explicit Partition(const std::vector<std::size_t>& class_ids);

  // Classes must be disjoint and cover 0..size-1.
  static Partition from_classes(std::size_t size,
                                const std::vector<std::vector<std::size_t>>& classes);
  static Partition singletons(std::size_t size);
  static Partition whole(std::size_t size);

  std::size_t size() const { return ids_.size(); }
  std::size_t class_count() const { return count_; }
  std::size_t class_of(std::size_t element) const { return ids_[element]; }
  const std::vector<std::size_t>& class_ids() const { return ids_; }

  // Members of every class, ascending, classes in id order.
  std::vector<std::vector<std::size_t>> classes() const;
  // Smallest element of each class.
  std::vector<std::size_t> representatives() const;

  bool same_class(std::size_t a, std::size_t b) const {
    return ids_[a] == ids_[b];
  }
  // Every class of *this lies inside a class of coarser.
  bool refines(const Partition& coarser) const;

  // Keeps the first `count` elements.
  Partition restrict_prefix(std::size_t count) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<std::size_t> ids_;
  std::size_t count_ = 0;
};

// "1,5,6|2,4|3" against the given labels. Unlisted elements are an error.
Partition parse_partition(std::string_view text,
                          const std::vector<std::string>& labels);

std::string format_partition(const Partition& partition,
                             const std::vector<std::string>& labels);

}  // namespace hypersync
