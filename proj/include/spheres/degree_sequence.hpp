#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spheres/errors.hpp"

namespace spheres {

/// A sequence of positive integers x_1..x_n. Stored 0-based; the JSON
/// form is a plain array, e.g. [3,1,1,1].
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::int64_t> entries);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const { return entries_; }
  std::int64_t head() const { return entries_.front(); }

  /// Overflow-checked sum of all entries.
  std::int64_t sum() const;

  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// True iff the entries sum to 2n-2. Such sequences are exactly the
/// degree sequences of trees on n vertices.
bool is_tree_like(const DegreeSequence& seq);

/// Result of the stable partition that moves all 1-entries to the end.
/// perm maps new positions to original positions (0-based), so
/// normalized[i] == original[perm[i]].
struct NormalizedSequence {
  DegreeSequence seq;
  std::vector<std::size_t> perm;
};

NormalizedSequence normalize_units_last(const DegreeSequence& seq);

/// Number of entries greater than 1.
std::size_t r_count(const DegreeSequence& seq);

/// True when every 1-entry comes after every entry greater than 1.
bool units_at_end(const DegreeSequence& seq);

DegreeSequence sorted_descending(const DegreeSequence& seq);

/// Sorted-descending copy of the entries, for multiset comparisons.
std::vector<std::int64_t> multiset_key(std::span<const std::int64_t> entries);

}  // namespace spheres
