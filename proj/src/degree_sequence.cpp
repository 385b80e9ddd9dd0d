#include "spheres/degree_sequence.hpp"

#include <algorithm>
#include <functional>

namespace spheres {

DegreeSequence::DegreeSequence(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw InvalidInput("degree sequence must be nonempty");
  }
  for (std::int64_t v : entries_) {
    if (v < 1) {
      throw InvalidInput("degree sequence entries must be positive");
    }
  }
}

std::int64_t DegreeSequence::sum() const {
  std::int64_t acc = 0;
  for (std::int64_t v : entries_) {
    if (__builtin_add_overflow(acc, v, &acc)) {
      throw InvalidInput("degree sequence sum overflows 64-bit range");
    }
  }
  return acc;
}

bool is_tree_like(const DegreeSequence& seq) {
  const auto n = static_cast<std::int64_t>(seq.size());
  return seq.sum() == 2 * n - 2;
}

NormalizedSequence normalize_units_last(const DegreeSequence& seq) {
  std::vector<std::int64_t> out;
  std::vector<std::size_t> perm;
  out.reserve(seq.size());
  perm.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] > 1) {
      out.push_back(seq[i]);
      perm.push_back(i);
    }
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 1) {
      out.push_back(seq[i]);
      perm.push_back(i);
    }
  }
  return {DegreeSequence(std::move(out)), std::move(perm)};
}

std::size_t r_count(const DegreeSequence& seq) {
  return static_cast<std::size_t>(
      std::count_if(seq.entries().begin(), seq.entries().end(),
                    [](std::int64_t v) { return v > 1; }));
}

bool units_at_end(const DegreeSequence& seq) {
  bool seen_unit = false;
  for (std::int64_t v : seq.entries()) {
    if (v == 1) {
      seen_unit = true;
    } else if (seen_unit) {
      return false;
    }
  }
  return true;
}

DegreeSequence sorted_descending(const DegreeSequence& seq) {
  std::vector<std::int64_t> v(seq.entries().begin(), seq.entries().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return DegreeSequence(std::move(v));
}

std::vector<std::int64_t> multiset_key(std::span<const std::int64_t> entries) {
  std::vector<std::int64_t> v(entries.begin(), entries.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace spheres
