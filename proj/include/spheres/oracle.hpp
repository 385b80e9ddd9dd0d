#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spheres/degree_sequence.hpp"

namespace spheres::oracle {

/// All compositions of 2n-2 into n positive parts, largest first entry
/// first. Empty for n < 2.
std::vector<DegreeSequence> enumerate_tree_like(std::size_t n);
void for_each_tree_like(std::size_t n,
                        const std::function<bool(const DegreeSequence&)>& fn);

/// C(2n-3, n-1), the number of tree-like sequences of length n.
std::uint64_t tree_like_count(std::size_t n);

/// Canonical form of a split half: head first, tail sorted descending.
using CanonicalHalf = std::vector<std::int64_t>;
using CanonicalSplit = std::pair<CanonicalHalf, CanonicalHalf>;
CanonicalSplit canonical_split(const DegreeSequence& a, const DegreeSequence& b);

/// Every split of a sorted tree-like x into tree-like halves of lengths
/// p and q with a_1 + b_1 = x_1 and tails repartitioning the input tail,
/// found by enumerating head cuts and tail bipartitions directly.
std::set<CanonicalSplit> exhaustive_split_search(const DegreeSequence& x,
                                                 std::size_t p, std::size_t q);

struct SweepReport {
  std::size_t n_max = 0;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<std::string> failures;
};

/// Realizes and verifies every ordered pair of tree-like sequences with
/// 2 <= n <= n_max, cross-checking degrees against the labeled-tree
/// enumeration. failed must come back 0.
SweepReport cross_check_pairs(std::size_t n_max);

/// Checks split_sequence against exhaustive_split_search for every
/// sorted tree-like x with n <= n_max and every admissible (p, q).
SweepReport cross_check_splits(std::size_t n_max);

}  // namespace spheres::oracle
