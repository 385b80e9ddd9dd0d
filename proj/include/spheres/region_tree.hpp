#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spheres/degree_sequence.hpp"

namespace spheres {

/// Tree on region vertices. Every edge carries the id of the circle it
/// is dual to; circle ids are distinct within one tree. The degree of a
/// region equals the number of circles on its boundary, and degree-1
/// regions are disks.
struct RegionTree {
  struct Edge {
    std::int64_t circle = 0;
    int a = 0;
    int b = 0;
  };

  std::vector<int> regions;
  std::vector<Edge> edges;

  bool has_region(int id) const;
  std::size_t degree(int region) const;
  std::unordered_map<int, std::size_t> degree_map() const;
  std::vector<std::int64_t> sorted_circle_ids() const;
};

/// 1-based position assigned to each region, parallel to tree.regions.
using Numbering = std::vector<int>;

struct TreeWithNumbering {
  RegionTree tree;
  Numbering numbering;
};

/// Connected, acyclic, distinct circle ids, |edges| == |regions| - 1.
bool validate_region_tree(const RegionTree& tree,
                          std::vector<std::string>* diag = nullptr);

/// Entry i of the result is the degree of the region numbered i.
DegreeSequence degree_sequence_of_tree(const RegionTree& tree,
                                       const Numbering& numbering);

/// Canonical caterpillar realizing a tree-like sequence: spine = entries
/// greater than 1 in sequence order, leaves attached greedily left to
/// right. Region i gets number i+1, so position i has degree seq[i].
TreeWithNumbering tree_from_treelike(const DegreeSequence& seq);

/// Number of labeled trees on n vertices where vertex i has degree
/// seq[i]: (n-2)!/prod(seq[i]-1)! when tree-like, 0 otherwise.
std::uint64_t labeled_tree_count(const DegreeSequence& seq);

/// Visits every labeled tree with the requested degrees, decoding each
/// word of the matching multiset lazily. Return false from fn to stop.
void for_each_labeled_tree(const DegreeSequence& seq,
                           const std::function<bool(const RegionTree&)>& fn);

std::vector<RegionTree> all_labeled_trees(const DegreeSequence& seq);

/// Deterministic DOT output; vertices named <prefix><number> in
/// numbering order, edges labeled by circle id. Edges of marked_circle
/// are highlighted when it is nonnegative.
std::string region_tree_to_dot(const RegionTree& tree,
                               const Numbering& numbering,
                               const std::string& graph_name,
                               const std::string& vertex_prefix,
                               std::int64_t marked_circle = -1);

}  // namespace spheres
