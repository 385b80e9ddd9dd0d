#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spheres/degree_sequence.hpp"
#include "spheres/region_tree.hpp"

namespace spheres {

/// Witness that a pair of sequences is realized by two spheres whose
/// intersection is n-1 circles: two region trees over a shared circle
/// set, a numbering per side, and one marked circle that bounds a disk
/// and a component of head degree on each side.
struct PairCertificate {
  std::size_t n = 0;
  std::vector<std::int64_t> circles;  // n-1 distinct ids, shared by both trees
  RegionTree tree_s;
  RegionTree tree_t;
  Numbering numbering_s;
  Numbering numbering_t;
  std::int64_t marked = 0;
  std::vector<std::string> meta;  // construction trace
};

/// True iff the sequences have equal length and are both tree-like.
bool decide_pair(const DegreeSequence& x, const DegreeSequence& y);

/// The marking predicate for one tree: the edge has a degree-1 endpoint
/// and, unless head == 1, the other endpoint has degree head. head == 1
/// allows the disk itself to serve as the head component.
bool marked_edge_valid(const RegionTree& tree, const RegionTree::Edge& edge,
                       std::int64_t head);

/// Head reduction of a normalized pair. Requires both tree-like of equal
/// length with units at the end, x_1 >= y_1 and y_1 >= 2. Returns
/// x' = (x_1-y_1+1, x_2, ..., x_{n-y_1+1}) and y' = (y_2, ..., y_{n-y_1+2});
/// both are tree-like of length n-y_1+1, and only 1-entries are dropped.
struct ReducedPair {
  DegreeSequence x;
  DegreeSequence y;
};
ReducedPair reduce_pair(const DegreeSequence& x, const DegreeSequence& y);

/// Inverse surgery: attaches y1-1 fresh circles as pendant edges at the
/// head component on the S side and at the marked disk on the T side,
/// lifting a certificate for the reduced pair to one for the pair with
/// heads x1, y1 (units appended). The fresh circle with the smallest id
/// becomes the new marked circle.
PairCertificate finger_move(const PairCertificate& cert, std::int64_t x1,
                            std::int64_t y1);

/// Builds a certificate for (x, y) in the caller's numbering, or throws
/// UnrealizableError when decide_pair is false. The region numbered 1 on
/// each side is always an endpoint of the marked circle.
PairCertificate realize_pair(const DegreeSequence& x, const DegreeSequence& y);

/// Total consistency check; never throws on malformed certificates,
/// returns false and appends diagnostics instead.
bool verify_pair_certificate(const PairCertificate& cert,
                             const DegreeSequence& x, const DegreeSequence& y,
                             std::vector<std::string>* diag = nullptr);

/// DOT for one side of the certificate with the marked circle highlighted.
std::string pair_certificate_to_dot(const PairCertificate& cert, bool s_side);

}  // namespace spheres
