#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spheres/degree_sequence.hpp"
#include "spheres/region_tree.hpp"

namespace spheres {

/// Canonical family of n-1 labeled circles realizing a tree-like
/// sequence whose units sit at the end: r+1 linearly nested main
/// circles cut the sphere into two disks and r annuli, and the i-th
/// annulus carries x_i - 2 pairwise disjoint inner circles.
struct Sketch {
  enum class CircleKind { main, inner };

  struct Circle {
    int label = 0;         // position within the ordered family 1..n-1
    CircleKind kind = CircleKind::main;
    int tier = 0;          // main: depth from the top (1-based); inner: its annulus
    int parent_label = 0;  // containment forest, 0 for the outermost circle
  };

  DegreeSequence x;
  std::size_t r = 0;
  std::vector<Circle> circles;  // sorted by label
};

/// Requires x tree-like with all units at the end. Main circle i+1 from
/// the top gets label x_1+...+x_i - i + 1 (empty sum = 0); the inner
/// circles of annulus i+1 get the labels in between.
Sketch build_sketch(const DegreeSequence& x);

/// Dual tree of the sketch's complement: one region per disk/annulus,
/// one edge per circle. Annulus i is numbered i; the disks take the
/// unit positions. Its degree sequence equals the sketch's sequence.
TreeWithNumbering sketch_dual_tree(const Sketch& s);

/// Deterministic SVG rendering: main circles as concentric rounded
/// rectangles, inner circles as small boxes inside their annulus.
std::string sketch_to_svg(const Sketch& s);

/// Two sketches of equal length. The claim that they can be embedded
/// simultaneously with matching circle images is recorded as a note
/// only; nothing here checks it.
struct SketchPair {
  Sketch a;
  Sketch b;
  std::string note;
};

SketchPair build_sketch_pair(const DegreeSequence& x, const DegreeSequence& y);

}  // namespace spheres
