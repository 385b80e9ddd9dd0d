#include "spheres/sketch.hpp"

#include <algorithm>
#include <sstream>

namespace spheres {

Sketch build_sketch(const DegreeSequence& x) {
  if (!is_tree_like(x)) {
    throw PreconditionError("sketch requires a tree-like sequence");
  }
  if (!units_at_end(x)) {
    throw PreconditionError(
        "sketch requires all units at the end; normalize first");
  }
  const std::size_t n = x.size();
  const std::size_t r = r_count(x);

  Sketch s{x, r, {}};
  // prefix[i] = x_1 + ... + x_i
  std::vector<std::int64_t> prefix(r + 1, 0);
  for (std::size_t i = 1; i <= r; ++i) prefix[i] = prefix[i - 1] + x[i - 1];

  for (std::size_t i = 0; i <= r; ++i) {
    Sketch::Circle main;
    main.label = static_cast<int>(prefix[i] - static_cast<std::int64_t>(i) + 1);
    main.kind = Sketch::CircleKind::main;
    main.tier = static_cast<int>(i) + 1;
    main.parent_label =
        i == 0 ? 0
               : static_cast<int>(prefix[i - 1] -
                                  static_cast<std::int64_t>(i - 1) + 1);
    s.circles.push_back(main);

    if (i < r) {
      const std::int64_t lo = prefix[i] - static_cast<std::int64_t>(i) + 2;
      const std::int64_t hi =
          prefix[i] + x[i] - (static_cast<std::int64_t>(i) + 1);
      for (std::int64_t label = lo; label <= hi; ++label) {
        Sketch::Circle inner;
        inner.label = static_cast<int>(label);
        inner.kind = Sketch::CircleKind::inner;
        inner.tier = static_cast<int>(i) + 1;
        inner.parent_label = main.label;
        s.circles.push_back(inner);
      }
    }
  }

  std::sort(s.circles.begin(), s.circles.end(),
            [](const auto& l, const auto& r2) { return l.label < r2.label; });
  if (s.circles.size() != n - 1) {
    throw PreconditionError("sketch construction produced a wrong circle count");
  }
  return s;
}

TreeWithNumbering sketch_dual_tree(const Sketch& s) {
  const std::size_t n = s.x.size();
  const std::size_t r = s.r;

  // region ids: 0 = top disk, 1..r = annuli, r+1 = bottom disk,
  // r+2.. = one disk per inner circle in label order.
  RegionTree tree;
  const int top = 0;
  const int bottom = static_cast<int>(r) + 1;
  tree.regions.resize(n);
  for (std::size_t i = 0; i < n; ++i) tree.regions[i] = static_cast<int>(i);

  int next_inner_region = bottom + 1;
  std::vector<int> inner_regions_by_label_order;
  for (const Sketch::Circle& c : s.circles) {
    if (c.kind == Sketch::CircleKind::main) {
      const int above = c.tier - 1;  // 0 = top disk, else annulus tier-1
      const int below = c.tier <= static_cast<int>(r) ? c.tier : bottom;
      tree.edges.push_back({c.label, above, below});
    } else {
      const int disk = next_inner_region++;
      inner_regions_by_label_order.push_back(disk);
      tree.edges.push_back({c.label, c.tier, disk});
    }
  }

  Numbering numbering(n, 0);
  for (std::size_t i = 1; i <= r; ++i) numbering[i] = static_cast<int>(i);
  int next_pos = static_cast<int>(r) + 1;
  numbering[top] = next_pos++;
  for (int disk : inner_regions_by_label_order) numbering[disk] = next_pos++;
  numbering[bottom] = next_pos++;
  return {std::move(tree), std::move(numbering)};
}

std::string sketch_to_svg(const Sketch& s) {
  const int u = 24;
  const std::size_t r = s.r;

  std::size_t max_inner = 0;
  std::vector<std::vector<const Sketch::Circle*>> inner_by_tier(r + 1);
  for (const Sketch::Circle& c : s.circles) {
    if (c.kind == Sketch::CircleKind::inner) {
      inner_by_tier[c.tier].push_back(&c);
      max_inner = std::max(max_inner, inner_by_tier[c.tier].size());
    }
  }

  const int width =
      u * static_cast<int>(2 * (r + 1) + std::max<std::size_t>(max_inner, 2) + 2);
  const int height = u * static_cast<int>(2 * (r + 1) + 2);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  for (const Sketch::Circle& c : s.circles) {
    if (c.kind != Sketch::CircleKind::main) continue;
    const int t = c.tier;
    out << "  <rect x=\"" << t * u << "\" y=\"" << t * u << "\" width=\""
        << width - 2 * t * u << "\" height=\"" << height - 2 * t * u
        << "\" rx=\"" << u / 2
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    out << "  <text x=\"" << t * u + 4 << "\" y=\"" << t * u + 16
        << "\" font-size=\"12\">A" << c.label << "</text>\n";
  }
  for (std::size_t tier = 1; tier <= r; ++tier) {
    const auto& inners = inner_by_tier[tier];
    // bottom strip of annulus `tier`
    const int y = height - (static_cast<int>(tier) + 1) * u + u / 4;
    int xpos = (static_cast<int>(tier) + 1) * u;
    for (const Sketch::Circle* c : inners) {
      out << "  <rect x=\"" << xpos << "\" y=\"" << y << "\" width=\""
          << u / 2 << "\" height=\"" << u / 2
          << "\" rx=\"4\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
      out << "  <text x=\"" << xpos << "\" y=\"" << y - 2
          << "\" font-size=\"10\">A" << c->label << "</text>\n";
      xpos += u;
    }
  }
  out << "</svg>\n";
  return out.str();
}

SketchPair build_sketch_pair(const DegreeSequence& x, const DegreeSequence& y) {
  if (x.size() != y.size()) {
    throw PreconditionError("paired sketches require equal lengths");
  }
  SketchPair pair{build_sketch(x), build_sketch(y),
                  "simultaneous embedding with matching circle images: "
                  "claimed, not verified"};
  return pair;
}

}  // namespace spheres
