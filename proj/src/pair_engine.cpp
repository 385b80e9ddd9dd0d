#include "spheres/pair_engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spheres {

namespace {

void note(std::vector<std::string>* diag, const std::string& msg) {
  if (diag) diag->push_back(msg);
}

const RegionTree::Edge* find_edge(const RegionTree& tree, std::int64_t circle) {
  for (const RegionTree::Edge& e : tree.edges) {
    if (e.circle == circle) return &e;
  }
  return nullptr;
}

// Endpoint of e with the given degree, preferring endpoint a. -1 if none.
int endpoint_with_degree(const RegionTree::Edge& e,
                         const std::unordered_map<int, std::size_t>& deg,
                         std::int64_t target) {
  if (static_cast<std::int64_t>(deg.at(e.a)) == target) return e.a;
  if (static_cast<std::int64_t>(deg.at(e.b)) == target) return e.b;
  return -1;
}

PairCertificate base_certificate() {
  PairCertificate cert;
  cert.n = 2;
  cert.circles = {1};
  cert.tree_s.regions = {0, 1};
  cert.tree_s.edges.push_back({1, 0, 1});
  cert.tree_t.regions = {0, 1};
  cert.tree_t.edges.push_back({1, 0, 1});
  cert.numbering_s = {1, 2};
  cert.numbering_t = {1, 2};
  cert.marked = 1;
  cert.meta.push_back("base n=2");
  return cert;
}

PairCertificate swapped(PairCertificate cert) {
  std::swap(cert.tree_s, cert.tree_t);
  std::swap(cert.numbering_s, cert.numbering_t);
  cert.meta.push_back("swap");
  return cert;
}

// Renumbers one side so that `first_region` gets position 1 and the rest
// match `target` degree-by-degree, smallest region id first.
Numbering renumber_against(const RegionTree& tree, int first_region,
                           const DegreeSequence& target) {
  const std::size_t n = tree.regions.size();
  auto deg = tree.degree_map();
  if (static_cast<std::int64_t>(deg.at(first_region)) != target[0]) {
    throw InvalidCertificate("merged component degree does not match the head");
  }
  std::map<std::int64_t, std::vector<int>> buckets;  // degree -> region ids
  std::vector<int> sorted_regions = tree.regions;
  std::sort(sorted_regions.begin(), sorted_regions.end());
  for (int r : sorted_regions) {
    if (r == first_region) continue;
    buckets[static_cast<std::int64_t>(deg.at(r))].push_back(r);
  }
  std::map<int, int> position_of;  // region -> 1-based position
  position_of[first_region] = 1;
  for (std::size_t pos = 2; pos <= n; ++pos) {
    auto it = buckets.find(target[pos - 1]);
    if (it == buckets.end() || it->second.empty()) {
      throw InvalidCertificate("degree multiset does not match the target");
    }
    position_of[it->second.front()] = static_cast<int>(pos);
    it->second.erase(it->second.begin());
  }
  Numbering numbering(n);
  for (std::size_t i = 0; i < n; ++i) {
    numbering[i] = position_of.at(tree.regions[i]);
  }
  return numbering;
}

// After un-permuting, a head of 1 may leave position 1 on a region away
// from the marked circle; swap it with a marked-edge leaf (both degree 1).
void pin_marked_leaf_at_one(const RegionTree& tree, Numbering& numbering,
                            std::int64_t marked, std::int64_t head) {
  auto deg = tree.degree_map();
  const RegionTree::Edge* e = find_edge(tree, marked);
  if (e == nullptr) throw InvalidCertificate("marked circle missing");
  std::map<int, std::size_t> index_of;
  for (std::size_t i = 0; i < tree.regions.size(); ++i) {
    index_of[tree.regions[i]] = i;
  }
  if (head == 1) {
    const int leaf = endpoint_with_degree(*e, deg, 1);
    if (leaf < 0) throw InvalidCertificate("marked circle bounds no disk");
    if (numbering[index_of[leaf]] == 1) return;
    for (std::size_t i = 0; i < numbering.size(); ++i) {
      if (numbering[i] == 1) {
        std::swap(numbering[i], numbering[index_of[leaf]]);
        return;
      }
    }
    throw InvalidCertificate("no region numbered 1");
  }
  // head > 1: the head entry kept its position through normalization, so
  // the marked head component must already sit at position 1.
  for (std::size_t i = 0; i < tree.regions.size(); ++i) {
    if (numbering[i] == 1) {
      const int region = tree.regions[i];
      if (region != e->a && region != e->b) {
        throw InvalidCertificate("region numbered 1 is not on the marked circle");
      }
      if (static_cast<std::int64_t>(deg.at(region)) != head) {
        throw InvalidCertificate("region numbered 1 has the wrong degree");
      }
      return;
    }
  }
  throw InvalidCertificate("no region numbered 1");
}

PairCertificate realize_rec(const DegreeSequence& x, const DegreeSequence& y);

// Both inputs normalized (units at the end). Recursion: reduce the heads,
// realize the smaller pair, then grow it back with a finger move.
PairCertificate realize_norm(const DegreeSequence& xn,
                             const DegreeSequence& yn) {
  if (xn.size() == 2) return base_certificate();
  if (xn.head() < yn.head()) return swapped(realize_norm(yn, xn));
  ReducedPair red = reduce_pair(xn, yn);
  PairCertificate inner = realize_rec(red.x, red.y);
  return finger_move(inner, xn.head(), yn.head());
}

PairCertificate realize_rec(const DegreeSequence& x, const DegreeSequence& y) {
  NormalizedSequence nx = normalize_units_last(x);
  NormalizedSequence ny = normalize_units_last(y);
  PairCertificate cert = realize_norm(nx.seq, ny.seq);
  // positions against the normalized order -> caller's order
  for (int& pos : cert.numbering_s) {
    pos = static_cast<int>(nx.perm[static_cast<std::size_t>(pos) - 1]) + 1;
  }
  for (int& pos : cert.numbering_t) {
    pos = static_cast<int>(ny.perm[static_cast<std::size_t>(pos) - 1]) + 1;
  }
  pin_marked_leaf_at_one(cert.tree_s, cert.numbering_s, cert.marked, x.head());
  pin_marked_leaf_at_one(cert.tree_t, cert.numbering_t, cert.marked, y.head());
  return cert;
}

}  // namespace

bool decide_pair(const DegreeSequence& x, const DegreeSequence& y) {
  return x.size() == y.size() && is_tree_like(x) && is_tree_like(y);
}

bool marked_edge_valid(const RegionTree& tree, const RegionTree::Edge& edge,
                       std::int64_t head) {
  auto deg = tree.degree_map();
  const auto da = static_cast<std::int64_t>(deg.at(edge.a));
  const auto db = static_cast<std::int64_t>(deg.at(edge.b));
  return (da == 1 && (head == 1 || db == head)) ||
         (db == 1 && (head == 1 || da == head));
}

ReducedPair reduce_pair(const DegreeSequence& x, const DegreeSequence& y) {
  if (x.size() != y.size()) {
    throw PreconditionError("reduce requires equal lengths");
  }
  if (!is_tree_like(x) || !is_tree_like(y)) {
    throw PreconditionError("reduce requires tree-like sequences");
  }
  if (!units_at_end(x) || !units_at_end(y)) {
    throw PreconditionError("reduce requires units at the end; normalize first");
  }
  if (x.head() < y.head()) {
    throw PreconditionError("swap required: x_1 must be at least y_1");
  }
  if (y.head() < 2) {
    throw PreconditionError("reduce requires y_1 >= 2 (length 2 is the base case)");
  }
  const std::size_t n = x.size();
  const auto y1 = static_cast<std::size_t>(y.head());
  const std::size_t m = n - y1 + 1;

  std::vector<std::int64_t> xr;
  xr.push_back(x.head() - y.head() + 1);
  for (std::size_t i = 1; i < m; ++i) xr.push_back(x[i]);
  std::vector<std::int64_t> yr;
  for (std::size_t i = 1; i <= m; ++i) yr.push_back(y[i]);

  ReducedPair out{DegreeSequence(std::move(xr)), DegreeSequence(std::move(yr))};
  // every truncated entry was a 1: unit counts are at least the heads
  for (std::size_t i = m; i < n; ++i) {
    if (x[i] != 1 || y[i] != 1) {
      throw PreconditionError("truncated entries must all be units");
    }
  }
  if (!is_tree_like(out.x) || !is_tree_like(out.y)) {
    throw PreconditionError("reduction did not preserve tree-likeness");
  }
  return out;
}

PairCertificate finger_move(const PairCertificate& cert, std::int64_t x1,
                            std::int64_t y1) {
  if (y1 < 2) throw PreconditionError("finger move requires y1 >= 2");
  if (x1 < y1) throw PreconditionError("finger move requires x1 >= y1");

  const RegionTree::Edge* es = find_edge(cert.tree_s, cert.marked);
  const RegionTree::Edge* et = find_edge(cert.tree_t, cert.marked);
  if (es == nullptr || et == nullptr) {
    throw InvalidCertificate("marked circle is missing from a tree");
  }
  auto deg_s = cert.tree_s.degree_map();
  auto deg_t = cert.tree_t.degree_map();
  const std::int64_t target = x1 - y1 + 1;
  const int c_region = endpoint_with_degree(*es, deg_s, target);
  const int d_region = endpoint_with_degree(*et, deg_t, 1);
  if (c_region < 0) {
    throw InvalidCertificate(
        "marked circle bounds no component with x1-y1+1 neighbors");
  }
  if (d_region < 0) {
    throw InvalidCertificate("marked circle bounds no disk on the T side");
  }

  // Lifted sequences: head replaced, then the dropped units reappear.
  const DegreeSequence xs = degree_sequence_of_tree(cert.tree_s, cert.numbering_s);
  const DegreeSequence ys = degree_sequence_of_tree(cert.tree_t, cert.numbering_t);
  std::vector<std::int64_t> xl{x1};
  for (std::size_t i = 1; i < xs.size(); ++i) xl.push_back(xs[i]);
  xl.insert(xl.end(), static_cast<std::size_t>(y1 - 1), 1);
  std::vector<std::int64_t> yl{y1};
  for (std::size_t i = 0; i < ys.size(); ++i) yl.push_back(ys[i]);
  yl.insert(yl.end(), static_cast<std::size_t>(y1 - 2), 1);
  const DegreeSequence lifted_x{std::move(xl)};
  const DegreeSequence lifted_y{std::move(yl)};

  PairCertificate out;
  out.n = cert.n + static_cast<std::size_t>(y1) - 1;
  out.circles = cert.circles;
  out.tree_s = cert.tree_s;
  out.tree_t = cert.tree_t;
  out.meta = cert.meta;

  std::int64_t next_circle =
      *std::max_element(cert.circles.begin(), cert.circles.end()) + 1;
  int next_region_s =
      *std::max_element(out.tree_s.regions.begin(), out.tree_s.regions.end()) + 1;
  int next_region_t =
      *std::max_element(out.tree_t.regions.begin(), out.tree_t.regions.end()) + 1;

  out.marked = next_circle;  // smallest fresh id
  for (std::int64_t k = 0; k < y1 - 1; ++k) {
    const std::int64_t id = next_circle++;
    out.circles.push_back(id);
    const int leaf_s = next_region_s++;
    out.tree_s.regions.push_back(leaf_s);
    out.tree_s.edges.push_back({id, c_region, leaf_s});
    const int leaf_t = next_region_t++;
    out.tree_t.regions.push_back(leaf_t);
    out.tree_t.edges.push_back({id, d_region, leaf_t});
  }

  out.numbering_s = renumber_against(out.tree_s, c_region, lifted_x);
  out.numbering_t = renumber_against(out.tree_t, d_region, lifted_y);

  // each added circle splits one component in two
  if (out.circles.size() + 1 != out.tree_s.regions.size() ||
      out.circles.size() + 1 != out.tree_t.regions.size()) {
    throw InvalidCertificate("circle count must stay one below region count");
  }

  std::ostringstream trace;
  trace << "finger x1=" << x1 << " y1=" << y1;
  out.meta.push_back(trace.str());
  return out;
}

PairCertificate realize_pair(const DegreeSequence& x, const DegreeSequence& y) {
  if (x.size() != y.size()) {
    throw UnrealizableError("length", "sequences must have equal length");
  }
  if (!is_tree_like(x) || !is_tree_like(y)) {
    throw UnrealizableError("tree-like",
                            "both sequences must sum to twice length minus two");
  }
  PairCertificate cert = realize_rec(x, y);
  std::vector<std::string> diag;
  if (!verify_pair_certificate(cert, x, y, &diag)) {
    throw InvalidCertificate("engine produced an invalid certificate: " +
                             (diag.empty() ? std::string("unknown") : diag.front()));
  }
  return cert;
}

bool verify_pair_certificate(const PairCertificate& cert,
                             const DegreeSequence& x, const DegreeSequence& y,
                             std::vector<std::string>* diag) {
  bool ok = true;
  try {
    if (x.size() != y.size()) {
      note(diag, "sequence lengths differ");
      return false;
    }
    const std::size_t n = x.size();
    if (cert.n != n) {
      note(diag, "certificate n does not match the sequences");
      ok = false;
    }
    if (!validate_region_tree(cert.tree_s, diag) ||
        !validate_region_tree(cert.tree_t, diag)) {
      return false;
    }
    if (cert.tree_s.regions.size() != n || cert.tree_t.regions.size() != n) {
      note(diag, "region counts do not match the sequence length");
      return false;
    }
    std::vector<std::int64_t> claimed = cert.circles;
    std::sort(claimed.begin(), claimed.end());
    if (claimed.size() != n - 1 ||
        std::adjacent_find(claimed.begin(), claimed.end()) != claimed.end()) {
      note(diag, "circle ids must be n-1 distinct values");
      ok = false;
    }
    if (cert.tree_s.sorted_circle_ids() != claimed) {
      note(diag, "S-side circle set differs from the certificate's");
      ok = false;
    }
    if (cert.tree_t.sorted_circle_ids() != claimed) {
      note(diag, "T-side circle set differs from the certificate's");
      ok = false;
    }
    try {
      if (degree_sequence_of_tree(cert.tree_s, cert.numbering_s) != x) {
        note(diag, "S-side degrees do not match x under the numbering");
        ok = false;
      }
      if (degree_sequence_of_tree(cert.tree_t, cert.numbering_t) != y) {
        note(diag, "T-side degrees do not match y under the numbering");
        ok = false;
      }
    } catch (const InvalidInput& e) {
      note(diag, std::string("bad numbering: ") + e.what());
      return false;
    }
    const RegionTree::Edge* es = find_edge(cert.tree_s, cert.marked);
    const RegionTree::Edge* et = find_edge(cert.tree_t, cert.marked);
    if (es == nullptr || et == nullptr) {
      note(diag, "marked circle is missing from a tree");
      return false;
    }
    if (!marked_edge_valid(cert.tree_s, *es, x.head())) {
      note(diag, "marked circle fails the disk/head condition on S");
      ok = false;
    }
    if (!marked_edge_valid(cert.tree_t, *et, y.head())) {
      note(diag, "marked circle fails the disk/head condition on T");
      ok = false;
    }
  } catch (const std::exception& e) {
    note(diag, std::string("verification error: ") + e.what());
    return false;
  }
  return ok;
}

std::string pair_certificate_to_dot(const PairCertificate& cert, bool s_side) {
  const RegionTree& tree = s_side ? cert.tree_s : cert.tree_t;
  const Numbering& numbering = s_side ? cert.numbering_s : cert.numbering_t;
  return region_tree_to_dot(tree, numbering, s_side ? "S" : "T",
                            s_side ? "f_" : "g_", cert.marked);
}

}  // namespace spheres
