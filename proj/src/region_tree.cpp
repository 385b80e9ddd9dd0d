#include "spheres/region_tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace spheres {

namespace {

void note(std::vector<std::string>* diag, const std::string& msg) {
  if (diag) diag->push_back(msg);
}

}  // namespace

bool RegionTree::has_region(int id) const {
  return std::find(regions.begin(), regions.end(), id) != regions.end();
}

std::size_t RegionTree::degree(int region) const {
  std::size_t d = 0;
  for (const Edge& e : edges) {
    if (e.a == region || e.b == region) ++d;
  }
  return d;
}

std::unordered_map<int, std::size_t> RegionTree::degree_map() const {
  std::unordered_map<int, std::size_t> d;
  for (int r : regions) d[r] = 0;
  for (const Edge& e : edges) {
    ++d[e.a];
    ++d[e.b];
  }
  return d;
}

std::vector<std::int64_t> RegionTree::sorted_circle_ids() const {
  std::vector<std::int64_t> ids;
  ids.reserve(edges.size());
  for (const Edge& e : edges) ids.push_back(e.circle);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool validate_region_tree(const RegionTree& tree,
                          std::vector<std::string>* diag) {
  if (tree.regions.empty()) {
    note(diag, "tree has no regions");
    return false;
  }
  std::set<int> ids(tree.regions.begin(), tree.regions.end());
  if (ids.size() != tree.regions.size()) {
    note(diag, "duplicate region ids");
    return false;
  }
  if (tree.edges.size() + 1 != tree.regions.size()) {
    note(diag, "edge count must be region count minus one");
    return false;
  }
  std::set<std::int64_t> circles;
  std::map<int, std::vector<int>> adj;
  for (const RegionTree::Edge& e : tree.edges) {
    if (!ids.count(e.a) || !ids.count(e.b)) {
      note(diag, "edge endpoint is not a region");
      return false;
    }
    if (e.a == e.b) {
      note(diag, "self-loop edge");
      return false;
    }
    if (!circles.insert(e.circle).second) {
      note(diag, "duplicate circle id on edges");
      return false;
    }
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  // |E| = |V|-1 plus connectivity forces acyclicity.
  std::set<int> seen;
  std::queue<int> frontier;
  frontier.push(tree.regions.front());
  seen.insert(tree.regions.front());
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : adj[v]) {
      if (seen.insert(w).second) frontier.push(w);
    }
  }
  if (seen.size() != tree.regions.size()) {
    note(diag, "tree is not connected");
    return false;
  }
  return true;
}

DegreeSequence degree_sequence_of_tree(const RegionTree& tree,
                                       const Numbering& numbering) {
  std::vector<std::string> diag;
  if (!validate_region_tree(tree, &diag)) {
    throw InvalidInput("not a region tree: " +
                       (diag.empty() ? std::string("unknown") : diag.front()));
  }
  const std::size_t n = tree.regions.size();
  if (numbering.size() != n) {
    throw InvalidInput("numbering length does not match region count");
  }
  std::vector<std::int64_t> entries(n, 0);
  std::vector<bool> used(n, false);
  auto degrees = tree.degree_map();
  for (std::size_t i = 0; i < n; ++i) {
    int pos = numbering[i];
    if (pos < 1 || static_cast<std::size_t>(pos) > n || used[pos - 1]) {
      throw InvalidInput("numbering is not a bijection onto 1..n");
    }
    used[pos - 1] = true;
    entries[pos - 1] = static_cast<std::int64_t>(degrees[tree.regions[i]]);
  }
  return DegreeSequence(std::move(entries));
}

TreeWithNumbering tree_from_treelike(const DegreeSequence& seq) {
  if (!is_tree_like(seq)) {
    throw UnrealizableError("tree-like",
                            "sequence is not tree-like; no tree realizes it");
  }
  const std::size_t n = seq.size();
  RegionTree tree;
  tree.regions.resize(n);
  for (std::size_t i = 0; i < n; ++i) tree.regions[i] = static_cast<int>(i);

  std::vector<int> spine;
  std::vector<int> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    (seq[i] > 1 ? spine : leaves).push_back(static_cast<int>(i));
  }

  std::int64_t next_circle = 1;
  if (spine.empty()) {
    // all units: tree-like forces n == 2
    tree.edges.push_back({next_circle++, 0, 1});
  } else {
    for (std::size_t i = 0; i + 1 < spine.size(); ++i) {
      tree.edges.push_back({next_circle++, spine[i], spine[i + 1]});
    }
    std::size_t next_leaf = 0;
    for (std::size_t i = 0; i < spine.size(); ++i) {
      std::size_t have = 0;
      if (spine.size() > 1) {
        have = (i == 0 || i + 1 == spine.size()) ? 1 : 2;
      }
      const auto want = static_cast<std::size_t>(seq[spine[i]]);
      for (; have < want; ++have) {
        tree.edges.push_back({next_circle++, spine[i], leaves[next_leaf++]});
      }
    }
  }

  Numbering numbering(n);
  for (std::size_t i = 0; i < n; ++i) numbering[i] = static_cast<int>(i) + 1;
  return {std::move(tree), std::move(numbering)};
}

std::uint64_t labeled_tree_count(const DegreeSequence& seq) {
  if (!is_tree_like(seq)) return 0;
  const std::size_t n = seq.size();
  if (n > 20) {
    throw InvalidInput("labeled tree count limited to n <= 20");
  }
  // (n-2)! / prod (d_i - 1)! via repeated multinomial factors.
  std::uint64_t count = 1;
  std::uint64_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::uint64_t>(seq[i] - 1);
    // count *= C(used + k, k)
    for (std::uint64_t j = 1; j <= k; ++j) {
      count = count * (used + j) / j;
    }
    used += k;
  }
  return count;
}

namespace {

RegionTree decode_prufer_word(const std::vector<int>& word, std::size_t n) {
  RegionTree tree;
  tree.regions.resize(n);
  for (std::size_t i = 0; i < n; ++i) tree.regions[i] = static_cast<int>(i);
  std::vector<int> deg(n, 1);
  for (int p : word) ++deg[p];
  std::int64_t next_circle = 1;
  for (int p : word) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    tree.edges.push_back({next_circle++, leaf, p});
    --deg[leaf];
    --deg[p];
  }
  int u = 0;
  while (deg[u] != 1) ++u;
  int v = u + 1;
  while (deg[v] != 1) ++v;
  tree.edges.push_back({next_circle++, u, v});
  return tree;
}

}  // namespace

void for_each_labeled_tree(const DegreeSequence& seq,
                           const std::function<bool(const RegionTree&)>& fn) {
  const std::size_t n = seq.size();
  std::int64_t slots = 0;
  for (std::size_t i = 0; i < n; ++i) slots += seq[i] - 1;
  if (n < 2 || slots != static_cast<std::int64_t>(n) - 2) return;

  if (n == 2) {
    RegionTree tree;
    tree.regions = {0, 1};
    tree.edges.push_back({1, 0, 1});
    fn(tree);
    return;
  }

  // Vertex i must appear seq[i]-1 times in the word; walk the distinct
  // permutations of that multiset in lexicographic order.
  std::vector<int> word;
  word.reserve(n - 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::int64_t k = 1; k < seq[i]; ++k) word.push_back(static_cast<int>(i));
  }
  do {
    if (!fn(decode_prufer_word(word, n))) return;
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<RegionTree> all_labeled_trees(const DegreeSequence& seq) {
  std::vector<RegionTree> out;
  for_each_labeled_tree(seq, [&](const RegionTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::string region_tree_to_dot(const RegionTree& tree,
                               const Numbering& numbering,
                               const std::string& graph_name,
                               const std::string& vertex_prefix,
                               std::int64_t marked_circle) {
  std::map<int, int> number_of;
  for (std::size_t i = 0; i < tree.regions.size(); ++i) {
    number_of[tree.regions[i]] = numbering[i];
  }
  std::ostringstream out;
  out << "graph " << graph_name << " {\n";
  out << "  node [shape=circle];\n";
  std::vector<std::pair<int, int>> by_number;
  for (auto [region, number] : number_of) by_number.emplace_back(number, region);
  std::sort(by_number.begin(), by_number.end());
  for (auto [number, region] : by_number) {
    (void)region;
    out << "  \"" << vertex_prefix << number << "\";\n";
  }
  std::vector<RegionTree::Edge> edges = tree.edges;
  std::sort(edges.begin(), edges.end(),
            [](const auto& l, const auto& r) { return l.circle < r.circle; });
  for (const RegionTree::Edge& e : edges) {
    out << "  \"" << vertex_prefix << number_of[e.a] << "\" -- \""
        << vertex_prefix << number_of[e.b] << "\" [label=\"" << e.circle
        << "\"";
    if (e.circle == marked_circle) {
      out << ",color=red,penwidth=2.0";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace spheres
