#include "spheres/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "spheres/pair_engine.hpp"
#include "spheres/region_tree.hpp"
#include "spheres/triple_engine.hpp"

namespace spheres::oracle {

namespace {

bool emit_compositions(std::vector<std::int64_t>& prefix, std::int64_t left,
                       std::size_t parts,
                       const std::function<bool(const DegreeSequence&)>& fn) {
  if (parts == 1) {
    prefix.push_back(left);
    const bool keep_going = fn(DegreeSequence(prefix));
    prefix.pop_back();
    return keep_going;
  }
  for (std::int64_t first = left - static_cast<std::int64_t>(parts) + 1;
       first >= 1; --first) {
    prefix.push_back(first);
    const bool keep_going =
        emit_compositions(prefix, left - first, parts - 1, fn);
    prefix.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

std::int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

void for_each_tree_like(std::size_t n,
                        const std::function<bool(const DegreeSequence&)>& fn) {
  if (n < 2) return;
  std::vector<std::int64_t> prefix;
  emit_compositions(prefix, 2 * static_cast<std::int64_t>(n) - 2, n, fn);
}

std::vector<DegreeSequence> enumerate_tree_like(std::size_t n) {
  std::vector<DegreeSequence> out;
  for_each_tree_like(n, [&](const DegreeSequence& seq) {
    out.push_back(seq);
    return true;
  });
  return out;
}

std::uint64_t tree_like_count(std::size_t n) {
  if (n < 2) return 0;
  // C(2n-3, n-1)
  std::uint64_t result = 1;
  for (std::uint64_t j = 1; j <= n - 1; ++j) {
    result = result * (n - 2 + j) / j;
  }
  return result;
}

CanonicalSplit canonical_split(const DegreeSequence& a,
                               const DegreeSequence& b) {
  CanonicalHalf ca{a.head()};
  auto ta = multiset_key(a.entries().subspan(1));
  ca.insert(ca.end(), ta.begin(), ta.end());
  CanonicalHalf cb{b.head()};
  auto tb = multiset_key(b.entries().subspan(1));
  cb.insert(cb.end(), tb.begin(), tb.end());
  return {std::move(ca), std::move(cb)};
}

std::set<CanonicalSplit> exhaustive_split_search(const DegreeSequence& x,
                                                 std::size_t p, std::size_t q) {
  if (!is_tree_like(x) ||
      !std::is_sorted(x.entries().begin(), x.entries().end(),
                      std::greater<>())) {
    throw PreconditionError("split search requires sorted tree-like input");
  }
  if (p + q != x.size() + 1) {
    throw PreconditionError("split search requires p + q = n + 1");
  }

  std::set<CanonicalSplit> found;
  const std::size_t tail_len = x.size() - 1;
  std::vector<std::int64_t> tail(x.entries().begin() + 1, x.entries().end());
  if (p == 0 || q == 0 || p - 1 + (q - 1) != tail_len) return found;

  // choose which tail entries go to a, then try every head cut
  std::vector<bool> take(tail_len, false);
  std::fill(take.begin(), take.begin() + static_cast<std::ptrdiff_t>(p - 1),
            true);
  std::sort(take.begin(), take.end(), std::greater<>());
  do {
    std::vector<std::int64_t> ta, tb;
    for (std::size_t i = 0; i < tail_len; ++i) {
      (take[i] ? ta : tb).push_back(tail[i]);
    }
    for (std::int64_t a1 = 1; a1 < x.head(); ++a1) {
      std::vector<std::int64_t> av{a1};
      av.insert(av.end(), ta.begin(), ta.end());
      std::vector<std::int64_t> bv{x.head() - a1};
      bv.insert(bv.end(), tb.begin(), tb.end());
      const DegreeSequence a{std::move(av)};
      const DegreeSequence b{std::move(bv)};
      if (is_tree_like(a) && is_tree_like(b)) {
        found.insert(canonical_split(a, b));
      }
    }
  } while (std::prev_permutation(take.begin(), take.end()));
  return found;
}

SweepReport cross_check_pairs(std::size_t n_max) {
  SweepReport report;
  report.n_max = n_max;
  const std::int64_t start = now_ms();
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::vector<DegreeSequence> seqs = enumerate_tree_like(n);
    for (const DegreeSequence& x : seqs) {
      bool tree_exists = false;
      for_each_labeled_tree(x, [&](const RegionTree&) {
        tree_exists = true;
        return false;
      });
      for (const DegreeSequence& y : seqs) {
        ++report.checked;
        std::string failure;
        try {
          const PairCertificate cert = realize_pair(x, y);
          std::vector<std::string> diag;
          if (!verify_pair_certificate(cert, x, y, &diag)) {
            failure = "verification failed: " +
                      (diag.empty() ? std::string("?") : diag.front());
          } else if (cert.circles.size() != n - 1) {
            failure = "wrong circle count";
          } else if (!tree_exists) {
            failure = "no labeled tree realizes x";
          } else if (degree_sequence_of_tree(cert.tree_s, cert.numbering_s) !=
                     x) {
            failure = "S degrees disagree with x";
          }
        } catch (const std::exception& e) {
          failure = e.what();
        }
        if (!failure.empty()) {
          ++report.failed;
          if (report.failures.size() < 16) report.failures.push_back(failure);
        }
      }
    }
  }
  report.elapsed_ms = now_ms() - start;
  return report;
}

SweepReport cross_check_splits(std::size_t n_max) {
  SweepReport report;
  report.n_max = n_max;
  const std::int64_t start = now_ms();
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (const DegreeSequence& x : enumerate_tree_like(n)) {
      if (!std::is_sorted(x.entries().begin(), x.entries().end(),
                          std::greater<>())) {
        continue;
      }
      for (std::size_t q = 2; 2 * q <= n + 1; ++q) {
        const std::size_t p = n + 1 - q;
        ++report.checked;
        std::string failure;
        try {
          const SplitResult split = split_sequence(x, p, q);
          const auto all = exhaustive_split_search(x, p, q);
          if (split.a.head() + split.b.head() != x.head()) {
            failure = "head sum broken";
          } else if (!all.count(canonical_split(split.a, split.b))) {
            failure = "split not found by the exhaustive search";
          }
        } catch (const std::exception& e) {
          failure = e.what();
        }
        if (!failure.empty()) {
          ++report.failed;
          if (report.failures.size() < 16) {
            std::ostringstream msg;
            msg << "n=" << n << " q=" << q << ": " << failure;
            report.failures.push_back(msg.str());
          }
        }
      }
    }
  }
  report.elapsed_ms = now_ms() - start;
  return report;
}

}  // namespace spheres::oracle
