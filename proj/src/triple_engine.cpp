#include "spheres/triple_engine.hpp"

#include <algorithm>
#include <sstream>

namespace spheres {

namespace {

void note(std::vector<std::string>* diag, const std::string& msg) {
  if (diag) diag->push_back(msg);
}

constexpr int next3(int k) { return (k + 1) % 3; }
constexpr int prev3(int k) { return (k + 2) % 3; }

// Region numbered 1 on one side of a pair certificate.
int region_numbered_one(const RegionTree& tree, const Numbering& numbering) {
  for (std::size_t i = 0; i < numbering.size(); ++i) {
    if (numbering[i] == 1) return tree.regions[i];
  }
  return -1;
}

bool on_marked_edge(const PairCertificate& cert, const RegionTree& tree,
                    int region) {
  for (const RegionTree::Edge& e : tree.edges) {
    if (e.circle == cert.marked) return e.a == region || e.b == region;
  }
  return false;
}

}  // namespace

std::int64_t half_head(const HalfSequence& h) { return h ? h->head() : 0; }

std::size_t half_length(const HalfSequence& h) { return h ? h->size() : 1; }

std::vector<std::int64_t> half_tail(const HalfSequence& h) {
  if (!h) return {};
  return {h->entries().begin() + 1, h->entries().end()};
}

bool decide_triple(const DegreeSequence& x1, const DegreeSequence& x2,
                   const DegreeSequence& x3) {
  return triple_failure(x1, x2, x3) == nullptr;
}

const char* triple_failure(const DegreeSequence& x1, const DegreeSequence& x2,
                           const DegreeSequence& x3) {
  if (!is_tree_like(x1) || !is_tree_like(x2) || !is_tree_like(x3)) {
    return "tree-like";
  }
  const std::array<std::int64_t, 3> n{static_cast<std::int64_t>(x1.size()),
                                      static_cast<std::int64_t>(x2.size()),
                                      static_cast<std::int64_t>(x3.size())};
  if ((n[0] + n[1] + n[2]) % 2 == 0) return "parity";
  for (int k = 0; k < 3; ++k) {
    if (n[k] >= n[next3(k)] + n[prev3(k)]) return "triangle";
  }
  return nullptr;
}

std::array<std::int64_t, 3> compute_m_values(std::size_t n1, std::size_t n2,
                                             std::size_t n3) {
  const std::array<std::int64_t, 3> n{static_cast<std::int64_t>(n1),
                                      static_cast<std::int64_t>(n2),
                                      static_cast<std::int64_t>(n3)};
  if ((n[0] + n[1] + n[2]) % 2 == 0) {
    throw UnrealizableError("parity", "n_1+n_2+n_3 must be odd");
  }
  std::array<std::int64_t, 3> m{};
  for (int k = 0; k < 3; ++k) {
    m[k] = (n[next3(k)] + n[prev3(k)] - n[k] + 1) / 2;
    if (m[k] < 1) {
      throw UnrealizableError("triangle",
                              "each n_k must be less than the sum of the others");
    }
  }
  return m;
}

SplitResult split_sequence(const DegreeSequence& x, std::size_t p,
                           std::size_t q) {
  const std::size_t n = x.size();
  if (!is_tree_like(x)) {
    throw PreconditionError("split requires a tree-like sequence");
  }
  if (!std::is_sorted(x.entries().begin(), x.entries().end(),
                      std::greater<>())) {
    throw PreconditionError("split requires a sorted-descending sequence");
  }
  if (q <= 1 || p < q) {
    throw PreconditionError("split requires p >= q > 1");
  }
  if (p + q != n + 1) {
    throw PreconditionError("split requires p + q = n + 1");
  }

  const std::size_t r = r_count(x);
  const std::int64_t x1 = x.head();
  const auto pp = static_cast<std::int64_t>(p);

  // z_s = x_2 + ... + x_s; take the smallest s whose window admits a
  // head with 1 <= a_1 <= x_1 - 1.
  std::int64_t z = 0;
  for (std::size_t s = 1; s <= r; ++s) {
    if (s >= 2) z += x[s - 1];
    const std::int64_t lo = z - static_cast<std::int64_t>(s) + 3;
    const std::int64_t hi = z - static_cast<std::int64_t>(s) + x1 + 1;
    if (lo <= pp && pp <= hi) {
      std::vector<std::int64_t> a;
      a.push_back(pp - lo + 1);
      for (std::size_t i = 2; i <= s; ++i) a.push_back(x[i - 1]);
      a.resize(p, 1);
      std::vector<std::int64_t> b;
      b.push_back(x1 - a.front());
      for (std::size_t i = 2; i <= r - s + 1; ++i) b.push_back(x[i + s - 2]);
      b.resize(q, 1);
      SplitResult out{DegreeSequence(std::move(a)), DegreeSequence(std::move(b)),
                      s};
      if (!is_tree_like(out.a) || !is_tree_like(out.b)) {
        throw PreconditionError("split produced a non-tree-like half");
      }
      return out;
    }
  }
  throw PreconditionError("no admissible head cut exists for these lengths");
}

TripleCertificate realize_triple(const DegreeSequence& x1,
                                 const DegreeSequence& x2,
                                 const DegreeSequence& x3) {
  if (const char* failed = triple_failure(x1, x2, x3)) {
    throw UnrealizableError(failed, std::string("triple is unrealizable: ") +
                                        failed + " condition fails");
  }
  const std::array<const DegreeSequence*, 3> xs{&x1, &x2, &x3};

  TripleCertificate cert;
  cert.n_values = {x1.size(), x2.size(), x3.size()};
  cert.m_values = compute_m_values(x1.size(), x2.size(), x3.size());
  const auto& m = cert.m_values;

  // Sphere k splits into the Q side of pair k+1 (length m_{k+2}) and the
  // P side of pair k (length m_{k+1}).
  for (int k = 0; k < 3; ++k) {
    const DegreeSequence sorted = sorted_descending(*xs[k]);
    const auto need_q = static_cast<std::size_t>(m[prev3(k)]);
    const auto need_p = static_cast<std::size_t>(m[next3(k)]);
    HalfSequence& q_half = cert.q[next3(k)];
    HalfSequence& p_half = cert.p[prev3(k)];
    if (need_q == 1) {
      q_half = std::nullopt;
      p_half = sorted;
    } else if (need_p == 1) {
      p_half = std::nullopt;
      q_half = sorted;
    } else {
      SplitResult split = split_sequence(sorted, std::max(need_q, need_p),
                                         std::min(need_q, need_p));
      if (need_q >= need_p) {
        q_half = std::move(split.a);
        p_half = std::move(split.b);
      } else {
        p_half = std::move(split.a);
        q_half = std::move(split.b);
      }
    }
  }

  // Pair j couples the Q side of sphere j-1 with the P side of sphere j+1.
  for (int j = 0; j < 3; ++j) {
    if (!cert.q[j].has_value()) {
      cert.pairs[j] = std::nullopt;
      std::ostringstream msg;
      msg << "empty pairwise intersection: m_" << next3(j) + 1 << " = 1";
      cert.meta.push_back(msg.str());
      continue;
    }
    cert.pairs[j] = realize_pair(*cert.q[j], *cert.p[prev3(j)]);
  }

  for (int k = 0; k < 3; ++k) {
    TubeRecord& tube = cert.tubes[k];
    tube.sphere = k + 1;
    tube.q_pair = next3(k) + 1;
    tube.p_pair = k + 1;
    if (const auto& qc = cert.pairs[next3(k)]) {
      tube.q_region = region_numbered_one(qc->tree_s, qc->numbering_s);
    }
    if (const auto& pc = cert.pairs[k]) {
      tube.p_region = region_numbered_one(pc->tree_t, pc->numbering_t);
    }
    tube.merged_degree = half_head(cert.q[next3(k)]) + half_head(cert.p[prev3(k)]);

    std::vector<std::int64_t> comps{tube.merged_degree};
    for (std::int64_t v : half_tail(cert.q[next3(k)])) comps.push_back(v);
    for (std::int64_t v : half_tail(cert.p[prev3(k)])) comps.push_back(v);
    cert.sphere_components[k] = multiset_key(comps);
  }

  std::vector<std::string> diag;
  if (!verify_triple_certificate(cert, x1, x2, x3, &diag)) {
    throw InvalidCertificate("engine produced an invalid triple certificate: " +
                             (diag.empty() ? std::string("unknown") : diag.front()));
  }
  return cert;
}

bool verify_triple_certificate(const TripleCertificate& cert,
                               const DegreeSequence& x1,
                               const DegreeSequence& x2,
                               const DegreeSequence& x3,
                               std::vector<std::string>* diag) {
  bool ok = true;
  try {
    const std::array<const DegreeSequence*, 3> xs{&x1, &x2, &x3};
    for (int k = 0; k < 3; ++k) {
      if (cert.n_values[k] != xs[k]->size()) {
        note(diag, "n_values do not match the sequences");
        return false;
      }
    }
    std::array<std::int64_t, 3> m;
    try {
      m = compute_m_values(cert.n_values[0], cert.n_values[1], cert.n_values[2]);
    } catch (const UnrealizableError& e) {
      note(diag, std::string("m-values are not defined: ") + e.condition());
      return false;
    }
    if (m != cert.m_values) {
      note(diag, "stored m-values disagree with the lengths");
      ok = false;
    }
    for (int k = 0; k < 3; ++k) {
      if (m[next3(k)] + m[prev3(k)] !=
          static_cast<std::int64_t>(cert.n_values[k]) + 1) {
        note(diag, "m identities fail");
        ok = false;
      }
    }
    int degenerate = 0;
    for (int k = 0; k < 3; ++k) {
      if (m[k] == 1) ++degenerate;
    }
    if (degenerate > 1) {
      note(diag, "more than one empty pairwise intersection");
      ok = false;
    }

    for (int j = 0; j < 3; ++j) {
      if (half_length(cert.q[j]) != static_cast<std::size_t>(m[next3(j)])) {
        note(diag, "a Q half has the wrong length");
        ok = false;
      }
      if (half_length(cert.p[j]) != static_cast<std::size_t>(m[prev3(j)])) {
        note(diag, "a P half has the wrong length");
        ok = false;
      }
      const bool empty_pair = m[next3(j)] == 1;
      if (empty_pair != !cert.q[j].has_value() ||
          empty_pair != !cert.p[prev3(j)].has_value() ||
          empty_pair != !cert.pairs[j].has_value()) {
        note(diag, "degenerate halves are inconsistent with the m-values");
        return false;
      }
      if (cert.pairs[j].has_value() &&
          !verify_pair_certificate(*cert.pairs[j], *cert.q[j], *cert.p[prev3(j)],
                                   diag)) {
        note(diag, "a pair certificate fails verification");
        ok = false;
      }
    }

    for (int k = 0; k < 3; ++k) {
      const TubeRecord& tube = cert.tubes[k];
      if (tube.sphere != k + 1 || tube.q_pair != next3(k) + 1 ||
          tube.p_pair != k + 1) {
        note(diag, "tube indices are inconsistent");
        ok = false;
      }
      if (const auto& qc = cert.pairs[next3(k)]) {
        const int want = region_numbered_one(qc->tree_s, qc->numbering_s);
        if (tube.q_region != want) {
          note(diag, "tube does not attach to the Q region numbered 1");
          ok = false;
        } else if (!on_marked_edge(*qc, qc->tree_s, want)) {
          note(diag, "Q attachment region is not on the marked circle");
          ok = false;
        }
      } else if (tube.q_region != -1) {
        note(diag, "degenerate Q side cannot name a region");
        ok = false;
      }
      if (const auto& pc = cert.pairs[k]) {
        const int want = region_numbered_one(pc->tree_t, pc->numbering_t);
        if (tube.p_region != want) {
          note(diag, "tube does not attach to the P region numbered 1");
          ok = false;
        } else if (!on_marked_edge(*pc, pc->tree_t, want)) {
          note(diag, "P attachment region is not on the marked circle");
          ok = false;
        }
      } else if (tube.p_region != -1) {
        note(diag, "degenerate P side cannot name a region");
        ok = false;
      }

      const std::vector<std::int64_t> want_multiset = multiset_key(xs[k]->entries());
      const std::int64_t head_sum =
          half_head(cert.q[next3(k)]) + half_head(cert.p[prev3(k)]);
      if (head_sum != want_multiset.front()) {
        note(diag, "half heads do not sum to the sphere's largest degree");
        ok = false;
      }
      if (tube.merged_degree != head_sum) {
        note(diag, "tube merged degree disagrees with the half heads");
        ok = false;
      }
      std::vector<std::int64_t> comps{head_sum};
      for (std::int64_t v : half_tail(cert.q[next3(k)])) comps.push_back(v);
      for (std::int64_t v : half_tail(cert.p[prev3(k)])) comps.push_back(v);
      if (multiset_key(comps) != want_multiset ||
          cert.sphere_components[k] != want_multiset) {
        note(diag, "sphere degree multiset does not match the input");
        ok = false;
      }

      // pairwise circle counts: |f_k ∩ f_{k+1}| = m_{k+2} - 1
      const auto& ahead = cert.pairs[next3(k)];
      const std::size_t circles_ahead = ahead ? ahead->circles.size() : 0;
      if (circles_ahead != static_cast<std::size_t>(m[prev3(k)] - 1)) {
        note(diag, "pairwise circle count disagrees with the m-values");
        ok = false;
      }
      const auto& behind = cert.pairs[k];
      const std::size_t circles_behind = behind ? behind->circles.size() : 0;
      if (cert.n_values[k] != circles_ahead + circles_behind + 1) {
        note(diag, "n_k must be one more than its two circle counts");
        ok = false;
      }
    }
  } catch (const std::exception& e) {
    note(diag, std::string("verification error: ") + e.what());
    return false;
  }
  return ok;
}

}  // namespace spheres
