#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spheres/degree_sequence.hpp"
#include "spheres/pair_engine.hpp"

namespace spheres {

/// Half of a sphere's sequence. nullopt is the degenerate stand-in used
/// when the required half length is 1: a single region of degree 0 that
/// meets nothing (an empty pairwise intersection).
using HalfSequence = std::optional<DegreeSequence>;

std::int64_t half_head(const HalfSequence& h);       // 0 when degenerate
std::size_t half_length(const HalfSequence& h);      // 1 when degenerate
std::vector<std::int64_t> half_tail(const HalfSequence& h);

/// Connected-sum record: sphere k is assembled from the Q side of pair
/// k+1 and the P side of pair k by a tube between the regions numbered 1,
/// merging them into one component of degree merged_degree.
struct TubeRecord {
  int sphere = 0;   // 1..3
  int q_pair = 0;   // 1..3, pair holding the Q side
  int p_pair = 0;   // 1..3, pair holding the P side
  int q_region = -1;  // region id numbered 1 on the Q side, -1 when degenerate
  int p_region = -1;
  std::int64_t merged_degree = 0;
};

/// Witness for a realizable triple: pair lengths m, six half-sequences,
/// three pair certificates (nullopt for the one allowed empty pair), the
/// tubes, and the resulting per-sphere degree multisets.
struct TripleCertificate {
  std::array<std::size_t, 3> n_values{};
  std::array<std::int64_t, 3> m_values{};
  std::array<HalfSequence, 3> q;  // q[j] has length m[(j+1)%3]
  std::array<HalfSequence, 3> p;  // p[j] has length m[(j+2)%3]
  std::array<std::optional<PairCertificate>, 3> pairs;  // pair j = (q_j, p_{j-1})
  std::array<TubeRecord, 3> tubes;
  std::array<std::vector<std::int64_t>, 3> sphere_components;  // sorted desc
  std::vector<std::string> meta;
};

/// True iff all three sequences are tree-like, n_1+n_2+n_3 is odd and
/// every n_k is less than the sum of the other two.
bool decide_triple(const DegreeSequence& x1, const DegreeSequence& x2,
                   const DegreeSequence& x3);

/// Name of the first failed condition ("tree-like", "parity", "triangle"),
/// or nullptr when the triple is realizable.
const char* triple_failure(const DegreeSequence& x1, const DegreeSequence& x2,
                           const DegreeSequence& x3);

/// m_k = (n_{k+1} + n_{k+2} - n_k + 1) / 2; requires the parity and
/// triangle conditions and satisfies m_i + m_j = n_k + 1.
std::array<std::int64_t, 3> compute_m_values(std::size_t n1, std::size_t n2,
                                             std::size_t n3);

/// Splits a sorted-descending tree-like sequence into tree-like halves of
/// lengths p and q with a_1 + b_1 = x_1 and the tails a permutation of
/// the input's tail. s is the chosen head cut (smallest valid, 1-based).
struct SplitResult {
  DegreeSequence a;
  DegreeSequence b;
  std::size_t s = 0;
};
SplitResult split_sequence(const DegreeSequence& x, std::size_t p,
                           std::size_t q);

TripleCertificate realize_triple(const DegreeSequence& x1,
                                 const DegreeSequence& x2,
                                 const DegreeSequence& x3);

bool verify_triple_certificate(const TripleCertificate& cert,
                               const DegreeSequence& x1,
                               const DegreeSequence& x2,
                               const DegreeSequence& x3,
                               std::vector<std::string>* diag = nullptr);

}  // namespace spheres
