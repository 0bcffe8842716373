#pragma once

#include <optional>
#include <vector>

#include "cuspscan/subgroup.hpp"

namespace cusp {

/// Classification of one algebraic subgroup against the log-level variety.
/// All dimensions are first-order (tangent space at the origin).
struct AnomalyReport {
  SubgroupSpec subgroup;
  int codim = 0;
  int jacobian_rank = 0;
  int first_order_dim = 0;
  bool anomalous = false;
  std::optional<int> b;
  std::vector<int> complete_cusps;  // 1-based, sorted
  /// Anomalous but no complete cusp located. Impossible under the declared
  /// independence hypothesis; surfaced, never swallowed.
  bool counterexample = false;
};

/// Optional concrete tau assignment. Empty = symbolic mode: ranks are taken
/// in the tau-span under the rational-independence hypothesis.
using TauAssignment = std::vector<Rat>;

/// All cusps i whose coordinate vanishes on the tangent space {x : Jx = 0},
/// decided by rank([J; e_i]) == rank(J). Pre: the tangent space is positive
/// dimensional (rank < n).
std::vector<int> locate_complete_cusps(const SubgroupSpec& h,
                                       const TauAssignment& tau = {});

/// Anomaly test: with l = codim(h) rows and rank r = rank of the Jacobian,
/// the intersection is anomalous iff r < min(l, n); its first-order
/// dimension is n - r. For anomalous subgroups the excess b and the located
/// complete cusps are filled in.
AnomalyReport classify(const SubgroupSpec& h, const TauAssignment& tau = {});

/// n pairs (v_i, w_i) of rational vectors in Q^n.
struct PairFamily {
  int n = 0;
  std::vector<std::vector<Rat>> v;
  std::vector<std::vector<Rat>> w;
};

/// A proper subset S of {1..n} with rank{v_i, w_i : i in S} <= |S|.
struct DeficientSubset {
  std::vector<int> indices;  // 1-based, sorted
  int achieved_rank = 0;
};

/// True iff every one of the 2^n selections (u_i in {v_i, w_i}) is linearly
/// dependent over Q.
bool check_hypothesis(const PairFamily& f);

/// The lexicographically-first independent selection, as choice flags
/// (0 = v_i, 1 = w_i), when the hypothesis fails.
std::optional<std::vector<int>> independent_selection_witness(const PairFamily& f);

/// Lexicographically-first smallest proper subset meeting the rank bound.
/// Throws HypothesisFailed when check_hypothesis is false.
DeficientSubset deficient_subset_bruteforce(const PairFamily& f);

/// The constructive extraction: maximum independent selection, maximal
/// counter set, then the interchangeability walk until it stalls. The result
/// is validated against the DeficientSubset invariants before returning;
/// violations raise InternalProofDeviation.
DeficientSubset deficient_subset_constructive(const PairFamily& f);

}  // namespace cusp
