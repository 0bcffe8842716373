#pragma once

#include <set>
#include <vector>

#include "cuspscan/int_matrix.hpp"
#include "cuspscan/jacobian.hpp"

namespace cusp {

/// A set of cusp indices, 1-based.
using CuspSupport = std::set<int>;

/// An algebraic subgroup of (C*)^{2n} given by multiplicative relations
///   M_1^{a_i1} L_1^{b_i1} ... M_n^{a_in} L_n^{b_in} = 1,
/// one relation per row of rel, columns ordered (a_1,b_1,...,a_n,b_n).
/// rel is HNF-normalized, so rows are independent and codim() = rel.rows.
struct SubgroupSpec {
  int n = 0;
  IntMatrix rel;

  int codim() const { return rel.rows; }
  int dim() const { return 2 * n - rel.rows; }
};

/// HNF of the row lattice of a raw 2n-column relation matrix.
/// Throws EmptyRelation when all rows are zero.
SubgroupSpec normalize(const IntMatrix& raw, int n);

/// Like normalize but a relation-free matrix is legal (codim 0).
SubgroupSpec normalize_allow_empty(const IntMatrix& raw, int n);

/// Row i, column j carries a_ij + tau_j * b_ij.
JacobianMatrix jacobian(const SubgroupSpec& h);
JacobianMatrix jacobian_of_raw(const IntMatrix& raw, int n);

/// The largest subgroup containing h whose relations involve only the
/// coordinates of cusps in s: the Q-span of h's rows intersected with the
/// coordinate subspace supported on s, returned as a saturated lattice in HNF.
SubgroupSpec support_subgroup(const SubgroupSpec& h, const CuspSupport& s);

/// Excess of the (first-order) intersection dimension over the expected
/// dimension dim H + n - 2n.
struct BAnomalyDatum {
  int b = 0;
  int dim_intersection = 0;
  int dim_subgroup = 0;
};

/// b = dim_xh - (dim H + n - 2n). Throws NotAnomalousConsistent when b < 0.
/// Pre: dim_xh <= n.
BAnomalyDatum b_value(const SubgroupSpec& h, int dim_xh);

/// Cusp blocks of the relation rows: two cusps share a block when some row
/// touches both (nonzero a- or b-column). Blocks are sorted by smallest cusp.
std::vector<CuspSupport> block_structure(const SubgroupSpec& h);
std::vector<CuspSupport> block_structure_of_raw(const IntMatrix& raw, int n);

}  // namespace cusp
