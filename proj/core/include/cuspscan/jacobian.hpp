#pragma once

#include <vector>

#include "cuspscan/qmatrix.hpp"
#include "cuspscan/tau_scalar.hpp"

namespace cusp {

/// One entry a + tau_col * b of a Jacobian matrix. col is 1-based and must
/// match the entry's column: column j may involve only tau_j.
struct JacobianEntry {
  Rat a;
  Rat b;
  int col = 0;
};

/// The Jacobian of a log-level subgroup intersection at the origin: row i,
/// column j carries a_ij + tau_j * b_ij.
class JacobianMatrix {
 public:
  JacobianMatrix(int rows, int n)
      : n_(n), rows_(rows), a_(static_cast<size_t>(rows) * n), b_(a_.size()) {}

  int rows() const { return rows_; }
  int cols() const { return n_; }

  void set(int i, int j, Rat a, Rat b) {
    a_[idx(i, j)] = std::move(a);
    b_[idx(i, j)] = std::move(b);
  }
  JacobianEntry entry(int i, int j) const {
    return JacobianEntry{a_[idx(i, j)], b_[idx(i, j)], j + 1};
  }

  /// Entry as an element of the tau-span.
  TauScalar symbolic_entry(int i, int j) const;

  /// The matrix with tau_j := values[j] substituted.
  QMatrix evaluated(const std::vector<Rat>& values) const;

  /// Copy with the tau-free unit row e_i appended (i is 0-based).
  JacobianMatrix with_unit_row(int i) const;

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_;
  int rows_;
  std::vector<Rat> a_;
  std::vector<Rat> b_;
};

/// Largest k such that some k x k minor is nonzero in the tau-span; under
/// the rational-independence hypothesis this is the rank of the matrix over
/// C. Minors are expanded by Laplace expansion: each column contributes at
/// most one tau_j and distinct columns carry distinct j, so every
/// intermediate product stays squarefree. Search order: increasing k,
/// lexicographic row/column subsets, early exit on the first nonzero minor
/// per size.
int minor_rank(const JacobianMatrix& j);

/// Rank of the matrix evaluated at a concrete tau assignment (always <= the
/// symbolic rank; equality holds generically).
int evaluated_rank(const JacobianMatrix& j, const std::vector<Rat>& values);

}  // namespace cusp
