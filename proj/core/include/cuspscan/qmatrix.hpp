#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "cuspscan/int_matrix.hpp"
#include "cuspscan/rational.hpp"

namespace cusp {

/// Dense matrix over Q, row-major.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> e;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
  QMatrix(std::initializer_list<std::initializer_list<long>> init);

  Rat& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const QMatrix& o) const = default;
};

QMatrix to_qmatrix(const IntMatrix& m);
QMatrix transpose(const QMatrix& m);

/// Rank over Q. Rows are scaled to primitive integer vectors, then
/// fraction-free (Bareiss) elimination runs with the deterministic pivot
/// rule: first nonzero entry in column order.
int q_rank(const QMatrix& m);

/// One exact solution of A x = b if the system is consistent (free variables
/// pinned to 0), std::nullopt otherwise.
std::optional<std::vector<Rat>> q_solve(const QMatrix& a, const std::vector<Rat>& b);

}  // namespace cusp
