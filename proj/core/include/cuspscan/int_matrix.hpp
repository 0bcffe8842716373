#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cuspscan/rational.hpp"

namespace cusp {

/// Dense integer matrix with arbitrary-precision entries, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> e;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  Int& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IntMatrix& o) const = default;

  static IntMatrix identity(int n);
};

IntMatrix transpose(const IntMatrix& m);

/// Total order used for canonical report ordering: rows, then cols, then
/// entries lexicographically.
int compare(const IntMatrix& a, const IntMatrix& b);

/// Compact serialization, stable across runs ("r x c : e,e,...").
std::string to_key(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice of m. Pivots positive,
/// entries above each pivot reduced into [0, pivot), zero rows dropped.
/// The result is the canonical representative of the lattice.
IntMatrix hnf(const IntMatrix& m);

/// HNF together with a unimodular transform: U * m = H where H still carries
/// its zero rows (H.rows == m.rows).
struct HnfTransform {
  IntMatrix h;
  IntMatrix u;
  int rank = 0;
};
HnfTransform hnf_with_transform(const IntMatrix& m);

/// Basis (as HNF rows) of { x in Z^rows : x * m = 0 }. Always saturated.
IntMatrix left_null_rows(const IntMatrix& m);

/// Saturation of the row lattice: all integer vectors in its Q-span,
/// returned in HNF. A 0-row input stays 0-row.
IntMatrix saturate_rows(const IntMatrix& m);

/// True iff every row of b lies in the Z-row-lattice of a.
/// Pre: equal column counts.
bool lattice_contains(const IntMatrix& a, const IntMatrix& b);

}  // namespace cusp
