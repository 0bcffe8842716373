#include "cuspscan/jacobian.hpp"

#include <algorithm>

namespace cusp {

TauScalar JacobianMatrix::symbolic_entry(int i, int j) const {
  TauScalar t = TauScalar::constant(n_, a_[idx(i, j)]);
  if (b_[idx(i, j)] != 0)
    t += TauScalar::monomial(n_, {j + 1}, b_[idx(i, j)]);
  return t;
}

QMatrix JacobianMatrix::evaluated(const std::vector<Rat>& values) const {
  if (static_cast<int>(values.size()) != n_)
    throw InputError("JacobianMatrix: expected one tau value per cusp");
  QMatrix q(rows_, n_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < n_; ++j)
      q.at(i, j) = a_[idx(i, j)] + values[j] * b_[idx(i, j)];
  return q;
}

JacobianMatrix JacobianMatrix::with_unit_row(int i) const {
  JacobianMatrix out(rows_ + 1, n_);
  out.a_ = a_;
  out.b_ = b_;
  out.a_.resize(static_cast<size_t>(rows_ + 1) * n_, Rat(0));
  out.b_.resize(out.a_.size(), Rat(0));
  out.a_[static_cast<size_t>(rows_) * n_ + i] = 1;
  return out;
}

namespace {

// First size-k combination, and lexicographic successor.
bool next_combination(std::vector<int>& idx, int limit) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < limit - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Determinant of the submatrix (rows, cols) via Laplace expansion with a
// subset DP over column selections. Column j only carries tau at index
// cols[j] and the selected columns are distinct, so no product ever leaves
// the squarefree span.
TauScalar submatrix_det(const JacobianMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  const int n = m.cols();
  std::vector<TauScalar> dp(size_t{1} << k);
  dp[0] = TauScalar::constant(n, Rat(1));
  for (uint32_t s = 1; s < (uint32_t{1} << k); ++s) {
    const int row = rows[__builtin_popcount(s) - 1];
    TauScalar acc(n);
    int pos = 0;
    for (int t = 0; t < k; ++t) {
      if (!(s & (uint32_t{1} << t))) continue;
      TauScalar term = m.symbolic_entry(row, cols[t]) * dp[s & ~(uint32_t{1} << t)];
      if (pos % 2) term = -term;
      acc += term;
      ++pos;
    }
    // Expansion along the last selected row; its parity sign.
    if ((__builtin_popcount(s) - 1) % 2) acc = -acc;
    dp[s] = std::move(acc);
  }
  return dp[(uint32_t{1} << k) - 1];
}

bool has_nonzero_minor(const JacobianMatrix& m, int k) {
  std::vector<int> rows(k), cols(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  do {
    for (int i = 0; i < k; ++i) cols[i] = i;
    do {
      if (!submatrix_det(m, rows, cols).is_zero()) return true;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return false;
}

}  // namespace

int minor_rank(const JacobianMatrix& j) {
  const int maxk = std::min(j.rows(), j.cols());
  int rank = 0;
  for (int k = 1; k <= maxk; ++k) {
    if (!has_nonzero_minor(j, k)) break;
    rank = k;
  }
  return rank;
}

int evaluated_rank(const JacobianMatrix& j, const std::vector<Rat>& values) {
  return q_rank(j.evaluated(values));
}

}  // namespace cusp
