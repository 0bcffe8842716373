#include "cuspscan/qmatrix.hpp"

namespace cusp {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows = static_cast<int>(init.size());
  cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
  e.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& row : init)
    for (long v : row) e.emplace_back(v);
}

QMatrix to_qmatrix(const IntMatrix& m) {
  QMatrix q(m.rows, m.cols);
  for (size_t i = 0; i < m.e.size(); ++i) q.e[i] = Rat(m.e[i]);
  return q;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

int q_rank(const QMatrix& m) {
  // Clear denominators row by row, then run Bareiss on integers.
  IntMatrix a(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols; ++j) l = lcm(l, m.at(i, j).get_den());
    for (int j = 0; j < m.cols; ++j) {
      Rat v = m.at(i, j) * Rat(l);
      v.canonicalize();
      a.at(i, j) = v.get_num();
    }
  }
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int p = -1;
    for (int i = r; i < a.rows; ++i) {
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    for (int i = r + 1; i < a.rows; ++i) {
      for (int j = c + 1; j < a.cols; ++j) {
        Int t = a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    ++r;
  }
  return r;
}

std::optional<std::vector<Rat>> q_solve(const QMatrix& a, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw InputError("q_solve: right-hand side length mismatch");
  QMatrix m(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols) = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < a.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j <= a.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    const Rat inv = 1 / m.at(r, c);
    for (int j = c; j <= a.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j <= a.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m.rows; ++i)
    if (m.at(i, a.cols) != 0) return std::nullopt;
  std::vector<Rat> x(a.cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = m.at(i, a.cols);
  return x;
}

}  // namespace cusp
