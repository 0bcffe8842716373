#include "cuspscan/int_matrix.hpp"

#include <sstream>

namespace cusp {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows = static_cast<int>(init.size());
  cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
  e.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& row : init) {
    for (long v : row) e.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

int compare(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows) return a.rows < b.rows ? -1 : 1;
  if (a.cols != b.cols) return a.cols < b.cols ? -1 : 1;
  for (size_t i = 0; i < a.e.size(); ++i) {
    const int c = cmp(a.e[i], b.e[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string to_key(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows << 'x' << m.cols << ':';
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (i) os << ',';
    os << m.e[i].get_str();
  }
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

// row[dst] -= f * row[src]
void submul_row(IntMatrix& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) -= f * m.at(src, j);
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

// Core HNF loop over (m, u); u may be null when the transform is not needed.
int hnf_in_place(IntMatrix& m, IntMatrix* u) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    // Reduce column c below row r to a single nonzero entry by gcd steps.
    while (true) {
      int best = -1;
      for (int i = r; i < m.rows; ++i) {
        if (m.at(i, c) == 0) continue;
        if (best < 0 ||
            mpz_cmpabs(m.at(i, c).get_mpz_t(), m.at(best, c).get_mpz_t()) < 0)
          best = i;
      }
      if (best < 0) break;
      swap_rows(m, r, best);
      if (u) swap_rows(*u, r, best);
      bool cleared = true;
      for (int i = r + 1; i < m.rows; ++i) {
        if (m.at(i, c) == 0) continue;
        Int f = m.at(i, c) / m.at(r, c);  // C++ division truncates toward zero
        submul_row(m, i, r, f);
        if (u) submul_row(*u, i, r, f);
        if (m.at(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m.at(r, c) == 0) continue;
    if (m.at(r, c) < 0) {
      negate_row(m, r);
      if (u) negate_row(*u, r);
    }
    // Entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
      submul_row(m, i, r, f);
      if (u) submul_row(*u, i, r, f);
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix h = m;
  const int rank = hnf_in_place(h, nullptr);
  h.e.resize(static_cast<size_t>(rank) * h.cols);
  h.rows = rank;
  return h;
}

HnfTransform hnf_with_transform(const IntMatrix& m) {
  HnfTransform t;
  t.h = m;
  t.u = IntMatrix::identity(m.rows);
  t.rank = hnf_in_place(t.h, &t.u);
  return t;
}

IntMatrix left_null_rows(const IntMatrix& m) {
  const HnfTransform t = hnf_with_transform(m);
  IntMatrix k(m.rows - t.rank, m.rows);
  for (int i = t.rank; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) k.at(i - t.rank, j) = t.u.at(i, j);
  return hnf(k);
}

IntMatrix saturate_rows(const IntMatrix& m) {
  if (m.rows == 0) return m;
  // Right kernel of m, as rows.
  const IntMatrix k = left_null_rows(transpose(m));
  if (k.rows == 0) return IntMatrix::identity(m.cols);
  // Integer vectors orthogonal to that kernel = Q-span(m) restricted to Z^cols.
  return left_null_rows(transpose(k));
}

bool lattice_contains(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.cols)
    throw InputError("lattice_contains: column counts differ");
  const IntMatrix h = hnf(a);
  // Pivot column of each HNF row.
  std::vector<int> pivot(h.rows, -1);
  for (int i = 0; i < h.rows; ++i) {
    for (int j = 0; j < h.cols; ++j) {
      if (h.at(i, j) != 0) {
        pivot[i] = j;
        break;
      }
    }
  }
  for (int bi = 0; bi < b.rows; ++bi) {
    std::vector<Int> v(b.cols);
    for (int j = 0; j < b.cols; ++j) v[j] = b.at(bi, j);
    for (int i = 0; i < h.rows; ++i) {
      const int p = pivot[i];
      if (v[p] == 0) continue;
      if (v[p] % h.at(i, p) != 0) return false;
      const Int f = v[p] / h.at(i, p);
      for (int j = 0; j < b.cols; ++j) v[j] -= f * h.at(i, j);
    }
    for (const Int& x : v)
      if (x != 0) return false;
  }
  return true;
}

}  // namespace cusp
