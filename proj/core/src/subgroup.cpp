#include "cuspscan/subgroup.hpp"

#include <algorithm>
#include <numeric>

namespace cusp {

namespace {

void check_shape(const IntMatrix& raw, int n) {
  if (n < 1) throw InputError("subgroup: cusp count must be positive");
  if (raw.cols != 2 * n)
    throw InputError("subgroup: relation rows must have 2n columns");
}

}  // namespace

SubgroupSpec normalize_allow_empty(const IntMatrix& raw, int n) {
  check_shape(raw, n);
  return SubgroupSpec{n, hnf(raw)};
}

SubgroupSpec normalize(const IntMatrix& raw, int n) {
  SubgroupSpec h = normalize_allow_empty(raw, n);
  if (h.rel.rows == 0)
    throw EmptyRelation("subgroup: all relation rows are zero");
  return h;
}

JacobianMatrix jacobian_of_raw(const IntMatrix& raw, int n) {
  check_shape(raw, n);
  JacobianMatrix j(raw.rows, n);
  for (int i = 0; i < raw.rows; ++i)
    for (int c = 0; c < n; ++c)
      j.set(i, c, Rat(raw.at(i, 2 * c)), Rat(raw.at(i, 2 * c + 1)));
  return j;
}

JacobianMatrix jacobian(const SubgroupSpec& h) {
  return jacobian_of_raw(h.rel, h.n);
}

SubgroupSpec support_subgroup(const SubgroupSpec& h, const CuspSupport& s) {
  for (int i : s)
    if (i < 1 || i > h.n) throw InputError("support_subgroup: cusp index out of range");
  // Columns belonging to cusps outside s.
  std::vector<int> off;
  for (int c = 1; c <= h.n; ++c) {
    if (s.count(c)) continue;
    off.push_back(2 * (c - 1));
    off.push_back(2 * (c - 1) + 1);
  }
  if (off.empty()) return SubgroupSpec{h.n, saturate_rows(hnf(h.rel))};

  IntMatrix restricted(h.rel.rows, static_cast<int>(off.size()));
  for (int i = 0; i < h.rel.rows; ++i)
    for (size_t j = 0; j < off.size(); ++j)
      restricted.at(i, static_cast<int>(j)) = h.rel.at(i, off[j]);

  // Combinations of rows that vanish on the off-support columns.
  const IntMatrix combos = left_null_rows(restricted);
  IntMatrix out(combos.rows, h.rel.cols);
  for (int i = 0; i < combos.rows; ++i)
    for (int j = 0; j < h.rel.cols; ++j) {
      Int acc = 0;
      for (int k = 0; k < h.rel.rows; ++k) acc += combos.at(i, k) * h.rel.at(k, j);
      out.at(i, j) = acc;
    }
  return SubgroupSpec{h.n, hnf(saturate_rows(hnf(out)))};
}

BAnomalyDatum b_value(const SubgroupSpec& h, int dim_xh) {
  if (dim_xh < 0 || dim_xh > h.n)
    throw InputError("b_value: intersection dimension must lie in [0, n]");
  BAnomalyDatum d;
  d.dim_intersection = dim_xh;
  d.dim_subgroup = h.dim();
  d.b = dim_xh - (d.dim_subgroup + h.n - 2 * h.n);
  if (d.b < 0)
    throw NotAnomalousConsistent("b_value: excess dimension is negative");
  return d;
}

std::vector<CuspSupport> block_structure_of_raw(const IntMatrix& raw, int n) {
  check_shape(raw, n);
  // Union-find over cusps; each row merges the cusps it touches.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(n, false);
  for (int i = 0; i < raw.rows; ++i) {
    int first = -1;
    for (int c = 0; c < n; ++c) {
      if (raw.at(i, 2 * c) == 0 && raw.at(i, 2 * c + 1) == 0) continue;
      touched[c] = true;
      if (first < 0)
        first = c;
      else
        parent[find(c)] = find(first);
    }
  }
  std::vector<CuspSupport> blocks;
  for (int root = 0; root < n; ++root) {
    if (!touched[root] || find(root) != root) continue;
    CuspSupport blk;
    for (int c = 0; c < n; ++c)
      if (touched[c] && find(c) == root) blk.insert(c + 1);
    blocks.push_back(std::move(blk));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const CuspSupport& a, const CuspSupport& b) { return *a.begin() < *b.begin(); });
  return blocks;
}

std::vector<CuspSupport> block_structure(const SubgroupSpec& h) {
  return block_structure_of_raw(h.rel, h.n);
}

}  // namespace cusp
