#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

#include "cuspscan/subgroup.hpp"
#include "cuspscan/theta.hpp"

using namespace cusp;
using testsup::Rng;

TEST_CASE("normalize on pinned examples") {
  // Duplicate rows collapse.
  const SubgroupSpec a = normalize(IntMatrix{{1, 0, 0, 0}, {1, 0, 0, 0}}, 2);
  CHECK(a.rel == IntMatrix{{1, 0, 0, 0}});
  CHECK(a.codim() == 1);

  const SubgroupSpec b = normalize(IntMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}}, 2);
  CHECK(b.rel == IntMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}});
  CHECK(b.codim() == 2);

  // One row subtraction.
  const SubgroupSpec c = normalize(IntMatrix{{1, 1, 0, 0}, {0, 1, 0, 0}}, 2);
  CHECK(c.rel == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});

  CHECK_THROWS_AS((void)normalize(IntMatrix(2, 4), 2), EmptyRelation);
  CHECK(normalize_allow_empty(IntMatrix(2, 4), 2).codim() == 0);
}

TEST_CASE("normalize is idempotent and permutation-invariant") {
  Rng rng(301);
  for (int it = 0; it < 200; ++it) {
    const int n = static_cast<int>(testsup::rand_int(rng, 1, 3));
    const int rows = static_cast<int>(testsup::rand_int(rng, 1, 3));
    IntMatrix raw = testsup::rand_int_matrix(rng, rows, 2 * n, 2);
    if (hnf(raw).rows == 0) continue;
    const SubgroupSpec h = normalize(raw, n);
    CHECK(normalize(h.rel, n).rel == h.rel);
    // Shuffle rows: same lattice.
    IntMatrix perm = raw;
    std::vector<int> order(rows);
    for (int i = 0; i < rows; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < rows; ++i)
      for (int c = 0; c < 2 * n; ++c) perm.at(i, c) = raw.at(order[i], c);
    CHECK(normalize(perm, n).rel == h.rel);
  }
}

TEST_CASE("jacobian on pinned examples") {
  // H = {M1 = 1, L1 = 1}, n = 2: [[1, 0], [t1, 0]]
  const SubgroupSpec h1 = normalize(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}, 2);
  const JacobianMatrix j1 = jacobian(h1);
  CHECK(j1.symbolic_entry(0, 0) == TauScalar::constant(2, Rat(1)));
  CHECK(j1.symbolic_entry(0, 1).is_zero());
  CHECK(j1.symbolic_entry(1, 0) == TauScalar::shape(2, 1));
  CHECK(j1.symbolic_entry(1, 1).is_zero());
  CHECK(minor_rank(j1) == 1);

  // H = {M1 M2 = 1, L1 L2 = 1}: [[1, 1], [t1, t2]]
  const SubgroupSpec h2 = normalize(IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}}, 2);
  const JacobianMatrix j2 = jacobian(h2);
  CHECK(j2.symbolic_entry(1, 0) == TauScalar::shape(2, 1));
  CHECK(j2.symbolic_entry(1, 1) == TauScalar::shape(2, 2));
  CHECK(minor_rank(j2) == 2);

  // H = {M1 L1 = 1}, n = 1: [[1 + t1]]
  const SubgroupSpec h3 = normalize(IntMatrix{{1, 1}}, 1);
  CHECK(jacobian(h3).symbolic_entry(0, 0) ==
        TauScalar::constant(1, Rat(1)) + TauScalar::shape(1, 1));
}

TEST_CASE("minor_rank is invariant under normalization") {
  Rng rng(302);
  for (int it = 0; it < 150; ++it) {
    const int n = static_cast<int>(testsup::rand_int(rng, 1, 3));
    const int rows = static_cast<int>(testsup::rand_int(rng, 1, 3));
    const IntMatrix raw = testsup::rand_int_matrix(rng, rows, 2 * n, 2);
    if (hnf(raw).rows != rows) continue;  // keep the row count stable
    const SubgroupSpec h = normalize(raw, n);
    CHECK(minor_rank(jacobian(h)) == minor_rank(jacobian_of_raw(raw, n)));
  }
}

TEST_CASE("support_subgroup on pinned examples") {
  // H = {M1 L2 = 1, L1 L2^-1 = 1}, S = {1}: the row sum kills the L2 column.
  const SubgroupSpec h = normalize(IntMatrix{{1, 0, 0, 1}, {0, 1, 0, -1}}, 2);
  const SubgroupSpec s = support_subgroup(h, {1});
  CHECK(s.rel == IntMatrix{{1, 1, 0, 0}});

  // Supported entirely on S: fixed point.
  const SubgroupSpec h2 = normalize(IntMatrix{{1, 1, 0, 0}, {1, 0, 0, 0}}, 2);
  CHECK(support_subgroup(h2, {1}).rel == h2.rel);

  // No S-supported combination.
  const SubgroupSpec h3 = normalize(IntMatrix{{1, 0, 1, 0}}, 2);
  CHECK(support_subgroup(h3, {1}).codim() == 0);
}

TEST_CASE("support_subgroup rows live in the Q-span and on the support") {
  Rng rng(303);
  for (int it = 0; it < 200; ++it) {
    const int n = static_cast<int>(testsup::rand_int(rng, 2, 4));
    const int rows = static_cast<int>(testsup::rand_int(rng, 1, 3));
    const IntMatrix raw = testsup::rand_int_matrix(rng, rows, 2 * n, 2);
    if (hnf(raw).rows == 0) continue;
    const SubgroupSpec h = normalize(raw, n);
    CuspSupport s;
    for (int c = 1; c <= n; ++c)
      if (testsup::rand_int(rng, 0, 1)) s.insert(c);
    if (s.empty()) s.insert(1);
    const SubgroupSpec sup = support_subgroup(h, s);
    const int base_rank = q_rank(to_qmatrix(h.rel));
    for (int i = 0; i < sup.rel.rows; ++i) {
      // Supported on s only.
      for (int c = 0; c < n; ++c) {
        if (s.count(c + 1)) continue;
        CHECK(sup.rel.at(i, 2 * c) == 0);
        CHECK(sup.rel.at(i, 2 * c + 1) == 0);
      }
      // In the Q-span of h's rows.
      IntMatrix stacked(h.rel.rows + 1, 2 * n);
      for (int r = 0; r < h.rel.rows; ++r)
        for (int c = 0; c < 2 * n; ++c) stacked.at(r, c) = h.rel.at(r, c);
      for (int c = 0; c < 2 * n; ++c) stacked.at(h.rel.rows, c) = sup.rel.at(i, c);
      CHECK(q_rank(to_qmatrix(stacked)) == base_rank);
    }
    // Full support keeps the whole (saturated) lattice.
    CuspSupport all;
    for (int c = 1; c <= n; ++c) all.insert(c);
    CHECK(support_subgroup(h, all).rel == saturate_rows(h.rel));
  }
}

TEST_CASE("b_value on pinned examples") {
  const SubgroupSpec h2 = normalize(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}, 2);
  const BAnomalyDatum d1 = b_value(h2, 1);
  CHECK(d1.b == 1);
  CHECK(d1.dim_intersection == 1);
  CHECK(d1.dim_subgroup == 2);

  const SubgroupSpec h3 = normalize(IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}, 3);
  CHECK(b_value(h3, 1).b == 0);

  const SubgroupSpec h1 = normalize(IntMatrix{{1, 0, 0, 0}}, 2);
  CHECK_THROWS_AS((void)b_value(h1, 0), NotAnomalousConsistent);
}

TEST_CASE("block_structure on pinned examples") {
  const SubgroupSpec h1 = normalize(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}, 2);
  CHECK(block_structure(h1) == std::vector<CuspSupport>{{1}});

  const SubgroupSpec h2 = normalize(IntMatrix{{1, 0, 1, 0}}, 2);
  CHECK(block_structure(h2) == std::vector<CuspSupport>{{1, 2}});

  const SubgroupSpec h3 = normalize(IntMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}}, 2);
  CHECK(block_structure(h3) == std::vector<CuspSupport>{{1}, {2}});
}

TEST_CASE("support extraction bounds the codimension on planted block instances") {
  // H carries m+1 rows on the first m cusps plus l generic rows; the fit of
  // the block potential succeeds and the support subgroup keeps all m+1 rows.
  Rng rng(304);
  for (int it = 0; it < 40; ++it) {
    const int m = static_cast<int>(testsup::rand_int(rng, 1, 2));
    const int n = m + 2;
    // Block potential: cusps 1..m decouple from the rest.
    std::vector<testsup::ExtraTerm> extra;
    Mono cross(n, 0);
    cross[m] = 2;
    cross[n - 1] = 2;
    extra.push_back({cross, TauScalar::constant(n, Rat(1))});
    const PotentialSeries phi = testsup::make_symbolic_potential(n, 6, extra);

    // m+1 independent rows supported on cusps 1..m, plus one generic row.
    IntMatrix raw(m + 2, 2 * n);
    for (int i = 0; i <= m; ++i)
      for (int c = 0; c < 2 * m; ++c)
        raw.at(i, c) = testsup::rand_int(rng, -2, 2);
    for (int c = 0; c < 2 * n; ++c) raw.at(m + 1, c) = testsup::rand_int(rng, -2, 2);
    const SubgroupSpec h = normalize_allow_empty(raw, n);
    IntMatrix head(m + 1, 2 * n);
    for (int i = 0; i <= m; ++i)
      for (int c = 0; c < 2 * n; ++c) head.at(i, c) = raw.at(i, c);
    if (q_rank(to_qmatrix(head)) != m + 1) continue;

    // The fit certifying the foliation: v_1 against u_1..u_m.
    std::vector<LinearForm> gens;
    for (int i = 0; i < m; ++i) {
      LinearForm g{std::vector<Rat>(2 * n, Rat(0))};
      g.coeff[2 * i] = 1;
      gens.push_back(std::move(g));
    }
    LinearForm s0{std::vector<Rat>(2 * n, Rat(0))};
    s0.coeff[1] = 1;  // v_1
    const ThetaFit fit = theta_fit(phi, s0, gens);
    CHECK(fit.success);
    CuspSupport first_m;
    for (int c = 1; c <= m; ++c) first_m.insert(c);
    CHECK(support_subgroup(h, first_m).codim() >= m + 1);
  }
}
