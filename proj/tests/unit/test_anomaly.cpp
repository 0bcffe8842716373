#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

#include "cuspscan/anomaly.hpp"

using namespace cusp;
using testsup::Rng;

namespace {

std::vector<Rat> qv(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

PairFamily family_n2_zero_pair() {
  PairFamily f;
  f.n = 2;
  f.v = {qv({1, 0}), qv({0, 0})};
  f.w = {qv({0, 1}), qv({0, 0})};
  return f;
}

PairFamily family_n3_planar() {
  PairFamily f;
  f.n = 3;
  f.v = {qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, 0})};
  f.w = {qv({0, 1, 0}), qv({1, 0, 0}), qv({1, 1, 0})};
  return f;
}

PairFamily family_n2_independent() {
  PairFamily f;
  f.n = 2;
  f.v = {qv({1, 0}), qv({0, 1})};
  f.w = {qv({2, 0}), qv({0, 3})};
  return f;
}

bool subset_is_valid(const PairFamily& f, const DeficientSubset& d) {
  if (d.indices.empty() || static_cast<int>(d.indices.size()) >= f.n) return false;
  QMatrix m(2 * static_cast<int>(d.indices.size()), f.n);
  int r = 0;
  for (int i : d.indices) {
    for (int j = 0; j < f.n; ++j) {
      m.at(r, j) = f.v[i - 1][j];
      m.at(r + 1, j) = f.w[i - 1][j];
    }
    r += 2;
  }
  const int rank = q_rank(m);
  return rank == d.achieved_rank && rank <= static_cast<int>(d.indices.size());
}

}  // namespace

TEST_CASE("classify on pinned examples") {
  // Keeping cusp 1 complete: anomalous, rank 1, dim 1, b = 1.
  const AnomalyReport r1 = classify(normalize(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}, 2));
  CHECK(r1.anomalous);
  CHECK(r1.jacobian_rank == 1);
  CHECK(r1.first_order_dim == 1);
  CHECK(r1.complete_cusps == std::vector<int>{1});
  REQUIRE(r1.b.has_value());
  CHECK(*r1.b == 1);
  CHECK_FALSE(r1.counterexample);

  // Diagonal relations across both cusps: full rank, not anomalous.
  const AnomalyReport r2 = classify(normalize(IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}}, 2));
  CHECK_FALSE(r2.anomalous);
  CHECK(r2.jacobian_rank == 2);
  CHECK_FALSE(r2.b.has_value());

  // Codim 4 > n: identity-only solution, first-order dim 0.
  const AnomalyReport r3 = classify(
      normalize(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 2));
  CHECK_FALSE(r3.anomalous);
  CHECK(r3.first_order_dim == 0);
}

TEST_CASE("locate_complete_cusps on pinned examples") {
  CHECK(locate_complete_cusps(normalize(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}, 2)) ==
        std::vector<int>{1});

  // {M1=1, L1=1, M2 L2=1} with n=3: the kernel forces x1 = 0 and x2 = 0.
  const SubgroupSpec h = normalize(
      IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}}, 3);
  const auto cusps = locate_complete_cusps(h);
  CHECK(std::find(cusps.begin(), cusps.end(), 1) != cusps.end());
  CHECK(cusps == std::vector<int>{1, 2});

  // Full-rank Jacobian: the tangent space is zero-dimensional.
  CHECK_THROWS_AS((void)locate_complete_cusps(normalize(IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}}, 2)),
                  InputError);
}

TEST_CASE("locating contains i for any subgroup holding cusp i complete") {
  Rng rng(601);
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(testsup::rand_int(rng, 2, 3));
    const int i = static_cast<int>(testsup::rand_int(rng, 0, n - 1));
    IntMatrix raw(3, 2 * n);
    raw.at(0, 2 * i) = 1;
    raw.at(1, 2 * i + 1) = 1;
    for (int c = 0; c < 2 * n; ++c) raw.at(2, c) = testsup::rand_int(rng, -2, 2);
    const SubgroupSpec h = normalize(raw, n);
    const AnomalyReport r = classify(h);
    if (r.first_order_dim == 0) continue;
    const auto cusps = locate_complete_cusps(h);
    CHECK(std::find(cusps.begin(), cusps.end(), i + 1) != cusps.end());
  }
}

TEST_CASE("classification depends only on the row lattice") {
  Rng rng(602);
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(testsup::rand_int(rng, 1, 3));
    const int rows = static_cast<int>(testsup::rand_int(rng, 1, 3));
    const IntMatrix raw = testsup::rand_int_matrix(rng, rows, 2 * n, 2);
    if (hnf(raw).rows == 0) continue;
    const AnomalyReport a = classify(normalize(raw, n));
    const AnomalyReport b = classify(normalize(testsup::rand_unimodular_ops(rng, raw, 8), n));
    CHECK(a.anomalous == b.anomalous);
    CHECK(a.jacobian_rank == b.jacobian_rank);
    CHECK(a.complete_cusps == b.complete_cusps);
    CHECK(a.subgroup.rel == b.subgroup.rel);
  }
}

TEST_CASE("two-cusp codim-2 anomalous lattices are exactly the complete-cusp ones") {
  // Exhaustive over entries in [-1, 1]; the acceptance suite runs [-2, 2].
  const IntMatrix keep1 = IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}};
  const IntMatrix keep2 = IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}};
  std::set<std::string> anomalous_keys;
  IntMatrix raw(2, 4);
  for (long idx = 0; idx < 6561; ++idx) {  // 3^8
    long rest = idx;
    for (int p = 0; p < 8; ++p) {
      raw.e[static_cast<size_t>(p)] = rest % 3 - 1;
      rest /= 3;
    }
    IntMatrix h = hnf(raw);
    if (h.rows != 2) continue;
    const IntMatrix canon = saturate_rows(h);
    const AnomalyReport r = classify(SubgroupSpec{2, canon});
    if (r.anomalous) anomalous_keys.insert(to_key(canon));
  }
  CHECK(anomalous_keys ==
        std::set<std::string>{to_key(keep1), to_key(keep2)});
}

TEST_CASE("rank-deficient 2-row subgroups have single-cusp blocks (n=3 exhaustive)") {
  // Entries in [-1, 1]: every rank-2 pair with a rank-1 Jacobian is
  // supported on one cusp.
  IntMatrix raw(2, 6);
  long checked = 0;
  for (long idx = 0; idx < 531441; ++idx) {  // 3^12
    long rest = idx;
    for (int p = 0; p < 12; ++p) {
      raw.e[static_cast<size_t>(p)] = rest % 3 - 1;
      rest /= 3;
    }
    if (q_rank(to_qmatrix(raw)) != 2) continue;
    if (minor_rank(jacobian_of_raw(raw, 3)) != 1) continue;
    const auto blocks = block_structure_of_raw(raw, 3);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].size() == 1);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("check_hypothesis on pinned examples") {
  CHECK(check_hypothesis(family_n2_zero_pair()));
  CHECK_FALSE(check_hypothesis(family_n2_independent()));
  CHECK(check_hypothesis(family_n3_planar()));

  const auto witness = independent_selection_witness(family_n2_independent());
  REQUIRE(witness.has_value());
  CHECK(*witness == std::vector<int>{0, 0});  // (v1, v2) already independent
}

TEST_CASE("deficient_subset_bruteforce on pinned examples") {
  const DeficientSubset d1 = deficient_subset_bruteforce(family_n2_zero_pair());
  CHECK(d1.indices == std::vector<int>{2});
  CHECK(d1.achieved_rank == 0);

  const DeficientSubset d2 = deficient_subset_bruteforce(family_n3_planar());
  CHECK(d2.indices == std::vector<int>{3});
  CHECK(d2.achieved_rank == 1);

  CHECK_THROWS_AS((void)deficient_subset_bruteforce(family_n2_independent()),
                  HypothesisFailed);
}

TEST_CASE("deficient_subset_constructive on pinned examples") {
  const DeficientSubset d1 = deficient_subset_constructive(family_n2_zero_pair());
  CHECK(d1.indices == std::vector<int>{2});

  const DeficientSubset d2 = deficient_subset_constructive(family_n3_planar());
  CHECK(subset_is_valid(family_n3_planar(), d2));

  CHECK_THROWS_AS((void)deficient_subset_constructive(family_n2_independent()),
                  HypothesisFailed);

  // All-zero family: every vector vanishes, h = 0.
  PairFamily zeros;
  zeros.n = 3;
  zeros.v = {qv({0, 0, 0}), qv({0, 0, 0}), qv({0, 0, 0})};
  zeros.w = zeros.v;
  CHECK(subset_is_valid(zeros, deficient_subset_constructive(zeros)));
}

TEST_CASE("constructive output always passes the brute-force validity predicate") {
  Rng rng(603);
  int hypothesis_hits = 0;
  for (int it = 0; it < 4000 && hypothesis_hits < 400; ++it) {
    const int n = 3;
    PairFamily f;
    f.n = n;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> v(n), w(n);
      for (int j = 0; j < n; ++j) {
        v[j] = testsup::rand_int(rng, 0, 3) == 0 ? Rat(0) : Rat(testsup::rand_int(rng, -1, 1));
        w[j] = testsup::rand_int(rng, 0, 3) == 0 ? Rat(0) : Rat(testsup::rand_int(rng, -1, 1));
      }
      f.v.push_back(std::move(v));
      f.w.push_back(std::move(w));
    }
    if (!check_hypothesis(f)) continue;
    ++hypothesis_hits;
    const DeficientSubset brute = deficient_subset_bruteforce(f);
    CHECK(subset_is_valid(f, brute));
    const DeficientSubset cons = deficient_subset_constructive(f);
    CHECK(subset_is_valid(f, cons));
  }
  CHECK(hypothesis_hits > 50);
}
