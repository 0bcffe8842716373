#include "doctest.h"
#include "helpers.hpp"

#include "cuspscan/qmatrix.hpp"

using namespace cusp;
using testsup::Rng;

TEST_CASE("q_rank on pinned examples") {
  CHECK(q_rank(QMatrix{{1, 0}, {0, 1}}) == 2);
  CHECK(q_rank(QMatrix{{1, 2}, {2, 4}}) == 1);
  // row3 = row1 + row2
  CHECK(q_rank(QMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}) == 2);
  CHECK(q_rank(QMatrix(0, 3)) == 0);
  CHECK(q_rank(QMatrix(2, 2)) == 0);
}

TEST_CASE("q_rank equals rank of the transpose") {
  Rng rng(101);
  for (int it = 0; it < 200; ++it) {
    const int r = static_cast<int>(testsup::rand_int(rng, 1, 5));
    const int c = static_cast<int>(testsup::rand_int(rng, 1, 5));
    QMatrix m(r, c);
    for (auto& e : m.e) e = testsup::rand_rat(rng, 4, 3);
    CHECK(q_rank(m) == q_rank(transpose(m)));
  }
}

TEST_CASE("q_rank is invariant under invertible row operations") {
  Rng rng(102);
  for (int it = 0; it < 200; ++it) {
    const int r = static_cast<int>(testsup::rand_int(rng, 2, 5));
    const int c = static_cast<int>(testsup::rand_int(rng, 1, 5));
    QMatrix m(r, c);
    for (auto& e : m.e) e = testsup::rand_rat(rng, 4, 3);
    const QMatrix mixed = testsup::rand_row_ops(rng, m, 8);
    CHECK(q_rank(m) == q_rank(mixed));
  }
}

TEST_CASE("hnf on pinned examples") {
  CHECK(hnf(IntMatrix{{2, 0}, {0, 2}}) == IntMatrix{{2, 0}, {0, 2}});
  CHECK(hnf(IntMatrix{{1, 0}, {1, 0}}) == IntMatrix{{1, 0}});
  // A row swap is the whole reduction here.
  CHECK(hnf(IntMatrix{{0, 1, 1}, {1, 0, 1}}) == IntMatrix{{1, 0, 1}, {0, 1, 1}});
}

TEST_CASE("hnf is idempotent and canonical under unimodular row ops") {
  Rng rng(103);
  for (int it = 0; it < 300; ++it) {
    const int r = static_cast<int>(testsup::rand_int(rng, 1, 4));
    const int c = static_cast<int>(testsup::rand_int(rng, 1, 6));
    const IntMatrix m = testsup::rand_int_matrix(rng, r, c, 4);
    const IntMatrix h = hnf(m);
    CHECK(hnf(h) == h);
    CHECK(hnf(testsup::rand_unimodular_ops(rng, m, 10)) == h);
  }
}

TEST_CASE("lattice_contains on pinned examples") {
  CHECK(lattice_contains(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{3, 5}}));
  CHECK_FALSE(lattice_contains(IntMatrix{{2, 0}}, IntMatrix{{1, 0}}));
  // (1,3) = (1,1) + (0,2)
  CHECK(lattice_contains(IntMatrix{{1, 1}, {0, 2}}, IntMatrix{{1, 3}}));
}

TEST_CASE("mutual lattice containment forces equal HNF") {
  Rng rng(104);
  int hits = 0;
  for (int it = 0; it < 400; ++it) {
    const int c = static_cast<int>(testsup::rand_int(rng, 1, 4));
    const IntMatrix a = testsup::rand_int_matrix(rng, 2, c, 2);
    const IntMatrix b = testsup::rand_int_matrix(rng, 2, c, 2);
    if (lattice_contains(a, b) && lattice_contains(b, a)) {
      CHECK(hnf(a) == hnf(b));
      ++hits;
    }
    // A lattice always contains itself (after any unimodular remix).
    CHECK(lattice_contains(a, testsup::rand_unimodular_ops(rng, a, 6)));
  }
  CHECK(hits > 0);
}

TEST_CASE("left_null_rows spans the left kernel") {
  Rng rng(105);
  for (int it = 0; it < 200; ++it) {
    const int r = static_cast<int>(testsup::rand_int(rng, 1, 5));
    const int c = static_cast<int>(testsup::rand_int(rng, 1, 5));
    const IntMatrix m = testsup::rand_int_matrix(rng, r, c, 3);
    const IntMatrix k = left_null_rows(m);
    CHECK(k.rows == r - q_rank(to_qmatrix(m)));
    for (int i = 0; i < k.rows; ++i)
      for (int j = 0; j < c; ++j) {
        Int acc = 0;
        for (int t = 0; t < r; ++t) acc += k.at(i, t) * m.at(t, j);
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("saturate_rows returns the primitive lattice") {
  CHECK(saturate_rows(IntMatrix{{2, 0}, {0, 2}}) == IntMatrix{{1, 0}, {0, 1}});
  CHECK(saturate_rows(IntMatrix{{2, 4}}) == IntMatrix{{1, 2}});
  CHECK(saturate_rows(IntMatrix{{1, 1}, {0, 2}}) == IntMatrix{{1, 0}, {0, 1}});
  const IntMatrix empty(0, 4);
  CHECK(saturate_rows(empty).rows == 0);

  Rng rng(106);
  for (int it = 0; it < 200; ++it) {
    const int r = static_cast<int>(testsup::rand_int(rng, 1, 3));
    const int c = static_cast<int>(testsup::rand_int(rng, 1, 5));
    const IntMatrix m = testsup::rand_int_matrix(rng, r, c, 3);
    const IntMatrix s = saturate_rows(m);
    // Same Q-span, contains the original, and is itself saturated.
    CHECK(q_rank(to_qmatrix(s)) == q_rank(to_qmatrix(m)));
    CHECK(s.rows == q_rank(to_qmatrix(m)));
    if (hnf(m).rows > 0) CHECK(lattice_contains(s, m));
    CHECK(saturate_rows(s) == s);
  }
}

TEST_CASE("q_solve finds exact solutions and flags inconsistency") {
  const QMatrix a{{1, 2}, {3, 4}};
  const auto x = q_solve(a, {Rat(5), Rat(11)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(2));

  const QMatrix sing{{1, 1}, {2, 2}};
  CHECK_FALSE(q_solve(sing, {Rat(1), Rat(3)}).has_value());
  const auto y = q_solve(sing, {Rat(1), Rat(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == Rat(1));

  Rng rng(107);
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(testsup::rand_int(rng, 1, 4));
    QMatrix m(n + 1, n);
    for (auto& e : m.e) e = testsup::rand_rat(rng, 3, 2);
    std::vector<Rat> x0;
    for (int i = 0; i < n; ++i) x0.push_back(testsup::rand_rat(rng, 3, 2));
    std::vector<Rat> b(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < n; ++j) b[i] += m.at(i, j) * x0[j];
    const auto sol = q_solve(m, b);
    REQUIRE(sol.has_value());
    for (int i = 0; i <= n; ++i) {
      Rat acc(0);
      for (int j = 0; j < n; ++j) acc += m.at(i, j) * (*sol)[j];
      CHECK(acc == b[i]);
    }
  }
}

TEST_CASE("rational parsing is strict") {
  CHECK(rat_from_string("3/6") == Rat(1, 2));
  CHECK(rat_from_string("-4/2") == Rat(-2));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_to_string(Rat(-1, 3)) == "-1/3");
  CHECK(rat_to_string(rat(4, 2)) == "2");
  CHECK_THROWS_AS((void)rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS((void)rat_from_string("a"), ParseError);
  CHECK_THROWS_AS((void)rat_from_string("1/-2"), ParseError);
  CHECK_THROWS_AS((void)rat_from_string(""), ParseError);
  CHECK_THROWS_AS((void)rat_from_string("1.5"), ParseError);
}
