// Shared deterministic generators for unit and acceptance tests.
#pragma once

#include <random>
#include <vector>

#include "cuspscan/json_io.hpp"
#include "cuspscan/potential.hpp"
#include "cuspscan/qmatrix.hpp"

namespace testsup {

using cusp::CoeffMode;
using cusp::IntMatrix;
using cusp::Mono;
using cusp::PotentialSeries;
using cusp::QMatrix;
using cusp::Rat;
using cusp::Series;
using cusp::TauScalar;

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat rand_rat(Rng& rng, long num_abs, long den_max) {
  Rat q(rand_int(rng, -num_abs, num_abs), rand_int(rng, 1, den_max));
  q.canonicalize();
  return q;
}

inline Rat rand_nonzero_rat(Rng& rng, long num_abs, long den_max) {
  while (true) {
    Rat q = rand_rat(rng, num_abs, den_max);
    if (q != 0) return q;
  }
}

/// Pairwise-distinct nonzero rationals, one per cusp.
inline std::vector<Rat> rand_distinct_tau(Rng& rng, int n) {
  std::vector<Rat> tau;
  while (static_cast<int>(tau.size()) < n) {
    const Rat q = rand_nonzero_rat(rng, 50, 20);
    bool fresh = true;
    for (const Rat& t : tau)
      if (t == q) fresh = false;
    if (fresh) tau.push_back(q);
  }
  return tau;
}

inline IntMatrix rand_int_matrix(Rng& rng, int rows, int cols, long coeff_abs) {
  IntMatrix m(rows, cols);
  for (auto& e : m.e) e = rand_int(rng, -coeff_abs, coeff_abs);
  return m;
}

/// The mandatory quadratic part tau_1 u_1^2 + ... + tau_n u_n^2.
inline Series<TauScalar> symbolic_quadratic(int n, int d) {
  Series<TauScalar> s(n, d);
  for (int i = 0; i < n; ++i) {
    Mono m(n, 0);
    m[i] = 2;
    s.add_term(m, TauScalar::shape(n, i + 1));
  }
  return s;
}

inline Series<TauScalar> rational_quadratic(int n, int d, const std::vector<Rat>& tau) {
  Series<TauScalar> s(n, d);
  for (int i = 0; i < n; ++i) {
    Mono m(n, 0);
    m[i] = 2;
    s.add_term(m, TauScalar::constant(n, tau[i]));
  }
  return s;
}

struct ExtraTerm {
  Mono u;
  TauScalar coeff;
};

inline PotentialSeries make_symbolic_potential(int n, int d,
                                               const std::vector<ExtraTerm>& extra = {}) {
  Series<TauScalar> s = symbolic_quadratic(n, d);
  for (const auto& t : extra) s.add_term(t.u, t.coeff);
  return PotentialSeries(n, d, CoeffMode::Symbolic, {}, std::move(s));
}

inline PotentialSeries make_rational_potential(int n, int d, const std::vector<Rat>& tau,
                                               const std::vector<ExtraTerm>& extra = {}) {
  Series<TauScalar> s = rational_quadratic(n, d, tau);
  for (const auto& t : extra) s.add_term(t.u, t.coeff);
  return PotentialSeries(n, d, CoeffMode::Rational, tau, std::move(s));
}

/// Random even exponent vector with total degree in [4, d], not all zero.
inline Mono rand_even_mono(Rng& rng, int n, int d) {
  while (true) {
    Mono m(n, 0);
    int budget = d;
    for (int i = 0; i < n; ++i) {
      const int e = 2 * static_cast<int>(rand_int(rng, 0, budget / 2));
      m[i] = e;
      budget -= e;
    }
    const int deg = cusp::total_degree(m);
    if (deg >= 4 && deg <= d) return m;
  }
}

/// Random valid symbolic potential: quadratic part plus random even terms
/// with rational or single-shape coefficients.
inline PotentialSeries rand_symbolic_potential(Rng& rng, int n, int d, int extra_terms) {
  Series<TauScalar> s = symbolic_quadratic(n, d);
  for (int t = 0; t < extra_terms; ++t) {
    const Mono m = rand_even_mono(rng, n, d);
    TauScalar c = rand_int(rng, 0, 3) == 0
                      ? TauScalar::monomial(n, {static_cast<int>(rand_int(rng, 1, n))},
                                            rand_nonzero_rat(rng, 4, 3))
                      : TauScalar::constant(n, rand_nonzero_rat(rng, 4, 3));
    s.add_term(m, c);
  }
  return PotentialSeries(n, d, CoeffMode::Symbolic, {}, std::move(s));
}

inline PotentialSeries rand_rational_potential(Rng& rng, int n, int d, int extra_terms) {
  const std::vector<Rat> tau = rand_distinct_tau(rng, n);
  Series<TauScalar> s = rational_quadratic(n, d, tau);
  for (int t = 0; t < extra_terms; ++t)
    s.add_term(rand_even_mono(rng, n, d), TauScalar::constant(n, rand_nonzero_rat(rng, 4, 3)));
  return PotentialSeries(n, d, CoeffMode::Rational, tau, std::move(s));
}

/// Apply a random sequence of invertible rational row operations.
inline QMatrix rand_row_ops(Rng& rng, QMatrix m, int steps) {
  for (int s = 0; s < steps; ++s) {
    const int kind = static_cast<int>(rand_int(rng, 0, 2));
    const int i = static_cast<int>(rand_int(rng, 0, m.rows - 1));
    int j = static_cast<int>(rand_int(rng, 0, m.rows - 1));
    switch (kind) {
      case 0:
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        break;
      case 1: {
        const Rat f = rand_nonzero_rat(rng, 5, 3);
        for (int c = 0; c < m.cols; ++c) m.at(i, c) *= f;
        break;
      }
      default: {
        if (i == j) j = (j + 1) % m.rows;
        const Rat f = rand_rat(rng, 5, 3);
        for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
        break;
      }
    }
  }
  return m;
}

/// Apply random unimodular integer row operations (lattice preserved).
inline IntMatrix rand_unimodular_ops(Rng& rng, IntMatrix m, int steps) {
  for (int s = 0; s < steps; ++s) {
    const int kind = static_cast<int>(rand_int(rng, 0, 2));
    const int i = static_cast<int>(rand_int(rng, 0, m.rows - 1));
    int j = static_cast<int>(rand_int(rng, 0, m.rows - 1));
    switch (kind) {
      case 0:
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        break;
      case 1:
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
        break;
      default: {
        if (i == j) continue;
        const long f = rand_int(rng, -3, 3);
        for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
        break;
      }
    }
  }
  return m;
}

}  // namespace testsup
