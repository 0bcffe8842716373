#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cuspscan/potential.hpp"

namespace cusp {

/// Rational linear form on the log coordinates (u_1,v_1,...,u_n,v_n),
/// stored as its 2n coefficients in that order.
struct LinearForm {
  std::vector<Rat> coeff;

  int cusps() const { return static_cast<int>(coeff.size()) / 2; }
  bool is_zero() const;
};

/// The form as a series in u, with each v_i replaced by its branch series.
Series<TauScalar> expand_form(const LinearForm& f, const LogBranch& br);

/// One solved instance of a fit under a concrete tau assignment. In rational
/// mode the assignment is the potential's own tau vector.
struct ThetaSample {
  std::vector<Rat> tau;
  /// Coefficient of s_1^{a_1}...s_r^{a_r} in Theta, keyed by (a_1..a_r).
  std::map<Mono, Rat, GrlexLess> coeffs;
};

/// Result of fitting s_0 = Theta(s_1,...,s_r) degree by degree. On success,
/// composing Theta with the generator series reproduces the target exactly
/// through degree `order` for every solved sample.
struct ThetaFit {
  bool success = false;
  int fail_degree = 0;  // first inconsistent degree when !success
  int gen_count = 0;
  int order = 0;  // claims hold through this total degree
  std::vector<ThetaSample> samples;  // samples[0] is the primary one

  const ThetaSample& primary() const { return samples.front(); }
};

struct ThetaFitOptions {
  int symbolic_samples = 3;  // >= 3 cross-checked substitutions
  uint64_t seed = 0x5eed5eedULL;
  int max_sample_rejects = 256;
};

/// Solve s0 = Theta(gens...) through degree D-1, where every form is first
/// expanded via the potential's branch. Generator linear parts must be
/// linearly independent (DependentGenerators otherwise). In Symbolic mode
/// the solve runs under several random rational tau assignments (rejecting
/// ones that degenerate the generators) and the verdicts must agree
/// unanimously; disagreement raises UnstableFit.
ThetaFit theta_fit(const PotentialSeries& phi, const LinearForm& s0,
                   const std::vector<LinearForm>& gens,
                   const ThetaFitOptions& opt = {});

/// With the last l generators designated t-forms: true iff every solved
/// Theta coefficient on a monomial with positive t-degree vanishes (in every
/// sample). Pre: fit succeeded, 0 <= l <= gen_count.
bool theta_t_independence(const ThetaFit& fit, int l);

/// Row rank over Q of the odd-monomial coefficient matrix of all degree-m
/// products of staircase forms, plus a per-product flag telling whether the
/// product owns an odd monomial absent from all other products.
struct OddMatrixRank {
  int rank = 0;
  std::vector<bool> unique_odd_term;
  int product_count = 0;
};

/// forms[k] holds the coefficients of y_k = sum c_ki u_i over u_1..u_N.
/// Each form must be supported on a contiguous range [j_k, n_k] with every
/// coefficient in the range nonzero, j_1 < ... < j_l, n_1 < ... < n_l and
/// j_k < n_k (MalformedStaircase otherwise). A monomial is odd iff some
/// exponent is odd.
OddMatrixRank odd_matrix_rank(const std::vector<std::vector<Rat>>& forms, int m);

/// Both halves of the two-cusped relation test: a*u1 + b*v1 + c*u2 + d*v2
/// must fit a univariate series in d*u1 + b*u2, and a*u1 + b*v1 - c*u2 - d*v2
/// one in d*u1 - b*u2, through degree D-1. Pre: phi has two cusps and
/// (b, d) != (0, 0).
bool two_cusp_relation_check(const PotentialSeries& phi, long a, long b, long c, long d);

}  // namespace cusp
