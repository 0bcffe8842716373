#pragma once

#include <set>
#include <vector>

#include "cuspscan/series.hpp"
#include "cuspscan/subgroup.hpp"

namespace cusp {

enum class CoeffMode { Symbolic, Rational };

/// Truncated potential series Phi(u_1..u_n), even in each variable, with
/// quadratic part exactly tau_1 u_1^2 + ... + tau_n u_n^2. In Symbolic mode
/// the tau_i stay formal (the coefficient of u_i^2 is the monomial tau_i);
/// in Rational mode concrete rational values are substituted for them.
class PotentialSeries {
 public:
  /// Validates every invariant; throws ParityViolation naming the offending
  /// monomial on failure.
  PotentialSeries(int n, int truncation, CoeffMode mode, std::vector<Rat> tau,
                  Series<TauScalar> terms);

  int cusps() const { return n_; }
  int truncation() const { return d_; }
  CoeffMode mode() const { return mode_; }
  /// Rational mode only: the substituted shape values.
  const std::vector<Rat>& tau() const { return tau_; }
  const Series<TauScalar>& terms() const { return terms_; }

 private:
  int n_;
  int d_;
  CoeffMode mode_;
  std::vector<Rat> tau_;
  Series<TauScalar> terms_;
};

/// The longitude branch v_i(u_1..u_n): components complete through order.
/// Produced from a potential these satisfy: v_i(0) = 0, v_i odd in u_i and
/// even in every other u_j, linear part tau_i u_i. Hand-built instances may
/// violate that; parity_ok checks it.
struct LogBranch {
  int n = 0;
  int order = 0;
  std::vector<Series<TauScalar>> v;
};

/// v_i = (1/2) dPhi/du_i, truncated to degree truncation() - 1.
LogBranch branch_from_potential(const PotentialSeries& phi);

/// Each v_i odd in u_i, even in u_j (j != i), no constant term.
bool branch_parity_ok(const LogBranch& br);

/// True iff for every i in a, v_i involves no u_j with j outside a
/// (through the branch order). Pre: a nonempty and proper.
bool sgi_check(const PotentialSeries& phi, const CuspSupport& a);

/// Keep the cusps in c complete (u_j := 0 for j in c), then require each
/// v_i, i in a, to be independent of every u_j, j in b.
/// Pre: a, b, c disjoint with union {1..n}; a and b nonempty.
bool wgi_check(const PotentialSeries& phi, const CuspSupport& a,
               const CuspSupport& b, const CuspSupport& c);

/// dv_i/du_j == dv_j/du_i for all i < j, through order - 1.
bool mixed_partial_check(const LogBranch& br);
bool mixed_partial_check(const PotentialSeries& phi);

}  // namespace cusp
