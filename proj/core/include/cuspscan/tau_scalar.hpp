#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cuspscan/rational.hpp"

namespace cusp {

/// Element of the Q-span of squarefree monomials in the cusp shapes
/// tau_1..tau_n. Monomials are exponent sets stored as bitmasks over
/// {0..n-1}; the empty set indexes the rational constant part. No zero
/// coefficients are stored.
///
/// Under the rational-independence hypothesis on the cusp shapes, these
/// monomials are linearly independent over Q, so is_zero() is a sound
/// function-zero test. Multiplication that would produce a repeated shape
/// (tau_i^2) leaves the span and throws SquarefreeViolation.
class TauScalar {
 public:
  static constexpr int kMaxCusps = 64;

  TauScalar() = default;
  explicit TauScalar(int n) : n_(check_n(n)) {}

  /// The rational constant c.
  static TauScalar constant(int n, const Rat& c);
  /// The single shape tau_i (1-based cusp index).
  static TauScalar shape(int n, int i);
  /// c * tau_{i1}...tau_{il} for a set of distinct 1-based indices.
  static TauScalar monomial(int n, const std::vector<int>& indices, const Rat& c);

  int cusp_count() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The coefficient of the empty monomial; requires is_constant().
  Rat constant_value() const;

  Rat coeff(uint64_t mask) const;
  const std::map<uint64_t, Rat>& terms() const { return terms_; }

  TauScalar operator-() const;
  TauScalar& operator+=(const TauScalar& o);
  TauScalar& operator-=(const TauScalar& o);
  friend TauScalar operator+(TauScalar a, const TauScalar& b) { return a += b; }
  friend TauScalar operator-(TauScalar a, const TauScalar& b) { return a -= b; }

  /// Distributive product; monomial product is the union of exponent sets.
  /// Throws SquarefreeViolation if any two multiplied monomials share an index.
  friend TauScalar operator*(const TauScalar& a, const TauScalar& b);

  TauScalar& operator*=(const Rat& c);
  friend TauScalar operator*(TauScalar a, const Rat& c) { return a *= c; }
  friend TauScalar operator*(const Rat& c, TauScalar a) { return a *= c; }

  bool operator==(const TauScalar& o) const = default;

  /// Evaluate under a concrete assignment tau_i := values[i-1].
  Rat eval(const std::vector<Rat>& values) const;

  std::string to_string() const;

 private:
  static int check_n(int n);
  void set_coeff(uint64_t mask, Rat c);

  int n_ = 0;
  std::map<uint64_t, Rat> terms_;
};

inline bool tau_is_zero(const TauScalar& x) { return x.is_zero(); }

}  // namespace cusp
