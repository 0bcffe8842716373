#pragma once

#include <gmpxx.h>

#include <string>

#include "cuspscan/errors.hpp"

namespace cusp {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator, zero as 0/1), which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

/// Parse "p" or "p/q" with q > 0 after canonicalization. Throws ParseError.
Rat rat_from_string(const std::string& s);

/// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace cusp
