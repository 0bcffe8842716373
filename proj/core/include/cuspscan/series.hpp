#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "cuspscan/rational.hpp"
#include "cuspscan/tau_scalar.hpp"

namespace cusp {

/// Exponent vector (i_1,...,i_n) of a monomial u_1^{i_1}...u_n^{i_n}.
using Mono = std::vector<int>;

inline int total_degree(const Mono& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

/// Graded lexicographic order: total degree first, then lex. The canonical
/// iteration order of every series, so reports are deterministic.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const TauScalar& c) { return c.is_zero(); }

/// Truncated formal power series in u_1..u_n with coefficients in C.
/// Coefficients are complete through total degree max_deg; higher terms are
/// never stored.
template <typename C>
class Series {
 public:
  using TermMap = std::map<Mono, C, GrlexLess>;

  Series() = default;
  Series(int n, int max_deg) : n_(n), max_deg_(max_deg) {}

  int vars() const { return n_; }
  int max_deg() const { return max_deg_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Mono& m, const C& c) {
    if (coeff_is_zero(c)) return;
    if (static_cast<int>(m.size()) != n_)
      throw InputError("Series: exponent vector length mismatch");
    if (total_degree(m) > max_deg_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Coefficient of m, or `zero` when absent.
  C get(const Mono& m, const C& zero) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
  }

  bool has(const Mono& m) const { return terms_.count(m) != 0; }

  Series& operator+=(const Series& o) {
    require_same_vars(o);
    max_deg_ = std::min(max_deg_, o.max_deg_);
    drop_above(max_deg_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_same_vars(o);
    max_deg_ = std::min(max_deg_, o.max_deg_);
    drop_above(max_deg_);
    for (const auto& [m, c] : o.terms_) {
      C neg = c;
      neg = -neg;
      add_term(m, neg);
    }
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  /// Scale every coefficient by a rational.
  Series scaled(const Rat& f) const {
    Series r(n_, max_deg_);
    if (f == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * f);
    return r;
  }

  /// d/du_j (j is 0-based). Complete through max_deg - 1.
  Series derivative(int j) const {
    Series r(n_, max_deg_ - 1);
    for (const auto& [m, c] : terms_) {
      if (m[j] == 0) continue;
      Mono d = m;
      d[j] -= 1;
      r.add_term(d, c * Rat(m[j]));
    }
    return r;
  }

  /// Substitute u_j := 0.
  Series with_var_zeroed(int j) const {
    Series r(n_, max_deg_);
    for (const auto& [m, c] : terms_)
      if (m[j] == 0) r.terms_.emplace(m, c);
    return r;
  }

  Series truncated(int d) const {
    Series r(n_, std::min(d, max_deg_));
    for (const auto& [m, c] : terms_) {
      if (total_degree(m) > d) break;  // grlex order: all later terms are higher
      r.terms_.emplace(m, c);
    }
    return r;
  }

  /// True iff some stored monomial has a positive exponent on u_j.
  bool depends_on(int j) const {
    for (const auto& [m, c] : terms_)
      if (m[j] > 0) return true;
    return false;
  }

  bool operator==(const Series& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  friend Series mul(const Series& a, const Series& b, int out_deg) {
    a.require_same_vars(b);
    Series r(a.n_, std::min({out_deg, a.max_deg_, b.max_deg_}));
    for (const auto& [ma, ca] : a.terms_) {
      const int da = total_degree(ma);
      if (da > r.max_deg_) break;
      for (const auto& [mb, cb] : b.terms_) {
        if (da + total_degree(mb) > r.max_deg_) break;
        Mono m(a.n_);
        for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

 private:
  void require_same_vars(const Series& o) const {
    if (n_ != o.n_) throw InputError("Series: variable counts differ");
  }
  void drop_above(int d) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (total_degree(it->first) > d)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  int n_ = 0;
  int max_deg_ = 0;
  TermMap terms_;
};

/// Substitute concrete tau values into symbolic coefficients.
Series<Rat> eval_tau(const Series<TauScalar>& s, const std::vector<Rat>& tau);

}  // namespace cusp
