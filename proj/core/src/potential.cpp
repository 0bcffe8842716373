#include "cuspscan/potential.hpp"

#include <sstream>

namespace cusp {

Series<Rat> eval_tau(const Series<TauScalar>& s, const std::vector<Rat>& tau) {
  Series<Rat> r(s.vars(), s.max_deg());
  for (const auto& [m, c] : s.terms()) r.add_term(m, c.eval(tau));
  return r;
}

namespace {

std::string mono_str(const Mono& m) {
  std::ostringstream os;
  os << "u^(";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << m[i];
  }
  os << ')';
  return os.str();
}

void check_partition(int n, const CuspSupport& a, const CuspSupport& b,
                     const CuspSupport& c) {
  if (a.empty() || b.empty())
    throw InputError("wgi_check: A and B must be nonempty");
  std::set<int> seen;
  for (const CuspSupport* s : {&a, &b, &c}) {
    for (int i : *s) {
      if (i < 1 || i > n) throw InputError("cusp index out of range");
      if (!seen.insert(i).second)
        throw InputError("wgi_check: A, B, C must be disjoint");
    }
  }
  if (static_cast<int>(seen.size()) != n)
    throw InputError("wgi_check: A, B, C must cover all cusps");
}

}  // namespace

PotentialSeries::PotentialSeries(int n, int truncation, CoeffMode mode,
                                 std::vector<Rat> tau, Series<TauScalar> terms)
    : n_(n), d_(truncation), mode_(mode), tau_(std::move(tau)), terms_(std::move(terms)) {
  if (n < 1 || n > TauScalar::kMaxCusps)
    throw InputError("PotentialSeries: cusp count out of range");
  if (d_ < 2) throw InputError("PotentialSeries: truncation degree must be >= 2");
  if (terms_.vars() != n_)
    throw InputError("PotentialSeries: series variable count mismatch");
  if (mode_ == CoeffMode::Rational) {
    if (static_cast<int>(tau_.size()) != n_)
      throw InputError("PotentialSeries: rational mode needs one tau value per cusp");
    for (const Rat& t : tau_)
      if (t == 0)
        throw InputError("PotentialSeries: tau values must be nonzero");
  } else if (!tau_.empty()) {
    throw InputError("PotentialSeries: tau values are for rational mode only");
  }

  for (const auto& [m, c] : terms_.terms()) {
    const int deg = total_degree(m);
    if (deg < 2 || deg > d_)
      throw ParityViolation("potential term " + mono_str(m) +
                            ": total degree outside [2, D]");
    for (int e : m)
      if (e % 2 != 0)
        throw ParityViolation("potential term " + mono_str(m) +
                              ": odd exponent (series must be even in each argument)");
    if (c.cusp_count() != n_)
      throw InputError("potential term " + mono_str(m) + ": coefficient cusp count mismatch");
    if (mode_ == CoeffMode::Rational && !c.is_constant())
      throw ParityViolation("potential term " + mono_str(m) +
                            ": symbolic coefficient in rational mode");
  }

  // Quadratic part is exactly sum_i tau_i u_i^2.
  for (int i = 0; i < n_; ++i) {
    Mono sq(n_, 0);
    sq[i] = 2;
    const TauScalar got = terms_.get(sq, TauScalar(n_));
    const TauScalar want = mode_ == CoeffMode::Symbolic
                               ? TauScalar::shape(n_, i + 1)
                               : TauScalar::constant(n_, tau_[i]);
    if (!(got == want))
      throw ParityViolation("potential term " + mono_str(sq) +
                            ": quadratic part must be exactly tau_i * u_i^2");
  }
}

LogBranch branch_from_potential(const PotentialSeries& phi) {
  LogBranch br;
  br.n = phi.cusps();
  br.order = phi.truncation() - 1;
  br.v.reserve(br.n);
  for (int i = 0; i < br.n; ++i)
    br.v.push_back(phi.terms().derivative(i).scaled(Rat(1, 2)));
  return br;
}

bool branch_parity_ok(const LogBranch& br) {
  for (int i = 0; i < br.n; ++i) {
    for (const auto& [m, c] : br.v[i].terms()) {
      for (int j = 0; j < br.n; ++j) {
        const bool want_odd = (j == i);
        if ((m[j] % 2 != 0) != want_odd) return false;
      }
    }
  }
  return true;
}

bool sgi_check(const PotentialSeries& phi, const CuspSupport& a) {
  const int n = phi.cusps();
  if (a.empty() || static_cast<int>(a.size()) >= n)
    throw InputError("sgi_check: A must be nonempty and proper");
  for (int i : a)
    if (i < 1 || i > n) throw InputError("sgi_check: cusp index out of range");
  const LogBranch br = branch_from_potential(phi);
  for (int i : a)
    for (int j = 0; j < n; ++j)
      if (!a.count(j + 1) && br.v[i - 1].depends_on(j)) return false;
  return true;
}

bool wgi_check(const PotentialSeries& phi, const CuspSupport& a,
               const CuspSupport& b, const CuspSupport& c) {
  const int n = phi.cusps();
  check_partition(n, a, b, c);
  const LogBranch br = branch_from_potential(phi);
  for (int i : a) {
    Series<TauScalar> vi = br.v[i - 1];
    for (int j : c) vi = vi.with_var_zeroed(j - 1);
    for (int j : b)
      if (vi.depends_on(j - 1)) return false;
  }
  return true;
}

bool mixed_partial_check(const LogBranch& br) {
  for (int i = 0; i < br.n; ++i) {
    for (int j = i + 1; j < br.n; ++j) {
      const auto dij = br.v[i].derivative(j);
      const auto dji = br.v[j].derivative(i);
      if (!((dij - dji).is_zero())) return false;
    }
  }
  return true;
}

bool mixed_partial_check(const PotentialSeries& phi) {
  return mixed_partial_check(branch_from_potential(phi));
}

}  // namespace cusp
