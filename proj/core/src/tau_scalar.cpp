#include "cuspscan/tau_scalar.hpp"

#include <sstream>

namespace cusp {

int TauScalar::check_n(int n) {
  if (n < 0 || n > kMaxCusps)
    throw InputError("TauScalar: cusp count out of range");
  return n;
}

void TauScalar::set_coeff(uint64_t mask, Rat c) {
  if (c == 0)
    terms_.erase(mask);
  else
    terms_[mask] = std::move(c);
}

TauScalar TauScalar::constant(int n, const Rat& c) {
  TauScalar t(n);
  t.set_coeff(0, c);
  return t;
}

TauScalar TauScalar::shape(int n, int i) {
  return monomial(n, {i}, Rat(1));
}

TauScalar TauScalar::monomial(int n, const std::vector<int>& indices, const Rat& c) {
  TauScalar t(n);
  uint64_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > n)
      throw InputError("TauScalar: cusp index out of range");
    const uint64_t bit = uint64_t{1} << (i - 1);
    if (mask & bit) throw SquarefreeViolation("repeated shape index in monomial");
    mask |= bit;
  }
  t.set_coeff(mask, c);
  return t;
}

bool TauScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rat TauScalar::constant_value() const {
  if (!is_constant())
    throw InputError("TauScalar: not a rational constant");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Rat TauScalar::coeff(uint64_t mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Rat(0) : it->second;
}

TauScalar TauScalar::operator-() const {
  TauScalar r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

TauScalar& TauScalar::operator+=(const TauScalar& o) {
  if (n_ != o.n_) throw InputError("TauScalar: cusp counts differ");
  for (const auto& [m, c] : o.terms_) set_coeff(m, coeff(m) + c);
  return *this;
}

TauScalar& TauScalar::operator-=(const TauScalar& o) {
  if (n_ != o.n_) throw InputError("TauScalar: cusp counts differ");
  for (const auto& [m, c] : o.terms_) set_coeff(m, coeff(m) - c);
  return *this;
}

TauScalar operator*(const TauScalar& a, const TauScalar& b) {
  if (a.n_ != b.n_) throw InputError("TauScalar: cusp counts differ");
  TauScalar r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb)
        throw SquarefreeViolation(
            "product leaves the squarefree span; its zero test would be unsound");
      r.set_coeff(ma | mb, r.coeff(ma | mb) + ca * cb);
    }
  }
  return r;
}

TauScalar& TauScalar::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Rat TauScalar::eval(const std::vector<Rat>& values) const {
  if (static_cast<int>(values.size()) != n_)
    throw InputError("TauScalar::eval: expected one value per cusp");
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < n_; ++i)
      if (m & (uint64_t{1} << i)) term *= values[i];
    acc += term;
  }
  return acc;
}

std::string TauScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    for (int i = 0; i < n_; ++i)
      if (m & (uint64_t{1} << i)) os << "*t" << (i + 1);
  }
  return os.str();
}

}  // namespace cusp
