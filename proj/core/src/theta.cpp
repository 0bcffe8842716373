#include "cuspscan/theta.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "cuspscan/qmatrix.hpp"

namespace cusp {

bool LinearForm::is_zero() const {
  for (const Rat& c : coeff)
    if (c != 0) return false;
  return true;
}

Series<TauScalar> expand_form(const LinearForm& f, const LogBranch& br) {
  if (f.cusps() != br.n || static_cast<int>(f.coeff.size()) != 2 * br.n)
    throw InputError("expand_form: form must have 2n coefficients");
  Series<TauScalar> s(br.n, br.order);
  for (int i = 0; i < br.n; ++i) {
    if (f.coeff[2 * i] != 0) {
      Mono m(br.n, 0);
      m[i] = 1;
      s.add_term(m, TauScalar::constant(br.n, f.coeff[2 * i]));
    }
    if (f.coeff[2 * i + 1] != 0) s += br.v[i].scaled(f.coeff[2 * i + 1]);
  }
  return s;
}

namespace {

// Linear part of each expanded form as a Jacobian-style row: the coefficient
// of u_j is a_j + tau_j * b_j.
JacobianMatrix forms_linear_matrix(const std::vector<LinearForm>& forms, int n) {
  JacobianMatrix j(static_cast<int>(forms.size()), n);
  for (size_t i = 0; i < forms.size(); ++i) {
    if (static_cast<int>(forms[i].coeff.size()) != 2 * n)
      throw InputError("theta_fit: form coefficient length mismatch");
    for (int c = 0; c < n; ++c)
      j.set(static_cast<int>(i), c, forms[i].coeff[2 * c], forms[i].coeff[2 * c + 1]);
  }
  return j;
}

// Multi-indices over r generators with |alpha| = d, lexicographically
// descending (matches the conventional product order y_1^d, ..., y_r^d).
void compositions(int r, int d, std::vector<Mono>& out) {
  Mono cur(r, 0);
  const std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == r - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  if (r > 0) rec(0, d);
}

struct RationalFit {
  bool success = true;
  int fail_degree = 0;
  std::map<Mono, Rat, GrlexLess> coeffs;
};

// Degree-by-degree solve of target = sum_alpha c_alpha * prod gens^alpha.
// All series must share vars and be complete through `order`, with zero
// constant terms and generator linear parts independent over Q.
RationalFit fit_series(const Series<Rat>& target, const std::vector<Series<Rat>>& gens,
                       int order) {
  const int r = static_cast<int>(gens.size());

  std::map<Mono, Series<Rat>, GrlexLess> powers;
  RationalFit fit;
  Series<Rat> residual = target;

  for (int d = 1; d <= order; ++d) {
    // Build generator power products of total degree d.
    std::vector<Mono> alphas;
    compositions(r, d, alphas);
    for (const Mono& a : alphas) {
      int i = 0;
      while (a[i] == 0) ++i;
      if (d == 1) {
        powers.emplace(a, gens[i]);
      } else {
        Mono prev = a;
        prev[i] -= 1;
        powers.emplace(a, mul(powers.at(prev), gens[i], order));
      }
    }

    // Equation set at degree d: one row per degree-d monomial present in the
    // residual or in any degree-d product.
    std::map<Mono, int, GrlexLess> row_of;
    const auto note = [&](const Mono& m) {
      if (total_degree(m) == d) row_of.emplace(m, 0);
    };
    for (const auto& [m, c] : residual.terms()) note(m);
    for (const Mono& a : alphas)
      for (const auto& [m, c] : powers.at(a).terms()) note(m);
    int k = 0;
    for (auto& [m, idx] : row_of) idx = k++;

    QMatrix sys(k, static_cast<int>(alphas.size()));
    std::vector<Rat> rhs(k, Rat(0));
    for (size_t j = 0; j < alphas.size(); ++j) {
      const auto& pw = powers.at(alphas[j]);
      for (const auto& [m, c] : pw.terms()) {
        if (total_degree(m) != d) continue;
        sys.at(row_of.at(m), static_cast<int>(j)) = c;
      }
    }
    for (const auto& [m, c] : residual.terms()) {
      if (total_degree(m) != d) continue;
      rhs[row_of.at(m)] = c;
    }

    const auto sol = q_solve(sys, rhs);
    if (!sol) {
      fit.success = false;
      fit.fail_degree = d;
      return fit;
    }
    for (size_t j = 0; j < alphas.size(); ++j) {
      if ((*sol)[j] == 0) continue;
      fit.coeffs[alphas[j]] = (*sol)[j];
      residual -= powers.at(alphas[j]).scaled((*sol)[j]);
    }
  }
  if (!residual.is_zero())
    throw InternalError("theta_fit: residual survived a consistent solve");
  return fit;
}

std::vector<Rat> draw_tau_sample(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Rat> tau;
  tau.reserve(n);
  while (static_cast<int>(tau.size()) < n) {
    const long p = num(rng);
    if (p == 0) continue;
    Rat q(p, den(rng));
    q.canonicalize();
    if (std::find(tau.begin(), tau.end(), q) != tau.end()) continue;
    tau.push_back(q);
  }
  return tau;
}

}  // namespace

ThetaFit theta_fit(const PotentialSeries& phi, const LinearForm& s0,
                   const std::vector<LinearForm>& gens, const ThetaFitOptions& opt) {
  if (gens.empty()) throw InputError("theta_fit: at least one generator form required");
  if (s0.is_zero()) throw InputError("theta_fit: target form is zero");
  for (const LinearForm& g : gens)
    if (g.is_zero()) throw InputError("theta_fit: zero generator form");

  const int n = phi.cusps();
  const int order = phi.truncation() - 1;
  const LogBranch br = branch_from_potential(phi);
  const JacobianMatrix lin = forms_linear_matrix(gens, n);

  ThetaFit fit;
  fit.gen_count = static_cast<int>(gens.size());
  fit.order = order;

  const Series<TauScalar> target_sym = expand_form(s0, br);
  std::vector<Series<TauScalar>> gens_sym;
  gens_sym.reserve(gens.size());
  for (const LinearForm& g : gens) gens_sym.push_back(expand_form(g, br));

  const auto run_sample = [&](const std::vector<Rat>& tau) {
    std::vector<Series<Rat>> g;
    g.reserve(gens_sym.size());
    for (const auto& s : gens_sym) g.push_back(eval_tau(s, tau));
    return fit_series(eval_tau(target_sym, tau), g, order);
  };

  if (phi.mode() == CoeffMode::Rational) {
    if (evaluated_rank(lin, phi.tau()) != fit.gen_count)
      throw DependentGenerators("theta_fit: generator linear parts are dependent");
    const RationalFit rf = run_sample(phi.tau());
    fit.success = rf.success;
    fit.fail_degree = rf.fail_degree;
    fit.samples.push_back(ThetaSample{phi.tau(), rf.coeffs});
    return fit;
  }

  if (minor_rank(lin) != fit.gen_count)
    throw DependentGenerators("theta_fit: generator linear parts are dependent");

  std::mt19937_64 rng(opt.seed);
  int rejects = 0;
  while (static_cast<int>(fit.samples.size()) < opt.symbolic_samples) {
    const std::vector<Rat> tau = draw_tau_sample(rng, n);
    // Reject assignments that degenerate the generators: there the solve
    // divides by quantities that are only generically nonzero.
    if (evaluated_rank(lin, tau) != fit.gen_count) {
      if (++rejects > opt.max_sample_rejects)
        throw UnstableFit("theta_fit: could not draw non-degenerate tau samples");
      continue;
    }
    const RationalFit rf = run_sample(tau);
    if (fit.samples.empty()) {
      fit.success = rf.success;
      fit.fail_degree = rf.fail_degree;
    } else if (fit.success != rf.success) {
      throw UnstableFit("theta_fit: tau substitutions disagree on the fit verdict");
    }
    fit.samples.push_back(ThetaSample{tau, rf.coeffs});
  }
  return fit;
}

bool theta_t_independence(const ThetaFit& fit, int l) {
  if (!fit.success) throw InputError("theta_t_independence: fit did not succeed");
  if (l < 0 || l > fit.gen_count)
    throw InputError("theta_t_independence: t-count out of range");
  if (l == 0) return true;
  for (const ThetaSample& s : fit.samples) {
    for (const auto& [alpha, c] : s.coeffs) {
      if (c == 0) continue;
      for (int j = fit.gen_count - l; j < fit.gen_count; ++j)
        if (alpha[j] > 0) return false;
    }
  }
  return true;
}

OddMatrixRank odd_matrix_rank(const std::vector<std::vector<Rat>>& forms, int m) {
  const int l = static_cast<int>(forms.size());
  if (l == 0) throw MalformedStaircase("odd_matrix_rank: no forms");
  if (m < 1) throw InputError("odd_matrix_rank: degree must be positive");
  const int n = static_cast<int>(forms[0].size());

  std::vector<int> lo(l), hi(l);
  for (int k = 0; k < l; ++k) {
    if (static_cast<int>(forms[k].size()) != n)
      throw MalformedStaircase("odd_matrix_rank: form lengths differ");
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (forms[k][i] == 0) continue;
      if (a < 0) a = i;
      b = i;
    }
    if (a < 0) throw MalformedStaircase("odd_matrix_rank: zero form");
    for (int i = a; i <= b; ++i)
      if (forms[k][i] == 0)
        throw MalformedStaircase("odd_matrix_rank: zero coefficient inside support range");
    if (a >= b) throw MalformedStaircase("odd_matrix_rank: support must span j_k < n_k");
    lo[k] = a;
    hi[k] = b;
  }
  for (int k = 1; k < l; ++k)
    if (lo[k] <= lo[k - 1] || hi[k] <= hi[k - 1])
      throw MalformedStaircase("odd_matrix_rank: supports must form a staircase");

  std::vector<Series<Rat>> base;
  base.reserve(l);
  for (int k = 0; k < l; ++k) {
    Series<Rat> s(n, m);
    for (int i = 0; i < n; ++i) {
      if (forms[k][i] == 0) continue;
      Mono mono(n, 0);
      mono[i] = 1;
      s.add_term(mono, forms[k][i]);
    }
    base.push_back(std::move(s));
  }

  std::vector<Mono> alphas;
  compositions(l, m, alphas);
  std::vector<Series<Rat>> products;
  products.reserve(alphas.size());
  for (const Mono& a : alphas) {
    Series<Rat> p(n, m);
    Mono one(n, 0);
    p.add_term(one, Rat(1));
    for (int k = 0; k < l; ++k)
      for (int t = 0; t < a[k]; ++t) p = mul(p, base[k], m);
    products.push_back(std::move(p));
  }

  const auto is_odd = [](const Mono& mono) {
    for (int e : mono)
      if (e % 2 != 0) return true;
    return false;
  };
  std::map<Mono, int, GrlexLess> col_of;
  for (const auto& p : products)
    for (const auto& [mono, c] : p.terms())
      if (is_odd(mono)) col_of.emplace(mono, 0);
  int k = 0;
  for (auto& [mono, idx] : col_of) idx = k++;

  QMatrix mat(static_cast<int>(products.size()), k);
  for (size_t i = 0; i < products.size(); ++i)
    for (const auto& [mono, c] : products[i].terms())
      if (is_odd(mono)) mat.at(static_cast<int>(i), col_of.at(mono)) = c;

  OddMatrixRank out;
  out.product_count = static_cast<int>(products.size());
  out.rank = q_rank(mat);
  out.unique_odd_term.resize(products.size(), false);
  for (int i = 0; i < mat.rows; ++i) {
    for (int j = 0; j < mat.cols; ++j) {
      if (mat.at(i, j) == 0) continue;
      bool alone = true;
      for (int i2 = 0; i2 < mat.rows && alone; ++i2)
        if (i2 != i && mat.at(i2, j) != 0) alone = false;
      if (alone) {
        out.unique_odd_term[static_cast<size_t>(i)] = true;
        break;
      }
    }
  }
  return out;
}

bool two_cusp_relation_check(const PotentialSeries& phi, long a, long b, long c, long d) {
  if (phi.cusps() != 2)
    throw InputError("two_cusp_relation_check: potential must have two cusps");
  if (b == 0 && d == 0)
    throw InputError("two_cusp_relation_check: (b, d) must not both vanish");

  const auto form = [](long u1, long v1, long u2, long v2) {
    return LinearForm{{Rat(u1), Rat(v1), Rat(u2), Rat(v2)}};
  };
  const ThetaFit first = theta_fit(phi, form(a, b, c, d), {form(d, 0, b, 0)});
  if (!first.success) return false;
  const ThetaFit second = theta_fit(phi, form(a, b, -c, -d), {form(d, 0, -b, 0)});
  return second.success;
}

}  // namespace cusp
