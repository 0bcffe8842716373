#include <set>

#include "cuspscan/anomaly.hpp"
#include "cuspscan/qmatrix.hpp"

namespace cusp {

namespace {

constexpr int kMaxPairs = 12;  // 2^n selection scans stay honest at desk scale

void validate(const PairFamily& f) {
  if (f.n < 1) throw InputError("PairFamily: n must be positive");
  if (f.n > kMaxPairs) throw InputError("PairFamily: n exceeds the exhaustive-scan cap");
  if (static_cast<int>(f.v.size()) != f.n || static_cast<int>(f.w.size()) != f.n)
    throw InputError("PairFamily: expected n pairs");
  for (int i = 0; i < f.n; ++i)
    if (static_cast<int>(f.v[i].size()) != f.n || static_cast<int>(f.w[i].size()) != f.n)
      throw InputError("PairFamily: vectors must live in Q^n");
}

QMatrix rows_matrix(const std::vector<const std::vector<Rat>*>& rows, int n) {
  QMatrix m(static_cast<int>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = (*rows[i])[j];
  return m;
}

int rank_of(const std::vector<const std::vector<Rat>*>& rows, int n) {
  return q_rank(rows_matrix(rows, n));
}

// Lexicographic iteration over selections as flag vectors (0 = v_i, 1 = w_i).
bool next_flags(std::vector<int>& flags) {
  for (int i = static_cast<int>(flags.size()) - 1; i >= 0; --i) {
    if (flags[i] == 0) {
      flags[i] = 1;
      for (size_t j = i + 1; j < flags.size(); ++j) flags[j] = 0;
      return true;
    }
  }
  return false;
}

const std::vector<Rat>& chosen(const PairFamily& f, const std::vector<int>& flags, int i) {
  return flags[i] ? f.w[i] : f.v[i];
}
const std::vector<Rat>& counter(const PairFamily& f, const std::vector<int>& flags, int i) {
  return flags[i] ? f.v[i] : f.w[i];
}

int family_rank(const PairFamily& f, const std::vector<int>& indices0) {
  std::vector<const std::vector<Rat>*> rows;
  for (int i : indices0) {
    rows.push_back(&f.v[i]);
    rows.push_back(&f.w[i]);
  }
  return rank_of(rows, f.n);
}

std::vector<int> to_one_based(const std::set<int>& s) {
  std::vector<int> out;
  for (int i : s) out.push_back(i + 1);
  return out;
}

DeficientSubset finish(const PairFamily& f, const std::set<int>& subset0) {
  std::vector<int> idx0(subset0.begin(), subset0.end());
  DeficientSubset d;
  d.indices = to_one_based(subset0);
  d.achieved_rank = family_rank(f, idx0);
  if (d.indices.empty() || static_cast<int>(d.indices.size()) >= f.n ||
      d.achieved_rank > static_cast<int>(d.indices.size()))
    throw InternalProofDeviation(
        "deficient_subset_constructive: emitted subset violates its invariants");
  return d;
}

}  // namespace

std::optional<std::vector<int>> independent_selection_witness(const PairFamily& f) {
  validate(f);
  std::vector<int> flags(f.n, 0);
  do {
    std::vector<const std::vector<Rat>*> rows;
    for (int i = 0; i < f.n; ++i) rows.push_back(&chosen(f, flags, i));
    if (rank_of(rows, f.n) == f.n) return flags;
  } while (next_flags(flags));
  return std::nullopt;
}

bool check_hypothesis(const PairFamily& f) {
  return !independent_selection_witness(f).has_value();
}

DeficientSubset deficient_subset_bruteforce(const PairFamily& f) {
  validate(f);
  if (f.n < 2) throw InputError("deficient subset: requires n >= 2");
  if (!check_hypothesis(f))
    throw HypothesisFailed("pair family admits an independent selection");
  for (int size = 1; size < f.n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      const int r = family_rank(f, idx);
      if (r <= size) {
        DeficientSubset d;
        for (int i : idx) d.indices.push_back(i + 1);
        d.achieved_rank = r;
        return d;
      }
      int p = size - 1;
      while (p >= 0 && idx[p] == f.n - (size - p)) --p;
      if (p < 0) break;
      ++idx[p];
      for (int j = p + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InternalProofDeviation("deficient_subset_bruteforce: no subset found");
}

DeficientSubset deficient_subset_constructive(const PairFamily& f) {
  validate(f);
  if (f.n < 2) throw InputError("deficient subset: requires n >= 2");
  if (!check_hypothesis(f))
    throw HypothesisFailed("pair family admits an independent selection");
  const int n = f.n;

  // Maximum independent selection: highest selection rank, lexicographically
  // first selection attaining it, greedy lex independent subset inside it.
  int best_rank = -1;
  std::vector<int> best_flags;
  {
    std::vector<int> flags(n, 0);
    do {
      std::vector<const std::vector<Rat>*> rows;
      for (int i = 0; i < n; ++i) rows.push_back(&chosen(f, flags, i));
      const int r = rank_of(rows, n);
      if (r > best_rank) {
        best_rank = r;
        best_flags = flags;
      }
    } while (next_flags(flags));
  }
  const int h = best_rank;  // < n by the hypothesis
  if (h == 0) {
    // Every vector vanishes; any proper subset qualifies.
    std::set<int> all_but_last;
    for (int i = 0; i + 1 < n; ++i) all_but_last.insert(i);
    return finish(f, all_but_last);
  }

  std::vector<int> sel;  // 0-based indices of U
  {
    std::vector<const std::vector<Rat>*> rows;
    for (int i = 0; i < n; ++i) {
      rows.push_back(&chosen(f, best_flags, i));
      if (rank_of(rows, n) != static_cast<int>(rows.size()))
        rows.pop_back();
      else
        sel.push_back(i);
    }
  }

  // Maximal counter set: greedy extension of U by counter vectors.
  std::set<int> counter_set;
  {
    std::vector<const std::vector<Rat>*> rows;
    for (int i : sel) rows.push_back(&chosen(f, best_flags, i));
    for (int i : sel) {
      rows.push_back(&counter(f, best_flags, i));
      if (rank_of(rows, n) != static_cast<int>(rows.size()))
        rows.pop_back();
      else
        counter_set.insert(i);
    }
  }
  const int k = static_cast<int>(counter_set.size());

  std::set<int> outside;
  {
    std::set<int> in_sel(sel.begin(), sel.end());
    for (int i = 0; i < n; ++i)
      if (!in_sel.count(i)) outside.insert(i);
  }

  if (h == k) {
    // All pairs outside the selection vanish.
    return finish(f, outside);
  }

  // Basis of the walk: chosen vectors at selection indices without a counter.
  std::vector<int> pool;
  for (int i : sel)
    if (!counter_set.count(i)) pool.push_back(i);

  QMatrix basis_t(n, static_cast<int>(pool.size()));
  for (size_t c = 0; c < pool.size(); ++c) {
    const auto& vec = chosen(f, best_flags, pool[c]);
    for (int r = 0; r < n; ++r) basis_t.at(r, static_cast<int>(c)) = vec[r];
  }
  // Expansion coefficients over the basis; a basis vector is interchangeable
  // with the expanded vector exactly when its coefficient is nonzero.
  const auto expand = [&](const std::vector<Rat>& vec) {
    const auto sol = q_solve(basis_t, vec);
    if (!sol)
      throw InternalProofDeviation(
          "deficient_subset_constructive: vector left the basis span");
    return *sol;
  };

  std::set<int> layer;
  for (int j : outside) {
    for (const auto* vec : {&f.v[j], &f.w[j]}) {
      bool zero = true;
      for (const Rat& x : *vec)
        if (x != 0) zero = false;
      if (zero) continue;
      const auto coeffs = expand(*vec);
      for (size_t c = 0; c < pool.size(); ++c)
        if (coeffs[c] != 0) layer.insert(pool[c]);
    }
  }
  if (layer.empty()) {
    // No outside vector is interchangeable with anything: all vanish.
    return finish(f, outside);
  }

  std::set<int> used;
  while (true) {
    used.insert(layer.begin(), layer.end());
    std::set<int> next;
    for (int i : layer) {
      const auto coeffs = expand(counter(f, best_flags, i));
      for (size_t c = 0; c < pool.size(); ++c)
        if (coeffs[c] != 0 && !used.count(pool[c])) next.insert(pool[c]);
    }
    if (next.empty()) return finish(f, used);
    layer = std::move(next);
  }
}

}  // namespace cusp
