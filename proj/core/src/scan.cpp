#include "cuspscan/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

namespace cusp {

namespace {

void validate(const ScanConfig& cfg) {
  if (cfg.n < 1) throw InputError("scan: cusp count must be positive");
  if (cfg.mode == CoeffMode::Symbolic && cfg.n > ScanConfig::kMaxSymbolicCusps)
    throw InputError("scan: symbolic scans support at most 16 cusps");
  if (cfg.max_coeff < 1) throw InputError("scan: max coefficient must be >= 1");
  if (cfg.codim_min < 0 || cfg.codim_max < cfg.codim_min)
    throw InputError("scan: bad codimension range");
  if (cfg.mode == CoeffMode::Rational &&
      static_cast<int>(cfg.tau.size()) != cfg.n)
    throw InputError("scan: rational mode needs one tau value per cusp");
  if (cfg.jobs < 1) throw InputError("scan: jobs must be >= 1");
}

}  // namespace

double scan_box_estimate(const ScanConfig& cfg) {
  const double base = 2.0 * static_cast<double>(cfg.max_coeff) + 1.0;
  double total = 0;
  for (int r = std::max(1, cfg.codim_min); r <= cfg.codim_max; ++r)
    total += std::pow(base, 2.0 * cfg.n * r);
  return total;
}

ScanOutcome run_scan(const ScanConfig& cfg) {
  validate(cfg);
  const double estimate = scan_box_estimate(cfg);
  if (estimate > ScanConfig::kMaxBoxSize)
    throw InputError("scan: box too large (about " + std::to_string(estimate) +
                     " raw matrices; limit " +
                     std::to_string(ScanConfig::kMaxBoxSize) + ")");

  ScanOutcome out;
  const int width = 2 * cfg.n;
  const long base = 2 * cfg.max_coeff + 1;

  // Phase 1: enumerate the box, canonicalize each matrix to the saturation
  // of its row lattice, dedup.
  std::map<std::string, IntMatrix> unique;  // key -> canonical rel
  std::mutex merge_mutex;
  for (int r = std::max(1, cfg.codim_min); r <= cfg.codim_max; ++r) {
    long long total = 1;
    for (int i = 0; i < width * r; ++i) total *= base;
    out.raw_enumerated += total;

    const int workers = std::max(1, std::min<int>(cfg.jobs, std::thread::hardware_concurrency()));
    std::atomic<long long> cursor{0};
    constexpr long long kChunk = 8192;

    const auto work = [&]() {
      std::map<std::string, IntMatrix> local;
      IntMatrix raw(r, width);
      while (true) {
        const long long begin = cursor.fetch_add(kChunk);
        if (begin >= total) break;
        const long long end = std::min(total, begin + kChunk);
        for (long long idx = begin; idx < end; ++idx) {
          long long rest = idx;
          bool all_zero = true;
          for (int p = 0; p < r * width; ++p) {
            const long digit = static_cast<long>(rest % base) - cfg.max_coeff;
            rest /= base;
            raw.e[static_cast<size_t>(p)] = digit;
            if (digit != 0) all_zero = false;
          }
          if (all_zero) continue;
          IntMatrix h = hnf(raw);
          if (h.rows != r) continue;  // dependent rows: lattice of lower codim
          IntMatrix canon = saturate_rows(h);
          std::string key = to_key(canon);
          local.emplace(std::move(key), std::move(canon));
        }
      }
      std::scoped_lock lock(merge_mutex);
      for (auto& [k, v] : local) unique.emplace(std::move(k), std::move(v));
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Phase 2: classify each unique lattice, in canonical order.
  std::vector<const IntMatrix*> lattices;
  lattices.reserve(unique.size());
  for (const auto& [k, m] : unique) lattices.push_back(&m);
  std::sort(lattices.begin(), lattices.end(),
            [](const IntMatrix* a, const IntMatrix* b) { return compare(*a, *b) < 0; });

  out.reports.resize(lattices.size());
  {
    const int workers = std::max(1, std::min<int>(cfg.jobs, std::thread::hardware_concurrency()));
    std::atomic<size_t> cursor{0};
    const auto work = [&]() {
      while (true) {
        const size_t i = cursor.fetch_add(1);
        if (i >= lattices.size()) break;
        const SubgroupSpec h{cfg.n, *lattices[i]};
        AnomalyReport rep = classify(h, cfg.mode == CoeffMode::Rational ? cfg.tau
                                                                        : TauAssignment{});
        if (rep.counterexample) {
          // Re-verify from fresh state before emitting the record.
          const AnomalyReport again = classify(SubgroupSpec{cfg.n, *lattices[i]},
                                               cfg.mode == CoeffMode::Rational
                                                   ? cfg.tau
                                                   : TauAssignment{});
          rep.counterexample = again.counterexample;
        }
        out.reports[i] = std::move(rep);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  out.unique_lattices = static_cast<long long>(out.reports.size());
  for (const AnomalyReport& r : out.reports) {
    if (r.anomalous) ++out.anomalous;
    if (r.counterexample) ++out.counterexamples;
  }
  return out;
}

}  // namespace cusp
