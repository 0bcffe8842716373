#include "cuspscan/report.hpp"

#include <sstream>

#include "json_common.hpp"

namespace cusp {

namespace {

using detail::Json;

Json envelope(const char* command) {
  Json j;
  j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = command;
  return j;
}

Json support_to_json(const CuspSupport& s) {
  Json a = Json::array();
  for (int i : s) a.push_back(i);
  return a;
}

std::string support_str(const CuspSupport& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string rel_str(const IntMatrix& rel) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rel.rows; ++i) {
    if (i) os << ' ';
    os << '(';
    for (int c = 0; c < rel.cols; ++c) {
      if (c) os << ',';
      os << rel.at(i, c).get_str();
    }
    os << ')';
  }
  os << ']';
  return os.str();
}

void append_report_text(std::ostringstream& os, const AnomalyReport& r) {
  os << rel_str(r.subgroup.rel) << " codim=" << r.codim
     << " rank=" << r.jacobian_rank << " dim1=" << r.first_order_dim
     << (r.anomalous ? " ANOMALOUS" : " not-anomalous");
  if (r.b) os << " b=" << *r.b;
  if (!r.complete_cusps.empty()) {
    os << " complete_cusps=";
    for (size_t i = 0; i < r.complete_cusps.size(); ++i) {
      if (i) os << ',';
      os << r.complete_cusps[i];
    }
  }
  if (r.counterexample) os << " COUNTEREXAMPLE";
  os << '\n';
}

const char* mode_name(CoeffMode m) {
  return m == CoeffMode::Symbolic ? "symbolic" : "rational";
}

Json theta_fit_to_json(const ThetaFit& fit) {
  Json j;
  j["success"] = fit.success;
  if (!fit.success) j["fail_degree"] = fit.fail_degree;
  j["gen_count"] = fit.gen_count;
  j["order"] = fit.order;
  Json samples = Json::array();
  for (const ThetaSample& s : fit.samples) {
    Json js;
    Json tau = Json::array();
    for (const Rat& t : s.tau) tau.push_back(rat_to_string(t));
    js["tau"] = std::move(tau);
    Json coeffs = Json::array();
    for (const auto& [alpha, c] : s.coeffs) {
      Json jc;
      jc["alpha"] = alpha;
      jc["q"] = rat_to_string(c);
      coeffs.push_back(std::move(jc));
    }
    js["coeffs"] = std::move(coeffs);
    samples.push_back(std::move(js));
  }
  j["samples"] = std::move(samples);
  return j;
}

}  // namespace

std::string render_check_report(const CheckFindings& f, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json j = envelope("check-subgroup");
    j["config"] = Json{{"n", f.report.subgroup.n}, {"mode", mode_name(f.mode)}};
    j["subgroups"] = Json::array({detail::anomaly_report_to_json(f.report)});
    j["summary"] = Json{{"total", 1},
                        {"anomalous", f.report.anomalous ? 1 : 0},
                        {"counterexamples", f.report.counterexample ? 1 : 0}};
    return detail::dump_document(j);
  }
  std::ostringstream os;
  os << "check-subgroup n=" << f.report.subgroup.n << " mode=" << mode_name(f.mode) << '\n';
  append_report_text(os, f.report);
  return os.str();
}

std::string render_scan_report(const ScanOutcome& o, const ScanConfig& cfg, OutputFormat fmt) {
  // cfg.jobs is deliberately not echoed: reports must not depend on it.
  if (fmt == OutputFormat::Json) {
    Json j = envelope("scan");
    Json config{{"n", cfg.n},
                {"codim_min", cfg.codim_min},
                {"codim_max", cfg.codim_max},
                {"max_coeff", cfg.max_coeff},
                {"mode", mode_name(cfg.mode)},
                {"truncation", cfg.truncation}};
    if (cfg.mode == CoeffMode::Rational) {
      Json tau = Json::array();
      for (const Rat& t : cfg.tau) tau.push_back(rat_to_string(t));
      config["tau"] = std::move(tau);
    }
    j["config"] = std::move(config);
    Json subgroups = Json::array();
    for (const AnomalyReport& r : o.reports)
      subgroups.push_back(detail::anomaly_report_to_json(r));
    j["subgroups"] = std::move(subgroups);

    Json by_cusp = Json::object();
    for (int cusp = 1; cusp <= cfg.n; ++cusp) {
      long long count = 0;
      for (const AnomalyReport& r : o.reports) {
        if (!r.anomalous) continue;
        for (int i : r.complete_cusps)
          if (i == cusp) ++count;
      }
      if (count) by_cusp[std::to_string(cusp)] = count;
    }
    j["summary"] = Json{{"raw_enumerated", o.raw_enumerated},
                        {"unique_lattices", o.unique_lattices},
                        {"anomalous", o.anomalous},
                        {"counterexamples", o.counterexamples},
                        {"anomalous_by_complete_cusp", std::move(by_cusp)}};
    return detail::dump_document(j);
  }
  std::ostringstream os;
  os << "scan n=" << cfg.n << " codim=" << cfg.codim_min << ".." << cfg.codim_max
     << " max_coeff=" << cfg.max_coeff << " mode=" << mode_name(cfg.mode) << '\n';
  for (const AnomalyReport& r : o.reports)
    if (r.anomalous) append_report_text(os, r);
  os << "raw=" << o.raw_enumerated << " unique=" << o.unique_lattices
     << " anomalous=" << o.anomalous << " counterexamples=" << o.counterexamples << '\n';
  return os.str();
}

IsolationFindings isolation_scan(const PotentialSeries& phi) {
  const int n = phi.cusps();
  if (n > 5) throw InputError("isolation scan: partition enumeration capped at n <= 5");
  IsolationFindings f;
  f.n = n;
  f.truncation = phi.truncation();
  if (n < 2) return f;
  // All proper nonempty subsets for SGI.
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    CuspSupport a;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) a.insert(i + 1);
    if (sgi_check(phi, a)) f.sgi.push_back(std::move(a));
  }
  // All ordered partitions into (A, B, C) with A, B nonempty.
  std::vector<int> part(n, 0);
  while (true) {
    CuspSupport a, b, c;
    for (int i = 0; i < n; ++i) {
      if (part[i] == 0)
        a.insert(i + 1);
      else if (part[i] == 1)
        b.insert(i + 1);
      else
        c.insert(i + 1);
    }
    if (!a.empty() && !b.empty() && wgi_check(phi, a, b, c))
      f.wgi.push_back(IsolationFindings::Wgi{a, b, c});
    int p = n - 1;
    while (p >= 0 && part[p] == 2) --p;
    if (p < 0) break;
    ++part[p];
    for (int i = p + 1; i < n; ++i) part[i] = 0;
  }
  return f;
}

std::string render_isolation_report(const IsolationFindings& f, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json j = envelope("series-sgi");
    j["config"] = Json{{"n", f.n}, {"truncation", f.truncation}};
    Json sgi = Json::array();
    for (const CuspSupport& a : f.sgi) sgi.push_back(support_to_json(a));
    j["sgi"] = std::move(sgi);
    Json wgi = Json::array();
    for (const auto& t : f.wgi)
      wgi.push_back(Json{{"A", support_to_json(t.a)},
                         {"B", support_to_json(t.b)},
                         {"C", support_to_json(t.c)}});
    j["wgi"] = std::move(wgi);
    return detail::dump_document(j);
  }
  std::ostringstream os;
  os << "isolation n=" << f.n << " (claims through degree " << f.truncation - 1 << ")\n";
  if (f.sgi.empty()) {
    os << "no SGI split\n";
  } else {
    for (const CuspSupport& a : f.sgi) os << "SGI: A=" << support_str(a) << '\n';
  }
  for (const auto& t : f.wgi)
    os << "WGI: A=" << support_str(t.a) << " from B=" << support_str(t.b)
       << " keeping C=" << support_str(t.c) << '\n';
  return os.str();
}

std::string render_theta_report(const ThetaFindings& f, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json j = envelope("series-theta");
    j["fit"] = theta_fit_to_json(f.fit);
    j["t_count"] = f.t_count;
    if (f.fit.success) j["t_independent"] = f.t_independent;
    return detail::dump_document(j);
  }
  std::ostringstream os;
  os << "theta fit " << (f.fit.success ? "success" : "FAILURE") << " order=" << f.fit.order;
  if (!f.fit.success) os << " fail_degree=" << f.fit.fail_degree;
  if (f.fit.success && f.t_count > 0)
    os << " t_independent=" << (f.t_independent ? "yes" : "NO");
  os << '\n';
  if (f.fit.success) {
    const ThetaSample& s = f.fit.primary();
    if (!s.tau.empty()) {
      os << "tau sample:";
      for (const Rat& t : s.tau) os << ' ' << rat_to_string(t);
      os << '\n';
    }
    for (const auto& [alpha, c] : s.coeffs) {
      os << "  theta[";
      for (size_t i = 0; i < alpha.size(); ++i) {
        if (i) os << ',';
        os << alpha[i];
      }
      os << "] = " << rat_to_string(c) << '\n';
    }
  }
  return os.str();
}

std::string render_two_cusp_report(const TwoCuspFindings& f, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json j = envelope("series-two-cusp");
    j["relation"] = Json{{"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.d}};
    j["truncation"] = f.truncation;
    j["holds"] = f.holds;
    return detail::dump_document(j);
  }
  std::ostringstream os;
  os << "two-cusp relation (a,b,c,d)=(" << f.a << ',' << f.b << ',' << f.c << ',' << f.d
     << ") " << (f.holds ? "holds" : "fails") << " through degree " << f.truncation - 1
     << '\n';
  return os.str();
}

std::string render_parity_report(const ParityFindings& f, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json j = envelope("series-parity");
    j["truncation"] = f.truncation;
    j["branch_parity"] = f.branch_parity;
    j["mixed_partials"] = f.mixed_partials;
    return detail::dump_document(j);
  }
  std::ostringstream os;
  os << "parity: branch=" << (f.branch_parity ? "ok" : "VIOLATION")
     << " mixed_partials=" << (f.mixed_partials ? "ok" : "VIOLATION")
     << " (through degree " << f.truncation - 1 << ")\n";
  return os.str();
}

std::string render_deficient_report(const DeficientFindings& f, OutputFormat fmt) {
  const auto subset_json = [](const DeficientSubset& d) {
    return Json{{"indices", d.indices}, {"achieved_rank", d.achieved_rank}};
  };
  if (fmt == OutputFormat::Json) {
    Json j = envelope("deficient");
    j["config"] = Json{{"n", f.n}, {"method", f.method}};
    if (f.vacuous) {
      j["vacuous"] = true;
      return detail::dump_document(j);
    }
    j["hypothesis"] = f.hypothesis;
    if (f.witness) j["witness_selection"] = *f.witness;
    if (f.brute) j["brute"] = subset_json(*f.brute);
    if (f.constructive) j["constructive"] = subset_json(*f.constructive);
    if (f.both_valid) j["both_valid"] = *f.both_valid;
    return detail::dump_document(j);
  }
  std::ostringstream os;
  os << "deficient n=" << f.n << " method=" << f.method << '\n';
  if (f.vacuous) {
    os << "n=1: no proper nonempty subset exists; hypothesis is vacuous\n";
    return os.str();
  }
  os << "hypothesis " << (f.hypothesis ? "holds" : "FAILS") << '\n';
  if (f.witness) {
    os << "independent selection witness:";
    for (size_t i = 0; i < f.witness->size(); ++i)
      os << ' ' << ((*f.witness)[i] ? 'w' : 'v') << (i + 1);
    os << '\n';
  }
  const auto line = [&](const char* name, const DeficientSubset& d) {
    os << name << ": S={";
    for (size_t i = 0; i < d.indices.size(); ++i) {
      if (i) os << ',';
      os << d.indices[i];
    }
    os << "} rank=" << d.achieved_rank << '\n';
  };
  if (f.brute) line("brute", *f.brute);
  if (f.constructive) line("constructive", *f.constructive);
  if (f.both_valid) os << "validity match: " << (*f.both_valid ? "yes" : "NO") << '\n';
  return os.str();
}

}  // namespace cusp
