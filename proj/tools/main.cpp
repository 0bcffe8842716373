// cuspscan: detects and certifies anomalous subvarieties of A-polynomials of
// cusped hyperbolic 3-manifolds at desk scale, working in exact arithmetic on
// truncated potential series.
//
// Exit codes: 0 success, 2 input error, 3 internal invariant violation.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cuspscan/json_io.hpp"
#include "cuspscan/report.hpp"

namespace {

using namespace cusp;

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError(flag + ": expected a comma-separated integer list, got \"" + s + "\"");
    }
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& s, const std::string& flag) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(rat_from_string(item));
    } catch (const ParseError& e) {
      throw InputError(flag + ": " + e.what());
    }
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

CuspSupport parse_support(const std::string& s, const std::string& flag) {
  CuspSupport out;
  for (int v : parse_int_list(s, flag)) out.insert(v);
  return out;
}

struct CommonFlags {
  std::string input;
  std::string format = "json";
  std::string mode;
  std::vector<std::string> tau;
};

OutputFormat output_format(const CommonFlags& c) {
  if (c.format == "json") return OutputFormat::Json;
  if (c.format == "text") return OutputFormat::Text;
  throw InputError("--format: expected json or text");
}

/// Resolve the classification mode: explicit --mode wins, otherwise the
/// manifold's own mode. Returns the tau assignment (empty = symbolic).
TauAssignment resolve_tau(const PotentialSeries& phi, const CommonFlags& c) {
  std::vector<Rat> tau_flag;
  for (const std::string& t : c.tau)
    for (const Rat& q : parse_rat_list(t, "--tau")) tau_flag.push_back(q);

  std::string mode = c.mode;
  if (mode.empty())
    mode = phi.mode() == CoeffMode::Rational ? "rational" : "symbolic";
  if (mode == "symbolic") {
    if (!tau_flag.empty())
      throw InputError("--tau: only meaningful with --mode rational");
    return {};
  }
  if (mode != "rational") throw InputError("--mode: expected symbolic or rational");
  if (!tau_flag.empty()) {
    if (static_cast<int>(tau_flag.size()) != phi.cusps())
      throw InputError("--tau: expected one value per cusp");
    return tau_flag;
  }
  if (phi.mode() == CoeffMode::Rational) return phi.tau();
  throw InputError("--mode rational on a symbolic manifold requires --tau");
}

void add_common(CLI::App* cmd, CommonFlags& c, bool with_mode = true) {
  cmd->add_option("--input", c.input, "manifold file (potential series JSON)")->required();
  cmd->add_option("--format", c.format, "output format: json|text");
  if (with_mode) {
    cmd->add_option("--mode", c.mode, "classification mode: symbolic|rational");
    cmd->add_option("--tau", c.tau, "tau values for rational mode (comma list or repeated)");
  }
}

int cmd_check_subgroup(const CommonFlags& c, const std::string& subgroup_path) {
  const PotentialSeries phi = load_potential_file(c.input);
  const SubgroupSpec h = load_subgroup_file(subgroup_path);
  if (h.n != phi.cusps())
    throw InputError(subgroup_path + ": subgroup cusp count differs from the manifold");
  const TauAssignment tau = resolve_tau(phi, c);
  CheckFindings f;
  f.mode = tau.empty() ? CoeffMode::Symbolic : CoeffMode::Rational;
  f.report = classify(h, tau);
  std::cout << render_check_report(f, output_format(c));
  if (f.report.counterexample) {
    std::cerr << "cuspscan: anomalous subgroup located no complete cusp\n";
    return 3;
  }
  return 0;
}

int cmd_scan(const CommonFlags& c, const std::string& codim_arg, long max_coeff, int jobs) {
  const PotentialSeries phi = load_potential_file(c.input);
  ScanConfig cfg;
  cfg.n = phi.cusps();
  cfg.max_coeff = max_coeff;
  cfg.truncation = phi.truncation();
  cfg.jobs = jobs;
  const TauAssignment tau = resolve_tau(phi, c);
  cfg.mode = tau.empty() ? CoeffMode::Symbolic : CoeffMode::Rational;
  cfg.tau = tau;

  const auto dash = codim_arg.find('-');
  try {
    if (dash == std::string::npos) {
      cfg.codim_min = cfg.codim_max = std::stoi(codim_arg);
    } else {
      cfg.codim_min = std::stoi(codim_arg.substr(0, dash));
      cfg.codim_max = std::stoi(codim_arg.substr(dash + 1));
    }
  } catch (const std::exception&) {
    throw InputError("--codim: expected N or MIN-MAX");
  }

  const ScanOutcome outcome = run_scan(cfg);
  std::cout << render_scan_report(outcome, cfg, output_format(c));
  return 0;
}

int cmd_series_sgi(const CommonFlags& c) {
  const PotentialSeries phi = load_potential_file(c.input);
  std::cout << render_isolation_report(isolation_scan(phi), output_format(c));
  return 0;
}

int cmd_series_wgi(const CommonFlags& c, const std::string& a, const std::string& b,
                   const std::string& cc) {
  const PotentialSeries phi = load_potential_file(c.input);
  const CuspSupport sa = parse_support(a, "--A");
  const CuspSupport sb = parse_support(b, "--B");
  const CuspSupport sc = cc.empty() ? CuspSupport{} : parse_support(cc, "--C");
  IsolationFindings f;
  f.n = phi.cusps();
  f.truncation = phi.truncation();
  if (wgi_check(phi, sa, sb, sc)) f.wgi.push_back(IsolationFindings::Wgi{sa, sb, sc});
  std::cout << render_isolation_report(f, output_format(c));
  return 0;
}

int cmd_series_theta(const CommonFlags& c, const std::string& s0_arg,
                     const std::vector<std::string>& gen_args, int t_count) {
  const PotentialSeries phi = load_potential_file(c.input);
  const int n = phi.cusps();
  const auto to_form = [&](const std::string& s, const std::string& flag) {
    LinearForm f{parse_rat_list(s, flag)};
    if (static_cast<int>(f.coeff.size()) != 2 * n)
      throw InputError(flag + ": expected 2n = " + std::to_string(2 * n) +
                       " coefficients (a1,b1,...,an,bn)");
    return f;
  };
  ThetaFindings f;
  std::vector<LinearForm> gens;
  for (const std::string& g : gen_args) gens.push_back(to_form(g, "--gen"));
  if (t_count < 0 || t_count > static_cast<int>(gens.size()))
    throw InputError("--t-count: out of range");
  f.fit = theta_fit(phi, to_form(s0_arg, "--s0"), gens);
  f.t_count = t_count;
  if (f.fit.success) f.t_independent = theta_t_independence(f.fit, t_count);
  std::cout << render_theta_report(f, output_format(c));
  return 0;
}

int cmd_series_two_cusp(const CommonFlags& c, const std::string& rel) {
  const PotentialSeries phi = load_potential_file(c.input);
  const std::vector<int> r = parse_int_list(rel, "--rel");
  if (r.size() != 4) throw InputError("--rel: expected a,b,c,d");
  TwoCuspFindings f;
  f.a = r[0];
  f.b = r[1];
  f.c = r[2];
  f.d = r[3];
  f.truncation = phi.truncation();
  f.holds = two_cusp_relation_check(phi, f.a, f.b, f.c, f.d);
  std::cout << render_two_cusp_report(f, output_format(c));
  return 0;
}

int cmd_series_parity(const CommonFlags& c) {
  const PotentialSeries phi = load_potential_file(c.input);
  const LogBranch br = branch_from_potential(phi);
  ParityFindings f;
  f.branch_parity = branch_parity_ok(br);
  f.mixed_partials = mixed_partial_check(br);
  f.truncation = phi.truncation();
  std::cout << render_parity_report(f, output_format(c));
  return 0;
}

int cmd_deficient(const CommonFlags& c, const std::string& method) {
  if (method != "brute" && method != "constructive" && method != "both")
    throw InputError("--method: expected brute, constructive or both");
  const PairFamily fam = load_pair_family_file(c.input);
  DeficientFindings f;
  f.method = method;
  f.n = fam.n;
  if (fam.n == 1) {
    f.vacuous = true;
    std::cout << render_deficient_report(f, output_format(c));
    return 0;
  }
  const auto witness = independent_selection_witness(fam);
  f.hypothesis = !witness.has_value();
  if (witness) {
    f.witness = *witness;
    std::cout << render_deficient_report(f, output_format(c));
    return 0;
  }
  if (method == "brute" || method == "both") f.brute = deficient_subset_bruteforce(fam);
  if (method == "constructive" || method == "both")
    f.constructive = deficient_subset_constructive(fam);
  if (method == "both") {
    const auto valid = [&](const DeficientSubset& d) {
      QMatrix m(2 * static_cast<int>(d.indices.size()), fam.n);
      int row = 0;
      for (int i : d.indices) {
        for (int j = 0; j < fam.n; ++j) {
          m.at(row, j) = fam.v[i - 1][j];
          m.at(row + 1, j) = fam.w[i - 1][j];
        }
        row += 2;
      }
      return !d.indices.empty() && static_cast<int>(d.indices.size()) < fam.n &&
             q_rank(m) <= static_cast<int>(d.indices.size());
    };
    f.both_valid = valid(*f.brute) && valid(*f.constructive);
  }
  std::cout << render_deficient_report(f, output_format(c));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact anomalous-subvariety scanner for A-polynomials of cusped "
               "hyperbolic 3-manifolds"};
  app.require_subcommand(0, 1);
  std::function<int()> action;

  // check-subgroup
  {
    auto* cmd = app.add_subcommand("check-subgroup", "classify a single algebraic subgroup");
    auto flags = std::make_shared<CommonFlags>();
    auto subgroup_path = std::make_shared<std::string>();
    add_common(cmd, *flags);
    cmd->add_option("--subgroup", *subgroup_path, "subgroup relation file (JSON)")->required();
    cmd->callback([&action, flags, subgroup_path]() {
      action = [flags, subgroup_path]() { return cmd_check_subgroup(*flags, *subgroup_path); };
    });
  }
  // scan
  {
    auto* cmd = app.add_subcommand("scan", "enumerate and classify subgroups in a coefficient box");
    auto flags = std::make_shared<CommonFlags>();
    auto codim = std::make_shared<std::string>("1");
    auto max_coeff = std::make_shared<long>(1);
    auto jobs = std::make_shared<int>(1);
    add_common(cmd, *flags);
    cmd->add_option("--codim", *codim, "codimension N or range MIN-MAX (default 1)");
    cmd->add_option("--max-coeff", *max_coeff, "max absolute relation coefficient (default 1)");
    cmd->add_option("--jobs", *jobs, "worker threads (default 1; output is identical)");
    cmd->callback([&action, flags, codim, max_coeff, jobs]() {
      action = [flags, codim, max_coeff, jobs]() {
        return cmd_scan(*flags, *codim, *max_coeff, *jobs);
      };
    });
  }
  // series
  {
    auto* series = app.add_subcommand("series", "potential-series tests");
    series->require_subcommand(1);
    {
      auto* cmd = series->add_subcommand("sgi", "enumerate SGI splits and WGI triples");
      auto flags = std::make_shared<CommonFlags>();
      add_common(cmd, *flags, false);
      cmd->callback([&action, flags]() {
        action = [flags]() { return cmd_series_sgi(*flags); };
      });
    }
    {
      auto* cmd = series->add_subcommand("wgi", "check one WGI triple");
      auto flags = std::make_shared<CommonFlags>();
      auto a = std::make_shared<std::string>();
      auto b = std::make_shared<std::string>();
      auto c = std::make_shared<std::string>();
      add_common(cmd, *flags, false);
      cmd->add_option("--A", *a, "isolated cusps (comma list)")->required();
      cmd->add_option("--B", *b, "cusps isolated from (comma list)")->required();
      cmd->add_option("--C", *c, "cusps kept complete (comma list, may be empty)");
      cmd->callback([&action, flags, a, b, c]() {
        action = [flags, a, b, c]() { return cmd_series_wgi(*flags, *a, *b, *c); };
      });
    }
    {
      auto* cmd = series->add_subcommand("theta", "fit a target form against generator forms");
      auto flags = std::make_shared<CommonFlags>();
      auto s0 = std::make_shared<std::string>();
      auto gens = std::make_shared<std::vector<std::string>>();
      auto t_count = std::make_shared<int>(0);
      add_common(cmd, *flags, false);
      cmd->add_option("--s0", *s0, "target form: 2n comma-separated rationals")->required();
      cmd->add_option("--gen", *gens, "generator form (repeatable)")->required();
      cmd->add_option("--t-count", *t_count, "trailing generators to treat as t-forms");
      cmd->callback([&action, flags, s0, gens, t_count]() {
        action = [flags, s0, gens, t_count]() {
          return cmd_series_theta(*flags, *s0, *gens, *t_count);
        };
      });
    }
    {
      auto* cmd = series->add_subcommand("two-cusp", "check the paired two-cusp relation");
      auto flags = std::make_shared<CommonFlags>();
      auto rel = std::make_shared<std::string>();
      add_common(cmd, *flags, false);
      cmd->add_option("--rel", *rel, "relation coefficients a,b,c,d")->required();
      cmd->callback([&action, flags, rel]() {
        action = [flags, rel]() { return cmd_series_two_cusp(*flags, *rel); };
      });
    }
    {
      auto* cmd = series->add_subcommand("parity", "verify branch parity and integrability");
      auto flags = std::make_shared<CommonFlags>();
      add_common(cmd, *flags, false);
      cmd->callback([&action, flags]() {
        action = [flags]() { return cmd_series_parity(*flags); };
      });
    }
  }
  // deficient
  {
    auto* cmd = app.add_subcommand("deficient", "deficient-subset extraction for a pair family");
    auto flags = std::make_shared<CommonFlags>();
    auto method = std::make_shared<std::string>("both");
    add_common(cmd, *flags, false);
    cmd->add_option("--method", *method, "brute|constructive|both (default both)");
    cmd->callback([&action, flags, method]() {
      action = [flags, method]() { return cmd_deficient(*flags, *method); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!action) {
    std::cerr << app.help();
    return 2;
  }
  try {
    return action();
  } catch (const InternalError& e) {
    std::cerr << "cuspscan: internal invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    std::cerr << "cuspscan: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cuspscan: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cuspscan: unexpected error: " << e.what() << '\n';
    return 3;
  }
}
