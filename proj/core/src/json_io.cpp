#include "cuspscan/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json_common.hpp"

namespace cusp {

namespace detail {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void require_keys(const Json& j, const std::string& where,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
  if (!j.is_object()) fail(where, "expected a JSON object");
  for (const auto& k : required)
    if (!j.contains(k)) fail(where, "missing key \"" + k + "\"");
  for (const auto& [k, v] : j.items()) {
    if (std::find(required.begin(), required.end(), k) != required.end()) continue;
    if (std::find(optional.begin(), optional.end(), k) != optional.end()) continue;
    fail(where, "unknown key \"" + k + "\"");
  }
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

Rat get_rat(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a rational as a \"p/q\" string");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

}  // namespace

Json parse_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

SubgroupSpec subgroup_from_json(const Json& j, const std::string& where) {
  require_keys(j, where, {"n", "rows"});
  const int n = get_int(j.at("n"), where + ".n");
  if (n < 1) fail(where + ".n", "cusp count must be positive");
  const Json& rows = j.at("rows");
  if (!rows.is_array()) fail(where + ".rows", "expected an array of rows");
  IntMatrix raw(static_cast<int>(rows.size()), 2 * n);
  for (size_t i = 0; i < rows.size(); ++i) {
    const std::string rw = where + ".rows[" + std::to_string(i) + "]";
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != 2 * n)
      fail(rw, "expected " + std::to_string(2 * n) + " integer entries");
    for (int c = 0; c < 2 * n; ++c)
      raw.at(static_cast<int>(i), c) = get_int(row[c], rw);
  }
  try {
    return normalize(raw, n);
  } catch (const EmptyRelation& e) {
    fail(where, e.what());
  }
}

Json subgroup_to_json(const SubgroupSpec& h) {
  Json rows = Json::array();
  for (int i = 0; i < h.rel.rows; ++i) {
    Json row = Json::array();
    for (int c = 0; c < h.rel.cols; ++c) {
      if (!h.rel.at(i, c).fits_slong_p())
        throw InternalError("subgroup_to_json: entry exceeds the integer range");
      row.push_back(h.rel.at(i, c).get_si());
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", h.n}, {"rows", std::move(rows)}};
}

PotentialSeries potential_from_json(const Json& j, const std::string& where) {
  require_keys(j, where, {"n", "D", "mode", "terms"}, {"tau"});
  const int n = get_int(j.at("n"), where + ".n");
  const int d = get_int(j.at("D"), where + ".D");
  if (!j.at("mode").is_string()) fail(where + ".mode", "expected \"symbolic\" or \"rational\"");
  const std::string mode_s = j.at("mode").get<std::string>();
  CoeffMode mode;
  if (mode_s == "symbolic")
    mode = CoeffMode::Symbolic;
  else if (mode_s == "rational")
    mode = CoeffMode::Rational;
  else
    fail(where + ".mode", "expected \"symbolic\" or \"rational\"");

  std::vector<Rat> tau;
  if (mode == CoeffMode::Rational) {
    if (!j.contains("tau")) fail(where, "rational mode requires \"tau\"");
    const Json& jt = j.at("tau");
    if (!jt.is_array() || static_cast<int>(jt.size()) != n)
      fail(where + ".tau", "expected n rational values");
    for (size_t i = 0; i < jt.size(); ++i)
      tau.push_back(get_rat(jt[i], where + ".tau[" + std::to_string(i) + "]"));
  } else if (j.contains("tau")) {
    fail(where + ".tau", "tau values are for rational mode only");
  }

  if (n < 1 || n > TauScalar::kMaxCusps) fail(where + ".n", "cusp count out of range");
  if (d < 2) fail(where + ".D", "truncation degree must be >= 2");
  Series<TauScalar> terms(n, d);
  const Json& jterms = j.at("terms");
  if (!jterms.is_array()) fail(where + ".terms", "expected an array of terms");
  for (size_t t = 0; t < jterms.size(); ++t) {
    const std::string tw = where + ".terms[" + std::to_string(t) + "]";
    const Json& jt = jterms[t];
    require_keys(jt, tw, {"u", "coeff"});
    const Json& ju = jt.at("u");
    if (!ju.is_array() || static_cast<int>(ju.size()) != n)
      fail(tw + ".u", "expected n exponents");
    Mono m(n);
    for (int i = 0; i < n; ++i) {
      m[i] = get_int(ju[i], tw + ".u");
      if (m[i] < 0) fail(tw + ".u", "negative exponent");
    }
    const Json& jc = jt.at("coeff");
    TauScalar coeff(n);
    if (mode == CoeffMode::Rational) {
      coeff = TauScalar::constant(n, get_rat(jc, tw + ".coeff"));
    } else {
      if (!jc.is_array()) fail(tw + ".coeff", "expected an array of tau terms");
      for (size_t p = 0; p < jc.size(); ++p) {
        const std::string pw = tw + ".coeff[" + std::to_string(p) + "]";
        require_keys(jc[p], pw, {"tau_set", "q"});
        const Json& js = jc[p].at("tau_set");
        if (!js.is_array()) fail(pw + ".tau_set", "expected an array of cusp indices");
        std::vector<int> idx;
        for (const Json& v : js) {
          const int i = get_int(v, pw + ".tau_set");
          if (i < 1 || i > n) fail(pw + ".tau_set", "cusp index out of range");
          idx.push_back(i);
        }
        try {
          coeff += TauScalar::monomial(n, idx, get_rat(jc[p].at("q"), pw + ".q"));
        } catch (const SquarefreeViolation&) {
          fail(pw + ".tau_set", "repeated cusp index");
        }
      }
    }
    if (terms.has(m)) fail(tw, "duplicate exponent vector");
    if (total_degree(m) > d) fail(tw + ".u", "total degree exceeds D");
    terms.add_term(m, coeff);
  }
  try {
    return PotentialSeries(n, d, mode, std::move(tau), std::move(terms));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json potential_to_json(const PotentialSeries& phi) {
  Json out;
  out["n"] = phi.cusps();
  out["D"] = phi.truncation();
  out["mode"] = phi.mode() == CoeffMode::Symbolic ? "symbolic" : "rational";
  if (phi.mode() == CoeffMode::Rational) {
    Json tau = Json::array();
    for (const Rat& t : phi.tau()) tau.push_back(rat_to_string(t));
    out["tau"] = std::move(tau);
  }
  Json terms = Json::array();
  for (const auto& [m, c] : phi.terms().terms()) {
    Json jt;
    jt["u"] = m;
    if (phi.mode() == CoeffMode::Rational) {
      jt["coeff"] = rat_to_string(c.constant_value());
    } else {
      Json parts = Json::array();
      for (const auto& [mask, q] : c.terms()) {
        Json part;
        Json set = Json::array();
        for (int i = 0; i < phi.cusps(); ++i)
          if (mask & (uint64_t{1} << i)) set.push_back(i + 1);
        part["tau_set"] = std::move(set);
        part["q"] = rat_to_string(q);
        parts.push_back(std::move(part));
      }
      jt["coeff"] = std::move(parts);
    }
    terms.push_back(std::move(jt));
  }
  out["terms"] = std::move(terms);
  return out;
}

PairFamily pair_family_from_json(const Json& j, const std::string& where) {
  require_keys(j, where, {"n", "pairs"});
  PairFamily f;
  f.n = get_int(j.at("n"), where + ".n");
  if (f.n < 1) fail(where + ".n", "n must be positive");
  const Json& pairs = j.at("pairs");
  if (!pairs.is_array() || static_cast<int>(pairs.size()) != f.n)
    fail(where + ".pairs", "expected n pairs");
  const auto read_vec = [&](const Json& jv, const std::string& vw) {
    if (!jv.is_array() || static_cast<int>(jv.size()) != f.n)
      fail(vw, "expected a vector of n rationals");
    std::vector<Rat> v;
    for (size_t i = 0; i < jv.size(); ++i)
      v.push_back(get_rat(jv[i], vw + "[" + std::to_string(i) + "]"));
    return v;
  };
  for (size_t i = 0; i < pairs.size(); ++i) {
    const std::string pw = where + ".pairs[" + std::to_string(i) + "]";
    require_keys(pairs[i], pw, {"v", "w"});
    f.v.push_back(read_vec(pairs[i].at("v"), pw + ".v"));
    f.w.push_back(read_vec(pairs[i].at("w"), pw + ".w"));
  }
  return f;
}

Json pair_family_to_json(const PairFamily& f) {
  Json pairs = Json::array();
  for (int i = 0; i < f.n; ++i) {
    Json p;
    Json v = Json::array(), w = Json::array();
    for (const Rat& x : f.v[i]) v.push_back(rat_to_string(x));
    for (const Rat& x : f.w[i]) w.push_back(rat_to_string(x));
    p["v"] = std::move(v);
    p["w"] = std::move(w);
    pairs.push_back(std::move(p));
  }
  return Json{{"n", f.n}, {"pairs", std::move(pairs)}};
}

Json anomaly_report_to_json(const AnomalyReport& r) {
  Json out;
  out["subgroup"] = subgroup_to_json(r.subgroup);
  out["codim"] = r.codim;
  out["jacobian_rank"] = r.jacobian_rank;
  out["first_order_dim"] = r.first_order_dim;
  out["anomalous"] = r.anomalous;
  if (r.b) out["b"] = *r.b;
  out["complete_cusps"] = r.complete_cusps;
  if (r.counterexample) out["counterexample"] = true;
  return out;
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

SubgroupSpec parse_subgroup(const std::string& text, const std::string& where) {
  return detail::subgroup_from_json(detail::parse_text(text, where), where);
}

SubgroupSpec load_subgroup_file(const std::string& path) {
  return detail::subgroup_from_json(detail::load_file(path), path);
}

std::string subgroup_to_json_text(const SubgroupSpec& h) {
  return detail::dump_document(detail::subgroup_to_json(h));
}

PotentialSeries parse_potential(const std::string& text, const std::string& where) {
  return detail::potential_from_json(detail::parse_text(text, where), where);
}

PotentialSeries load_potential_file(const std::string& path) {
  return detail::potential_from_json(detail::load_file(path), path);
}

std::string potential_to_json_text(const PotentialSeries& phi) {
  return detail::dump_document(detail::potential_to_json(phi));
}

PairFamily parse_pair_family(const std::string& text, const std::string& where) {
  return detail::pair_family_from_json(detail::parse_text(text, where), where);
}

PairFamily load_pair_family_file(const std::string& path) {
  return detail::pair_family_from_json(detail::load_file(path), path);
}

std::string pair_family_to_json_text(const PairFamily& f) {
  return detail::dump_document(detail::pair_family_to_json(f));
}

std::string anomaly_report_to_json_text(const AnomalyReport& r) {
  return detail::dump_document(detail::anomaly_report_to_json(r));
}

}  // namespace cusp
