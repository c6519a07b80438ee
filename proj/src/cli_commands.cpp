#include "hessring/cli_commands.hpp"

#include <json.hpp>

#include "hessring/errors.hpp"
#include "hessring/gkm.hpp"
#include "hessring/presentation.hpp"
#include "hessring/report.hpp"
#include "hessring/suites.hpp"
#include "hessring/symfunc.hpp"

namespace hessring {

namespace {

// n from --n or from --h; both given must agree.
int resolve_n(const CliConfig& cfg) {
  if (cfg.h) {
    if (cfg.n && *cfg.n != cfg.h->size())
      throw std::invalid_argument("--n disagrees with the length of --h");
    return cfg.h->size();
  }
  if (!cfg.n) throw std::invalid_argument("one of --n or --h is required");
  return *cfg.n;
}

bool known_format(const std::string& f) { return f == "text" || f == "json" || f == "csv"; }

std::vector<HessFn> table_rows(const CliConfig& cfg, int n) {
  if (cfg.h) return {*cfg.h};
  return enumerate_hn(n);
}

nlohmann::ordered_json unipoly_coeffs_json(const UniPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) {
    if (!is_integer(c)) throw consistency_error("expected integer coefficients");
    arr.push_back(c.get_num().get_si());
  }
  return arr;
}

std::string unipoly_coeffs_flat(const UniPoly& p) {
  std::string s;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += " ";
    s += p.coeffs()[i].get_str();
  }
  return s.empty() ? "0" : s;
}

nlohmann::ordered_json schur_records_json(const SymFn& f) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& [lambda, coeff] : f.coords) {
    nlohmann::ordered_json rec;
    rec["lambda"] = lambda.parts;
    rec["coeff"] = unipoly_coeffs_json(coeff);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  if (!known_format(cfg.format)) return 2;
  bool known_suite = cfg.suite == "all";
  for (const auto& s : suite_names()) known_suite = known_suite || cfg.suite == s;
  if (!known_suite) return 2;
  int n;
  try {
    n = resolve_n(cfg);
  } catch (const std::invalid_argument&) {
    return 2;
  }
  SuiteOptions opt;
  opt.n = n;
  opt.h = cfg.h;
  opt.jobs = cfg.jobs;
  opt.max_degree = cfg.max_degree;
  Report report = run_suite(cfg.suite, opt);
  if (cfg.format == "json")
    out << report_to_json(report);
  else if (cfg.format == "csv")
    out << report_to_csv(report);
  else
    out << report_to_text(report);
  return report.all_pass() ? 0 : 1;
}

int cmd_table(const CliConfig& cfg, const std::string& kind, std::ostream& out) {
  if (!known_format(cfg.format)) return 2;
  int n;
  try {
    n = resolve_n(cfg);
  } catch (const std::invalid_argument&) {
    return 2;
  }

  // Rows are (key, columns) pairs; rendering is shared across formats.
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> rows;

  if (kind == "hilbert") {
    for (const auto& h : table_rows(cfg, n)) {
      UniPoly series = hilbert_closed_form(h);
      rows.push_back({h.to_string(),
                      {{"series", series.to_string("s")},
                       {"coeffs", unipoly_coeffs_flat(series)}}});
    }
  } else if (kind == "betti") {
    for (const auto& h : table_rows(cfg, n)) {
      UniPoly poincare = poincare_polynomial(h);
      rows.push_back({h.to_string(),
                      {{"poincare", poincare.to_string("q")},
                       {"coeffs", unipoly_coeffs_flat(poincare)}}});
    }
  } else if (kind == "fixed-points") {
    for (const auto& h : table_rows(cfg, n)) {
      std::string words;
      for (const auto& w : fixed_points(h)) {
        if (!words.empty()) words += " ";
        words += w.to_string();
      }
      rows.push_back({h.to_string(), {{"fixed_points", words}}});
    }
  } else if (kind == "generators") {
    Presentation pres(n);
    for (const auto& h : table_rows(cfg, n)) {
      std::vector<std::pair<std::string, std::string>> cols;
      for (int j = 1; j <= n; ++j) {
        std::string name =
            "f_{" + std::to_string(h.value_at(j)) + "," + std::to_string(j) + "}";
        cols.push_back({name, pres.f(h.value_at(j), j).to_string(names_xt(n))});
      }
      rows.push_back({h.to_string(), std::move(cols)});
    }
  } else if (kind == "schur") {
    for (const auto& h : table_rows(cfg, n)) {
      SymFn w = omega(expand_in_schur(chromatic_qsym(incomparability_graph(h), n)));
      std::vector<std::pair<std::string, std::string>> cols;
      for (const auto& [lambda, coeff] : w.coords)
        cols.push_back({lambda.to_string(), unipoly_coeffs_flat(coeff)});
      rows.push_back({h.to_string(), std::move(cols)});
    }
  } else {
    return 2;
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["n"] = n;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& [key, cols] : rows) {
      nlohmann::ordered_json row;
      row["h"] = key;
      for (const auto& [name, value] : cols) row[name] = value;
      j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "h,column,value\r\n";
    for (const auto& [key, cols] : rows)
      for (const auto& [name, value] : cols)
        out << csv_quote(key) << ',' << csv_quote(name) << ',' << csv_quote(value) << "\r\n";
  } else {
    for (const auto& [key, cols] : rows) {
      out << "h=" << key << "\n";
      for (const auto& [name, value] : cols) out << "  " << name << ": " << value << "\n";
    }
  }
  return 0;
}

int cmd_xg(const CliConfig& cfg, std::ostream& out) {
  if (!known_format(cfg.format)) return 2;
  int n;
  try {
    n = resolve_n(cfg);
  } catch (const std::invalid_argument&) {
    return 2;
  }
  check_guard(n <= 6, "xg: n > 6");
  std::vector<HessFn> hs = table_rows(cfg, n);

  nlohmann::ordered_json payload = nlohmann::ordered_json::array();
  for (const auto& h : hs) {
    SymFn x = chromatic_qsym(incomparability_graph(h), n);
    SymFn schur = expand_in_schur(x);
    SymFn post_omega = omega(schur);
    Partition ones{std::vector<int>(n, 1)};
    UniPoly s1n = schur.coeff(ones);
    UniPoly product = sw_trivial_coeff(h);
    nlohmann::ordered_json entry;
    entry["h"] = h.to_string();
    entry["records"] = schur_records_json(post_omega);
    entry["s1n_coeff"] = unipoly_coeffs_json(s1n);
    entry["product_formula"] = unipoly_coeffs_json(product);
    entry["trivial_coefficient_matches"] = (s1n == product);
    payload.push_back(std::move(entry));
  }

  if (cfg.format == "json" || cfg.format == "text") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = n;
    j["expansions"] = std::move(payload);
    out << j.dump(2) << "\n";
  } else {
    out << "h,lambda,coeff\r\n";
    for (const auto& entry : payload) {
      for (const auto& rec : entry["records"]) {
        std::string lambda;
        for (const auto& p : rec["lambda"]) {
          if (!lambda.empty()) lambda += ",";
          lambda += std::to_string(p.get<int>());
        }
        std::string coeff;
        for (const auto& c : rec["coeff"]) {
          if (!coeff.empty()) coeff += " ";
          coeff += std::to_string(c.get<long long>());
        }
        out << csv_quote(entry["h"].get<std::string>()) << ',' << csv_quote("[" + lambda + "]")
            << ',' << csv_quote(coeff) << "\r\n";
      }
    }
  }
  return 0;
}

int cmd_gkm_export(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.h) return 2;
  const HessFn& h = *cfg.h;
  GkmGraph graph(h);
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["h"] = h.to_string();
  j["n"] = h.size();
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& w : graph.vertices()) j["vertices"].push_back(w.to_string());
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges()) {
    nlohmann::ordered_json edge;
    edge["from"] = graph.vertices()[e.from].to_string();
    edge["to"] = graph.vertices()[e.to].to_string();
    edge["label"] = e.label.to_string(names_t(h.size()));
    j["edges"].push_back(std::move(edge));
  }
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace hessring
