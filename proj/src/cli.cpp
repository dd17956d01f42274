// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "apbound/apcount.hpp"
#include "apbound/certify.hpp"
#include "apbound/config.hpp"
#include "apbound/errors.hpp"
#include "apbound/lpbound.hpp"
#include "apbound/modgroup.hpp"
#include "apbound/necklace.hpp"

namespace apbound {

void RunConfig::validate() const {
  if (enumeration_cap < 1 || enumeration_cap > 32)
    throw std::invalid_argument("config: enumeration cap must be in 1..32");
  if (thread_count < 1) throw std::invalid_argument("config: thread count must be >= 1");
}

RunConfig load_default_config() {
  RunConfig cfg;
  cfg.thread_count = std::max(1u, std::thread::hardware_concurrency());
  const char* path = std::getenv("APBOUND_CONFIG");
  if (path == nullptr || *path == '\0') return cfg;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("config: cannot read ") + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.contains("cap")) cfg.enumeration_cap = j["cap"].get<int>();
  if (j.contains("threads")) cfg.thread_count = j["threads"].get<int>();
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("format")) {
    const std::string f = j["format"].get<std::string>();
    if (f == "text")
      cfg.format = OutputFormat::text;
    else if (f == "csv")
      cfg.format = OutputFormat::csv;
    else if (f == "json")
      cfg.format = OutputFormat::json;
    else
      throw std::invalid_argument("config: unknown format " + f);
  }
  cfg.validate();
  return cfg;
}

namespace {

using nlohmann::json;

json omega_json(const OmegaVector& w) {
  json a111 = json::array();
  for (const QuadExt& c : w.a111) a111.push_back(c.str());
  return json{{"a0", w.a0.str()}, {"a3", w.a3.str()}, {"a21", w.a21.str()}, {"a111", a111}};
}

json report_json(const CertificateReport& r) {
  json terms = json::object();
  for (const auto& [D, lines] : r.term_lines) {
    json arr = json::array();
    for (const SigmaLine& line : lines) {
      json o{{"name", line.name}, {"omega", omega_json(line.omega)}};
      if (line.reference_line) o["reference_line"] = omega_json(*line.reference_line);
      if (line.matches_reference) o["matches_reference"] = *line.matches_reference;
      arr.push_back(std::move(o));
    }
    terms[std::to_string(D)] = std::move(arr);
  }
  json j{{"p", r.p},
         {"theorem", r.theorem == TheoremTag::general ? "general" : "small-prime"},
         {"verified", r.verified},
         {"checked_D", r.checked_D},
         {"bound_formula", r.bound_formula},
         {"convention", r.convention},
         {"residual", omega_json(r.residual)},
         {"term_lines", terms}};
  if (!r.residual_note.empty()) j["residual_note"] = r.residual_note;
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

void print_report_text(const CertificateReport& r, std::ostream& os) {
  os << "p = " << r.p << "  theorem = "
     << (r.theorem == TheoremTag::general ? "general" : "small-prime") << "\n";
  os << "status: " << (r.verified ? "verified" : "NOT verified") << "\n";
  os << "bound: " << r.bound_formula << "\n";
  if (!r.convention.empty()) os << "convention: " << r.convention << "\n";
  os << "checked D:";
  for (int d : r.checked_D) os << " " << d;
  os << "\n";
  if (!r.verified) {
    os << "residual: " << r.residual.str() << "\n";
    if (!r.residual_note.empty()) os << "residual note: " << r.residual_note << "\n";
    for (const std::string& d : r.diagnostics) os << "  " << d << "\n";
  }
  for (const auto& [D, lines] : r.term_lines) {
    os << "omega lines at D = " << D << ":\n";
    for (const SigmaLine& line : lines) {
      os << "  " << line.name << " = " << line.omega.str();
      if (line.matches_reference)
        os << (*line.matches_reference ? "  [= reference]" : "  [!= reference]");
      os << "\n";
    }
  }
}

struct OutputSink {
  std::ostream& fallback;
  std::string path;
  std::ofstream file;
  std::ostream& get() {
    if (path.empty()) return fallback;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output file " + path);
    }
    return file;
  }
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg = load_default_config();

  CLI::App app{"exact necklace enumeration, arithmetic-progression counts, "
               "sum-of-squares certificates and LP lower bounds over Z_n"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name, output_path;
  int threads = 0, cap = 0;
  app.add_option("--cap", cap, "enumeration cap on n (max 32)");
  app.add_option("--threads", threads, "worker threads for enumeration");
  app.add_option("--format", format_name, "text|csv|json");
  app.add_option("--output", output_path, "write results to a file instead of stdout");

  auto* cmd_neck = app.add_subcommand("necklaces", "list fixed-density necklaces");
  cmd_neck->fallthrough();
  int nk_n = 0, nk_ones = 0;
  std::string nk_order = "coollex";
  cmd_neck->add_option("--n", nk_n, "length")->required();
  cmd_neck->add_option("--ones", nk_ones, "popcount")->required();
  cmd_neck->add_option("--order", nk_order, "colex|coollex");

  auto* cmd_table = app.add_subcommand("table", "W(k, Z_n, D/n) table");
  cmd_table->fallthrough();
  int tb_k = 3, tb_nmin = 5, tb_nmax = 0;
  cmd_table->add_option("--k", tb_k, "progression length");
  cmd_table->add_option("--n-min", tb_nmin)->required();
  cmd_table->add_option("--n-max", tb_nmax)->required();

  auto* cmd_dist = app.add_subcommand("dist", "histogram of AP counts over necklaces");
  cmd_dist->fallthrough();
  int ds_n = 0, ds_k = 3, ds_ones = 0;
  cmd_dist->add_option("--n", ds_n)->required();
  cmd_dist->add_option("--k", ds_k);
  cmd_dist->add_option("--ones", ds_ones)->required();

  auto* cmd_lambda = app.add_subcommand("lambda", "closed-form certified lower bound");
  cmd_lambda->fallthrough();
  int lm_p = 0;
  long lm_D = 0;
  std::string lm_theorem = "general";
  cmd_lambda->add_option("--p", lm_p)->required();
  cmd_lambda->add_option("--D", lm_D)->required();
  cmd_lambda->add_option("--theorem", lm_theorem, "general|small");

  auto* cmd_cert = app.add_subcommand("certify", "verify an algebraic certificate exactly");
  cmd_cert->fallthrough();
  int ct_p = 0;
  std::string ct_theorem;
  bool ct_json = false;
  cmd_cert->add_option("--p", ct_p)->required();
  cmd_cert->add_option("--theorem", ct_theorem, "general|small (default: both applicable)");
  cmd_cert->add_flag("--json", ct_json);

  auto* cmd_lp = app.add_subcommand("lp", "degree-3 LP lower bound");
  cmd_lp->fallthrough();
  int lp_p = 0, lp_D = 0;
  bool lp_json = false;
  cmd_lp->add_option("--p", lp_p)->required();
  cmd_lp->add_option("--D", lp_D)->required();
  cmd_lp->add_flag("--json", lp_json);

  auto* cmd_thr = app.add_subcommand("threshold", "least D with positive LP bound");
  cmd_thr->fallthrough();
  int th_p = 0;
  cmd_thr->add_option("--p", th_p)->required();

  auto* cmd_curve = app.add_subcommand("threshold-curve", "threshold density per prime");
  cmd_curve->fallthrough();
  int tc_pmax = 0;
  std::string tc_csv;
  cmd_curve->add_option("--p-max", tc_pmax)->required();
  cmd_curve->add_option("--csv", tc_csv, "CSV file to write");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  if (cap > 0) cfg.enumeration_cap = cap;
  if (threads > 0) cfg.thread_count = threads;
  if (!output_path.empty()) cfg.output = output_path;
  if (!format_name.empty()) {
    if (format_name == "text")
      cfg.format = OutputFormat::text;
    else if (format_name == "csv")
      cfg.format = OutputFormat::csv;
    else if (format_name == "json")
      cfg.format = OutputFormat::json;
    else
      throw CLI::ValidationError("--format", "expected text|csv|json");
  }
  cfg.validate();
  OutputSink sink{out, cfg.output, {}};
  const ApOptions ap_opt{cfg.enumeration_cap, cfg.thread_count, false};

  if (*cmd_neck) {
    if (nk_order != "colex" && nk_order != "coollex")
      throw CLI::ValidationError("--order", "expected colex|coollex");
    const auto list =
        nk_order == "colex" ? gen_colex(nk_n, nk_ones) : gen_coollex(nk_n, nk_ones);
    std::ostream& os = sink.get();
    for (const BinaryNecklace& v : list) os << v.to_string() << "\n";
    return 0;
  }

  if (*cmd_table) {
    const WTable table = w_table(tb_k, tb_nmin, tb_nmax, ap_opt);
    std::ostream& os = sink.get();
    if (cfg.format == OutputFormat::csv) {
      os << "n,D,W\n";
      for (size_t i = 0; i < table.rows.size(); ++i)
        for (size_t D = 0; D < table.rows[i].size(); ++D) {
          os << (table.n_min + i) << "," << D << ",";
          if (table.rows[i][D]) os << *table.rows[i][D];
          os << "\n";
        }
    } else if (cfg.format == OutputFormat::json) {
      json rows = json::object();
      for (size_t i = 0; i < table.rows.size(); ++i) {
        json row = json::array();
        for (const auto& cell : table.rows[i])
          row.push_back(cell ? json(*cell) : json(nullptr));
        rows[std::to_string(table.n_min + i)] = std::move(row);
      }
      os << json{{"k", table.k}, {"W", rows}}.dump(2) << "\n";
    } else {
      for (size_t i = 0; i < table.rows.size(); ++i) {
        os << "n=" << std::setw(2) << (table.n_min + i) << ":";
        for (const auto& cell : table.rows[i]) {
          if (cell)
            os << " " << *cell;
          else
            os << " -";
        }
        os << "\n";
      }
    }
    return 0;
  }

  if (*cmd_dist) {
    const auto hist = distribution(ds_n, ds_k, ds_ones, ap_opt);
    std::ostream& os = sink.get();
    if (cfg.format == OutputFormat::json) {
      json j = json::object();
      for (const auto& [count, necklaces] : hist) j[std::to_string(count)] = necklaces;
      os << j.dump(2) << "\n";
    } else {
      os << "count,necklaces\n";
      for (const auto& [count, necklaces] : hist) os << count << "," << necklaces << "\n";
    }
    return 0;
  }

  if (*cmd_lambda) {
    std::ostream& os = sink.get();
    if (lm_theorem == "small")
      os << lambda_small(lm_p, lm_D).str() << "\n";
    else if (lm_theorem == "general")
      os << to_string(lambda_general(lm_p, lm_D)) << "\n";
    else
      throw CLI::ValidationError("--theorem", "expected general|small");
    return 0;
  }

  if (*cmd_cert) {
    std::vector<CertificateReport> reports;
    if (ct_theorem.empty()) {
      reports.push_back(verify_general(ct_p));
      if (has_small_prime_certificate(ct_p)) reports.push_back(verify_smallprime(ct_p));
    } else if (ct_theorem == "general") {
      reports.push_back(verify_general(ct_p));
    } else if (ct_theorem == "small") {
      reports.push_back(verify_smallprime(ct_p));
    } else {
      throw CLI::ValidationError("--theorem", "expected general|small");
    }
    std::ostream& os = sink.get();
    bool all_ok = true;
    if (ct_json || cfg.format == OutputFormat::json) {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& r : reports) {
        print_report_text(r, os);
        os << "\n";
      }
    }
    for (const auto& r : reports) all_ok = all_ok && r.verified;
    return all_ok ? 0 : 3;
  }

  if (*cmd_lp) {
    const LpResult res = solve_lp(lp_p, lp_D);
    std::ostream& os = sink.get();
    const char* status = res.status == LpStatus::optimal      ? "optimal"
                         : res.status == LpStatus::infeasible ? "infeasible"
                                                              : "numerical-failure";
    if (lp_json || cfg.format == OutputFormat::json) {
      json j{{"p", lp_p}, {"D", lp_D}, {"status", status}};
      if (res.status == LpStatus::optimal) {
        j["bound"] = res.bound;
        j["max_violation"] = res.max_violation;
        j["u"] = res.u_opt;
      }
      os << j.dump(2) << "\n";
    } else {
      os << "status " << status;
      if (res.status == LpStatus::optimal)
        os << "  bound " << std::setprecision(12) << res.bound << "  max-violation "
           << res.max_violation;
      os << "\n";
    }
    return res.status == LpStatus::optimal ? 0 : 3;
  }

  if (*cmd_thr) {
    sink.get() << threshold(th_p) << "\n";
    return 0;
  }

  if (*cmd_curve) {
    const auto rows = threshold_curve(tc_pmax);
    std::ostringstream csv;
    csv << "p,Dstar,delta_star,lower_bracket,upper_bracket\n";
    for (const auto& r : rows)
      csv << r.p << "," << r.d_star << "," << std::setprecision(10) << r.delta_star << ","
          << r.lower_bracket << "," << r.upper_bracket << "\n";
    if (!tc_csv.empty()) {
      std::ofstream f(tc_csv);
      if (!f) throw std::invalid_argument("cannot open CSV file " + tc_csv);
      f << csv.str();
    } else {
      sink.get() << csv.str();
    }
    return 0;
  }

  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const cap_exceeded& e) {
    err << "error: cap: " << e.what() << "\n";
    return 4;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: failure: " << e.what() << "\n";
    return 3;
  }
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace apbound
