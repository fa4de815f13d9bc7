// Copyright 2025-2026 The qcpaul developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qcpaul/identities.hpp"
#include "qcpaul/parse.hpp"
#include "qcpaul/qft.hpp"
#include "qcpaul/rewrite.hpp"
#include "report.hpp"

namespace qcpaul::cli {

namespace {

double env_tolerance() {
  if (const char* v = std::getenv("QCPAUL_TOL")) {
    char* end = nullptr;
    const double t = std::strtod(v, &end);
    if (end != v && t >= 0.0) return t;
  }
  return 1e-10;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sci3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", x);
  return buf;
}

std::string matrix_json(const EvalResult& r) {
  std::string s = "{\"in_wires\": [";
  for (std::size_t i = 0; i < r.in_wires.size(); ++i)
    s += (i ? ", " : "") + ("\"" + json_escape(r.in_wires[i]) + "\"");
  s += "], \"out_wires\": [";
  for (std::size_t i = 0; i < r.out_wires.size(); ++i)
    s += (i ? ", " : "") + ("\"" + json_escape(r.out_wires[i]) + "\"");
  s += "], \"rows\": " + std::to_string(r.matrix.rows()) +
       ", \"cols\": " + std::to_string(r.matrix.cols()) + ", \"matrix\": [";
  for (std::size_t i = 0; i < r.matrix.rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < r.matrix.cols(); ++j) {
      if (j) s += ", ";
      s += "[" + json_number(r.matrix(i, j).real()) + ", " +
           json_number(r.matrix(i, j).imag()) + "]";
    }
    s += "]";
  }
  return s + "]}";
}

void print_eval_text(std::ostream& out, const EvalResult& r) {
  out << "in wires: ";
  for (std::size_t i = 0; i < r.in_wires.size(); ++i)
    out << (i ? " " : "") << r.in_wires[i];
  if (r.in_wires.empty()) out << "(none)";
  out << "\nout wires: ";
  for (std::size_t i = 0; i < r.out_wires.size(); ++i)
    out << (i ? " " : "") << r.out_wires[i];
  if (r.out_wires.empty()) out << "(none)";
  out << "\n" << to_string(r.matrix) << "\n";
}

int cmd_list(const std::string& what, const CliConfig& cfg,
             std::ostream& out) {
  if (what == "identities") {
    if (cfg.json) {
      std::string s = "{\"identities\": [";
      const auto& ids = list_identities();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ", ";
        s += "{\"id\": \"" + json_escape(ids[i].id) + "\", \"citation\": \"" +
             json_escape(ids[i].citation) + "\"}";
      }
      out << s << "]}\n";
    } else {
      for (const Identity& ident : list_identities())
        out << ident.id << "\n    " << ident.citation << "\n";
    }
    return 0;
  }
  if (cfg.json) {
    std::string s = "{\"rules\": [";
    const auto& rules = list_rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (i) s += ", ";
      s += "\"" + json_escape(rules[i].id) + "\"";
    }
    out << s << "]}\n";
  } else {
    for (const RewriteRule& r : list_rules()) out << r.id << "\n";
  }
  return 0;
}

int cmd_verify(bool all, const std::string& id, const CliConfig& cfg,
               std::ostream& out) {
  std::vector<VerificationReport> reports;
  if (all) {
    reports = verify_all(cfg.tolerance, cfg.seed);
  } else {
    reports.push_back(verify(id, cfg.tolerance, cfg.seed));
  }
  bool ok = true;
  for (const VerificationReport& r : reports) ok = ok && r.pass;
  if (cfg.json) {
    out << report_json(reports, cfg.tolerance, cfg.seed);
  } else {
    for (const VerificationReport& r : reports) {
      char line[160];
      std::snprintf(line, sizeof(line), "%s  %-24s points=%-5zu max_dev=%s",
                    r.pass ? "PASS" : "FAIL", r.id.c_str(), r.points,
                    sci3(r.max_deviation).c_str());
      out << line << "  (" << r.elapsed_ms << " ms)\n";
    }
    out << (ok ? "all passed" : "FAILED") << " (" << reports.size()
        << " identities, tol=" << sci3(cfg.tolerance) << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_eval(const std::string& path, const CliConfig& cfg,
             std::ostream& out) {
  const Circuit c = parse(read_file(path));
  const EvalResult r = evaluate(c);
  if (cfg.json) {
    out << matrix_json(r) << "\n";
  } else {
    print_eval_text(out, r);
  }
  return 0;
}

int cmd_rewrite(const std::string& path, const std::string& rule_id,
                std::size_t at, const CliConfig& cfg, std::ostream& out) {
  const Circuit c = parse(read_file(path));
  const std::vector<Site> sites = find_sites(c, rule_id);
  const Site* chosen = nullptr;
  for (const Site& s : sites)
    if (s.start == at) chosen = &s;
  if (!chosen) {
    std::string starts;
    for (const Site& s : sites)
      starts += (starts.empty() ? "" : ", ") + std::to_string(s.start);
    throw Error("rule '" + rule_id + "' does not match at element " +
                std::to_string(at) +
                (starts.empty() ? " (no sites in this circuit)"
                                : " (sites at: " + starts + ")"));
  }
  const Circuit rewritten = apply(c, rule_id, *chosen);
  const EvalResult before = evaluate(c);
  const EvalResult after = evaluate(rewritten);
  const double dev = max_abs_diff(before.matrix, after.matrix);
  if (cfg.json) {
    out << "{\"rule\": \"" << json_escape(rule_id) << "\", \"at\": " << at
        << ", \"circuit\": \"" << json_escape(to_text(rewritten))
        << "\", \"before\": " << matrix_json(before)
        << ", \"after\": " << matrix_json(after)
        << ", \"max_deviation\": " << sci3(dev) << "}\n";
  } else {
    out << to_text(rewritten);
    out << "# soundness: max deviation " << sci3(dev) << "\n";
  }
  return dev <= cfg.tolerance ? 0 : 1;
}

int cmd_qft(std::size_t nb, const std::string& form_name, bool check,
            const CliConfig& cfg, std::ostream& out) {
  const QftForm form =
      form_name == "321" ? QftForm::ThreeTwoOne : QftForm::OneTwoThree;
  const Circuit c = build_qft(nb, form);
  double dev = 0.0;
  if (check) {
    const EvalResult r = evaluate(c);
    dev = max_abs_diff(r.matrix, dft_matrix(nb));
  }
  if (cfg.json) {
    out << "{\"nb\": " << nb << ", \"form\": \"" << form_name
        << "\", \"circuit\": \"" << json_escape(to_text(c)) << "\"";
    if (check)
      out << ", \"max_deviation\": " << sci3(dev)
          << ", \"pass\": " << (dev <= 1e-9 ? "true" : "false");
    out << "}\n";
  } else {
    out << to_text(c);
    if (check)
      out << "# matches the reference transform within " << sci3(dev) << ": "
          << (dev <= 1e-9 ? "PASS" : "FAIL") << "\n";
  }
  if (check && dev > 1e-9) return 1;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"circuit identity catalog, evaluator and rewriter"};
  app.name("qcpaul");

  CliConfig cfg;
  cfg.tolerance = env_tolerance();
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--tol", cfg.tolerance,
                 "comparison tolerance (QCPAUL_TOL sets the default)");
  app.add_option("--seed", cfg.seed, "seed for the pseudo-random draws");
  app.require_subcommand(1);

  std::string list_what = "identities";
  CLI::App* list = app.add_subcommand("list", "list identities or rules");
  list->add_option("what", list_what, "identities | rules")
      ->check(CLI::IsMember({"identities", "rules"}));
  list->fallthrough();

  bool verify_all_flag = false;
  std::string verify_id;
  CLI::App* verify = app.add_subcommand("verify", "check catalog identities");
  verify->add_flag("--all", verify_all_flag, "verify the whole catalog");
  verify->add_option("--id", verify_id, "verify a single identity");
  verify->fallthrough();

  std::string eval_file;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a circuit file");
  eval->add_option("file", eval_file, "circuit DSL file")->required();
  eval->fallthrough();

  std::string rw_file, rw_rule;
  std::size_t rw_at = 0;
  CLI::App* rewrite = app.add_subcommand("rewrite", "apply a rewrite rule");
  rewrite->add_option("file", rw_file, "circuit DSL file")->required();
  rewrite->add_option("--rule", rw_rule, "rewrite rule id")->required();
  rewrite->add_option("--at", rw_at, "element index where the match starts")
      ->required();
  rewrite->fallthrough();

  std::size_t qft_nb = 0;
  std::string qft_form = "123";
  bool qft_check = false;
  CLI::App* qft = app.add_subcommand("qft", "emit a Fourier transform circuit");
  qft->add_option("--nb", qft_nb, "number of wires (1..8)")->required();
  qft->add_option("--form", qft_form, "ladder ordering")
      ->check(CLI::IsMember({"123", "321"}));
  qft->add_flag("--check", qft_check, "compare against the reference matrix");
  qft->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (list->parsed()) return cmd_list(list_what, cfg, out);
    if (verify->parsed()) {
      if (verify_all_flag == !verify_id.empty()) {
        err << "error: pass exactly one of --all or --id\n";
        return 2;
      }
      return cmd_verify(verify_all_flag, verify_id, cfg, out);
    }
    if (eval->parsed()) return cmd_eval(eval_file, cfg, out);
    if (rewrite->parsed())
      return cmd_rewrite(rw_file, rw_rule, rw_at, cfg, out);
    if (qft->parsed()) return cmd_qft(qft_nb, qft_form, qft_check, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand given\n" << app.help();
  return 2;
}

}  // namespace qcpaul::cli
