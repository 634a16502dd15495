/*
   Copyright 2026 The lhoro Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// lhoro command-line front end. Talks to the library only through lhoro.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lhoro/lhoro.h"

using nlohmann::json;

namespace {

// Carries a status out of nested helpers to main().
struct Failure {
  lh_status status;
  std::string message;
};

void check(lh_status s) {
  if (s != LH_OK) throw Failure{s, lh_last_error()};
}

[[noreturn]] void usage_error(const std::string& msg) { throw Failure{LH_CONTRACT_VIOLATION, msg}; }

int exit_code(lh_status s) {
  switch (s) {
    case LH_OK: return 0;
    case LH_CONTRACT_VIOLATION:
    case LH_PARSE_ERROR: return 2;
    case LH_NUMERICAL_DEGENERACY: return 3;
    default: return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline JSON, or @file.
std::string text_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return read_file(arg.substr(1));
  return arg;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    usage_error("malformed " + what + ": " + e.what());
  }
}

lh_point point_arg(const std::string& arg) {
  lh_point p{};
  check(lh_point_from_json(text_arg(arg).c_str(), &p));
  return p;
}

std::vector<double> numbers(const std::string& arg, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(arg);
  std::string part;
  while (std::getline(ss, part, arg.find('/') != std::string::npos ? '/' : ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      usage_error("malformed " + what + " '" + arg + "'");
    }
  }
  if (out.size() != count) usage_error("malformed " + what + " '" + arg + "'");
  return out;
}

lh_slope slope_arg(const std::string& arg) {
  const auto v = numbers(arg, 2, "slope");
  if (v[0] != std::floor(v[0]) || v[1] != std::floor(v[1])) usage_error("slope needs integers: '" + arg + "'");
  return {static_cast<int64_t>(v[0]), static_cast<int64_t>(v[1])};
}

lh_matrix matrix_arg(const std::string& arg) {
  const json j = parse_json(text_arg(arg), "matrix");
  try {
    return {j.at(0).at(0).get<int64_t>(), j.at(0).at(1).get<int64_t>(), j.at(1).at(0).get<int64_t>(),
            j.at(1).at(1).get<int64_t>()};
  } catch (const json::exception&) {
    usage_error("a matrix is [[a,b],[c,d]]");
  }
}

lh_lamination lamination_arg(const std::string& arg) {
  const json j = parse_json(text_arg(arg), "lamination");
  try {
    return {j.at("slope").at(0).get<double>(), j.at("slope").at(1).get<double>(), j.value("weight", 1.0)};
  } catch (const json::exception&) {
    usage_error("a lamination is {\"slope\":[a,b],\"weight\":w}");
  }
}

struct Handle {
  lh_config* cfg = nullptr;
  ~Handle() { lh_config_free(cfg); }
};

std::string take(char* s) {
  std::string out(s);
  lh_string_free(s);
  return out;
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  return v.dump();
}

// Flat CSV renderings of the tabular reports.
void print_csv(const std::string& command, const json& r) {
  std::ostream& o = std::cout;
  if (command == "converge") {
    o << "n,d(b,x_n),residual,witness_p,witness_q\n";
    for (const auto& row : r["rows"])
      o << row["n"] << ',' << cell(row["d_b_xn"]) << ',' << cell(row["residual"]) << ','
        << row["witness"][0] << ',' << row["witness"][1] << '\n';
  } else if (command == "dist") {
    o << "direction,value,witness_p,witness_q,error_estimate\n";
    for (const char* k : {"L_xy", "L_yx"})
      o << k << ',' << cell(r[k]["value"]) << ',' << r[k]["witness"][0] << ',' << r[k]["witness"][1] << ','
        << cell(r[k]["error_estimate"]) << '\n';
  } else if (command == "maxset") {
    o << "p,q\n";
    for (const auto& s : r["slopes"]) o << s[0] << ',' << s[1] << '\n';
  } else if (command == "detour" && r.contains("trace")) {
    o << "n,value,suffix_inf\n";
    for (std::size_t i = 0; i < r["trace"].size(); ++i)
      o << i << ',' << cell(r["trace"][i]) << ',' << cell(r["suffix_inf"][i]) << '\n';
  } else {
    o << "key,value\n";
    for (const auto& [k, v] : r.items())
      if (!v.is_structured()) o << k << ',' << cell(v) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz metric, horofunctions and detour costs on the once-punctured torus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format;
  int64_t depth = 0;
  double tol = 0.0;
  uint64_t seed = 0;
  std::string base;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--depth", depth, "Farey order Q");
  app.add_option("--tol", tol, "relative tolerance");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--base", base, "base point as x,y,z");

  std::string x_arg, y_arg, mu_arg, g_arg, kind, param, file, sigma_arg, beta_arg, model_arg, along, eta_arg;
  std::vector<std::string> probe_args;
  int n_max = 30;
  std::size_t limit = 1000, samples = 0;

  auto* dist = app.add_subcommand("dist", "L(x,y) and L(y,x) with witnesses");
  dist->add_option("--x", x_arg, "point JSON or @file")->required();
  dist->add_option("--y", y_arg, "point JSON or @file")->required();

  auto* horo = app.add_subcommand("horo", "horofunction Psi_mu(x)");
  horo->add_option("--mu", mu_arg, "lamination JSON or @file")->required();
  horo->add_option("--x", x_arg, "point JSON or @file")->required();

  auto* conv = app.add_subcommand("converge", "psi_{x_n} against Psi_mu along an orbit");
  conv->add_option("kind", kind, "twist or pa")->required()->check(CLI::IsMember({"twist", "pa"}));
  conv->add_option("parameter", param, "slope p/q (twist) or matrix JSON (pa)")->required();
  conv->add_option("--n-max", n_max, "last step");
  conv->add_option("--probe", probe_args, "probe point JSON (repeatable)");

  auto* det = app.add_subcommand("detour", "detour cost and detour metric");
  det->add_option("--sigma", sigma_arg, "formal lamination JSON or @file");
  det->add_option("--beta", beta_arg, "formal lamination JSON or @file");
  det->add_option("--model", model_arg, "test-curve model JSON or @file");
  det->add_option("--samples", samples, "ratio-bound samples");
  det->add_option("--along", along, "twist:p/q or pa:[[a,b],[c,d]]");
  det->add_option("--n-max", n_max, "last step of --along");
  det->add_option("--eta", eta_arg, "torus lamination JSON for --along");

  auto* mcg = app.add_subcommand("mcg", "isometry residual |L(gx,gy) - L(x,y)|");
  mcg->add_option("--g", g_arg, "matrix JSON")->required();
  mcg->add_option("--x", x_arg, "point JSON or @file")->required();
  mcg->add_option("--y", y_arg, "point JSON or @file")->required();

  auto* maxset = app.add_subcommand("maxset", "slopes attaining the maximal length ratio");
  maxset->add_option("--x", x_arg, "point JSON or @file")->required();
  maxset->add_option("--y", y_arg, "point JSON or @file")->required();
  maxset->add_option("--limit", limit, "maximum number of slopes listed (0 = all)");

  auto* graph = app.add_subcommand("graph-demo", "digraph tables against the brute-force oracle");
  graph->add_option("file", file, "edge-list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "contract_violation"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Handle h;
    check(lh_config_new(&h.cfg));
    if (!config_path.empty()) check(lh_config_load(h.cfg, config_path.c_str()));
    if (!base.empty()) check(lh_config_set(h.cfg, "base", base.c_str()));
    if (app.count("--depth")) check(lh_config_set(h.cfg, "depth", std::to_string(depth).c_str()));
    if (app.count("--tol")) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", tol);
      check(lh_config_set(h.cfg, "tol", buf));
    }
    if (app.count("--seed")) check(lh_config_set(h.cfg, "seed", std::to_string(seed).c_str()));
    if (!format.empty()) check(lh_config_set(h.cfg, "format", format.c_str()));
    const char* fmt = nullptr;
    check(lh_config_format(h.cfg, &fmt));
    const std::string out_format = fmt;

    char* raw = nullptr;
    if (command == "dist") {
      check(lh_report_dist(h.cfg, point_arg(x_arg), point_arg(y_arg), &raw));
    } else if (command == "horo") {
      check(lh_report_horo(h.cfg, lamination_arg(mu_arg), point_arg(x_arg), &raw));
    } else if (command == "converge") {
      lh_sequence seq{};
      seq.n_max = n_max;
      if (kind == "twist") {
        seq.kind = LH_SEQ_TWIST;
        seq.curve = slope_arg(param);
      } else {
        seq.kind = LH_SEQ_PA;
        seq.matrix = matrix_arg(param);
      }
      std::vector<lh_point> probes;
      for (const auto& p : probe_args) probes.push_back(point_arg(p));
      check(lh_report_converge(h.cfg, &seq, probes.empty() ? nullptr : probes.data(), probes.size(), &raw));
    } else if (command == "detour") {
      if (!along.empty()) {
        lh_sequence seq{};
        seq.n_max = n_max;
        const auto colon = along.find(':');
        if (colon == std::string::npos) usage_error("--along takes twist:p/q or pa:[[a,b],[c,d]]");
        const std::string k = along.substr(0, colon), v = along.substr(colon + 1);
        if (k == "twist") {
          seq.kind = LH_SEQ_TWIST;
          seq.curve = slope_arg(v);
        } else if (k == "pa") {
          seq.kind = LH_SEQ_PA;
          seq.matrix = matrix_arg(v);
        } else {
          usage_error("--along takes twist:p/q or pa:[[a,b],[c,d]]");
        }
        lh_lamination eta{};
        if (!eta_arg.empty()) eta = lamination_arg(eta_arg);
        check(lh_report_detour_along(h.cfg, &seq, eta_arg.empty() ? nullptr : &eta, &raw));
      } else {
        if (sigma_arg.empty() || beta_arg.empty()) usage_error("detour needs --sigma and --beta, or --along");
        lh_formal *s = nullptr, *b = nullptr;
        lh_model* m = nullptr;
        std::unique_ptr<lh_formal, void (*)(lh_formal*)> sg(nullptr, lh_formal_free), bg(nullptr, lh_formal_free);
        std::unique_ptr<lh_model, void (*)(lh_model*)> mg(nullptr, lh_model_free);
        check(lh_formal_from_json(text_arg(sigma_arg).c_str(), &s));
        sg.reset(s);
        check(lh_formal_from_json(text_arg(beta_arg).c_str(), &b));
        bg.reset(b);
        if (!model_arg.empty()) {
          check(lh_model_from_json(text_arg(model_arg).c_str(), &m));
          mg.reset(m);
        }
        check(lh_report_detour(h.cfg, s, b, m, samples, &raw));
      }
    } else if (command == "mcg") {
      check(lh_report_mcg(h.cfg, matrix_arg(g_arg), point_arg(x_arg), point_arg(y_arg), &raw));
    } else if (command == "maxset") {
      check(lh_report_maxset(h.cfg, point_arg(x_arg), point_arg(y_arg), limit, &raw));
    } else if (command == "graph-demo") {
      lh_digraph* g = nullptr;
      check(lh_digraph_load(file.c_str(), &g));
      std::unique_ptr<lh_digraph, void (*)(lh_digraph*)> gg(g, lh_digraph_free);
      check(lh_report_graph_demo(h.cfg, g, &raw));
    }
    const std::string report = take(raw);
    if (out_format == "csv") print_csv(command, json::parse(report));
    else std::cout << report << '\n';
    return 0;
  } catch (const Failure& f) {
    std::cerr << json{{"error", lh_status_name(f.status)}, {"message", f.message}, {"command", command}}.dump()
              << '\n';
    return exit_code(f.status);
  }
}
