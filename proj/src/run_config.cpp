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

#include "lhoro/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lhoro/errors.hpp"

namespace lhoro {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ParseError("config: '" + key + "' needs a number, got '" + v + "'");
  return out;
}

template <class Int>
Int to_int(const std::string& key, const std::string& v) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError("config: '" + key + "' needs an integer, got '" + v + "'");
  return out;
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "base") {
    std::stringstream ss(v);
    std::string part;
    double c[3];
    int n = 0;
    while (std::getline(ss, part, ',')) {
      if (n == 3) throw ParseError("config: base takes three comma-separated traces");
      c[n++] = to_double(key, trim(part));
    }
    if (n != 3) throw ParseError("config: base takes three comma-separated traces");
    torus::TracePoint pt{c[0], c[1], c[2]};
    torus::validate(pt);
    base = pt;
  } else if (key == "depth") {
    depth = to_int<std::int64_t>(key, v);
  } else if (key == "tol") {
    tol = to_double(key, v);
  } else if (key == "format") {
    format = v;
  } else if (key == "seed") {
    seed = to_int<std::uint64_t>(key, v);
  } else {
    throw ParseError("config: unknown key '" + key + "'");
  }
  validate();
}

void RunConfig::apply_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void RunConfig::apply_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_text(buf.str());
}

void RunConfig::validate() const {
  if (depth < 1) throw ContractViolation("config: depth must be at least 1");
  if (!(tol > 0.0)) throw ContractViolation("config: tol must be positive");
  if (format != "json" && format != "csv") throw ContractViolation("config: format must be json or csv");
  torus::validate(base);
}

torus::SearchConfig RunConfig::search() const {
  torus::SearchConfig s;
  s.depth = depth;
  return s;
}

}  // namespace lhoro
