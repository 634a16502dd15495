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

#include "lhoro/lhoro.h"

#include <cstring>
#include <new>
#include <string>

#include "lhoro/convergence.hpp"
#include "lhoro/digraph.hpp"
#include "lhoro/errors.hpp"
#include "lhoro/json_io.hpp"
#include "lhoro/lamination.hpp"
#include "lhoro/lipschitz.hpp"
#include "lhoro/mapping_class.hpp"
#include "lhoro/run_config.hpp"

struct lh_config {
  lhoro::RunConfig cfg;
};
struct lh_digraph {
  lhoro::horo::DigraphSpace g;
};
struct lh_formal {
  lhoro::lam::FormalLamination mu;
};
struct lh_model {
  lhoro::lam::TestCurveModel m;
};

namespace {

using namespace lhoro;
using io::json;
using torus::TracePoint;

thread_local std::string g_last_error;

lh_status fail(lh_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
lh_status guarded(F&& f) {
  try {
    f();
    return LH_OK;
  } catch (const ContractViolation& e) {
    return fail(LH_CONTRACT_VIOLATION, e.what());
  } catch (const NumericalDegeneracy& e) {
    return fail(LH_NUMERICAL_DEGENERACY, e.what());
  } catch (const EvaluationError& e) {
    return fail(LH_EVALUATION_ERROR, e.what());
  } catch (const ParseError& e) {
    return fail(LH_PARSE_ERROR, e.what());
  } catch (const json::exception& e) {
    return fail(LH_PARSE_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LH_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(LH_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(LH_INTERNAL_ERROR, "unknown error");
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw ContractViolation(std::string(what) + " must not be NULL");
}

TracePoint point(lh_point p) {
  TracePoint pt{p.x, p.y, p.z};
  torus::validate(pt);
  return pt;
}
lh_point c_point(const TracePoint& p) { return {p.x, p.y, p.z}; }
torus::CurveSlope slope(lh_slope s) { return {s.p, s.q}; }
lh_slope c_slope(const torus::CurveSlope& c) { return {c.p(), c.q()}; }
torus::IntMatrix2 matrix(lh_matrix m) { return {m.a, m.b, m.c, m.d}; }
torus::MeasuredLam lamination(lh_lamination mu) { return {torus::ProjectiveSlope(mu.a, mu.b), mu.weight}; }

const RunConfig& config(const lh_config* cfg) {
  need(cfg, "config");
  return cfg->cfg;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  need(out, "output pointer");
  *out = dup_string(j.dump(2));
}

json distance_json(const torus::DistanceResult& d) {
  return {{"value", d.value},
          {"witness", io::to_json(d.witness)},
          {"error_estimate", d.error_estimate},
          {"refined", d.refined}};
}

std::vector<TracePoint> sequence_points(const RunConfig& c, const lh_sequence& s) {
  if (s.kind == LH_SEQ_TWIST) return torus::twist_sequence(slope(s.curve), s.n_max, c.base);
  if (s.kind == LH_SEQ_PA) return torus::pa_sequence(matrix(s.matrix), s.n_max, c.base);
  throw ContractViolation("unknown sequence kind");
}

torus::ProjectiveSlope sequence_limit(const lh_sequence& s) {
  if (s.kind == LH_SEQ_TWIST) return torus::ProjectiveSlope::from_curve(slope(s.curve));
  return torus::attracting_slope(matrix(s.matrix));
}

json sequence_json(const lh_sequence& s) {
  if (s.kind == LH_SEQ_TWIST)
    return {{"kind", "twist"}, {"curve", io::to_json(slope(s.curve))}, {"n_max", s.n_max}};
  return {{"kind", "pa"}, {"matrix", io::to_json(matrix(s.matrix))}, {"n_max", s.n_max}};
}

json rational_json(const lam::Rational& r) { return lam::to_string(r); }

}  // namespace

extern "C" {

const char* lh_version(void) { return "1.0.0"; }

const char* lh_last_error(void) { return g_last_error.c_str(); }

const char* lh_status_name(lh_status status) {
  switch (status) {
    case LH_OK: return "ok";
    case LH_CONTRACT_VIOLATION: return "contract_violation";
    case LH_NUMERICAL_DEGENERACY: return "numerical_degeneracy";
    case LH_EVALUATION_ERROR: return "evaluation_error";
    case LH_PARSE_ERROR: return "parse_error";
    case LH_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

void lh_string_free(char* s) { std::free(s); }

lh_status lh_config_new(lh_config** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = new lh_config{};
  });
}

void lh_config_free(lh_config* cfg) { delete cfg; }

lh_status lh_config_set(lh_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    need(cfg, "config");
    need(key, "key");
    need(value, "value");
    RunConfig next = cfg->cfg;
    next.set(key, value);
    cfg->cfg = next;
  });
}

lh_status lh_config_load(lh_config* cfg, const char* path) {
  return guarded([&] {
    need(cfg, "config");
    need(path, "path");
    RunConfig next = cfg->cfg;
    next.apply_file(path);
    cfg->cfg = next;
  });
}

lh_status lh_config_base(const lh_config* cfg, lh_point* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = c_point(config(cfg).base);
  });
}

lh_status lh_config_depth(const lh_config* cfg, int64_t* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = config(cfg).depth;
  });
}

lh_status lh_config_seed(const lh_config* cfg, uint64_t* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = config(cfg).seed;
  });
}

lh_status lh_config_format(const lh_config* cfg, const char** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = config(cfg).format.c_str();
  });
}

lh_status lh_config_to_json(const lh_config* cfg, char** out) {
  return guarded([&] {
    const auto& c = config(cfg);
    emit({{"base", io::to_json(c.base)},
          {"depth", c.depth},
          {"tol", c.tol},
          {"format", c.format},
          {"seed", c.seed}},
         out);
  });
}

lh_status lh_teich_from_xy(double x, double y, int plus_branch, lh_point* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = c_point(torus::teich_from_xy(x, y, plus_branch ? torus::Branch::plus : torus::Branch::minus));
  });
}

lh_status lh_point_validate(lh_point pt) {
  return guarded([&] { point(pt); });
}

lh_status lh_point_from_json(const char* text, lh_point* out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = c_point(io::point_from_json(io::parse(text)));
  });
}

lh_status lh_curve_trace(lh_point pt, lh_slope c, double* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = torus::curve_trace(point(pt), slope(c));
  });
}

lh_status lh_curve_length(lh_point pt, lh_slope c, double* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = torus::curve_length(point(pt), slope(c));
  });
}

lh_status lh_intersection(lh_lamination mu, lh_slope c, double* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = torus::intersection(lamination(mu), slope(c));
  });
}

lh_status lh_lipschitz_distance(const lh_config* cfg, lh_point x, lh_point y, lh_distance* out) {
  return guarded([&] {
    need(out, "output pointer");
    const auto d = torus::lipschitz_distance(point(x), point(y), config(cfg).search());
    *out = {d.value, c_slope(d.witness), d.error_estimate, d.refined ? 1 : 0};
  });
}

lh_status lh_horofunction(const lh_config* cfg, lh_lamination mu, lh_point x, double* value,
                          double* error_estimate) {
  return guarded([&] {
    need(value, "output pointer");
    const auto& c = config(cfg);
    const auto h = torus::horofunction(lamination(mu), point(x), c.base, c.search());
    *value = h.value;
    if (error_estimate != nullptr) *error_estimate = h.error_estimate;
  });
}

lh_status lh_mcg_apply(lh_matrix g, lh_point pt, lh_point* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = c_point(torus::mcg_apply(matrix(g), point(pt)));
  });
}

lh_status lh_mcg_apply_slope(lh_matrix g, lh_slope c, lh_slope* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = c_slope(torus::mcg_apply(matrix(g), slope(c)));
  });
}

lh_status lh_twist_matrix(lh_slope c, lh_matrix* out) {
  return guarded([&] {
    need(out, "output pointer");
    const auto t = torus::twist_matrix(slope(c));
    *out = {t.a, t.b, t.c, t.d};
  });
}

lh_status lh_digraph_parse(const char* text, lh_digraph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new lh_digraph{horo::DigraphSpace::parse(text)};
  });
}

lh_status lh_digraph_load(const char* path, lh_digraph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new lh_digraph{horo::DigraphSpace::load(path)};
  });
}

void lh_digraph_free(lh_digraph* g) { delete g; }

lh_status lh_digraph_vertex_count(const lh_digraph* g, size_t* out) {
  return guarded([&] {
    need(g, "digraph");
    need(out, "output pointer");
    *out = g->g.vertex_count();
  });
}

lh_status lh_digraph_distance(const lh_digraph* g, size_t u, size_t v, double* out) {
  return guarded([&] {
    need(g, "digraph");
    need(out, "output pointer");
    if (u >= g->g.vertex_count() || v >= g->g.vertex_count())
      throw ContractViolation("vertex out of range");
    *out = g->g.distance(u, v);
  });
}

lh_status lh_formal_from_json(const char* text, lh_formal** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new lh_formal{io::formal_from_json(io::parse(text))};
  });
}

void lh_formal_free(lh_formal* mu) { delete mu; }

lh_status lh_model_from_json(const char* text, lh_model** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new lh_model{io::model_from_json(io::parse(text))};
  });
}

void lh_model_free(lh_model* m) { delete m; }

lh_status lh_detour_cost_closed(const lh_formal* beta, const lh_formal* sigma, const lh_model* model,
                                double* out) {
  return guarded([&] {
    need(beta, "beta");
    need(sigma, "sigma");
    need(model, "model");
    need(out, "output pointer");
    *out = lam::detour_cost_closed(beta->mu, sigma->mu, model->m);
  });
}

lh_status lh_detour_metric_closed(const lh_formal* sigma, const lh_formal* beta, double* out) {
  return guarded([&] {
    need(beta, "beta");
    need(sigma, "sigma");
    need(out, "output pointer");
    *out = lam::detour_metric_closed(sigma->mu, beta->mu);
  });
}

lh_status lh_report_dist(const lh_config* cfg, lh_point x, lh_point y, char** out) {
  return guarded([&] {
    const auto& c = config(cfg);
    const TracePoint px = point(x), py = point(y);
    const auto fwd = torus::lipschitz_distance(px, py, c.search());
    const auto bwd = torus::lipschitz_distance(py, px, c.search());
    emit({{"x", io::to_json(px)},
          {"y", io::to_json(py)},
          {"depth", c.depth},
          {"L_xy", distance_json(fwd)},
          {"L_yx", distance_json(bwd)},
          {"lower_bound", true}},
         out);
  });
}

lh_status lh_report_horo(const lh_config* cfg, lh_lamination mu, lh_point x, char** out) {
  return guarded([&] {
    const auto& c = config(cfg);
    const auto m = lamination(mu);
    const TracePoint px = point(x);
    const auto h = torus::horofunction(m, px, c.base, c.search());
    emit({{"mu", io::to_json(m)},
          {"x", io::to_json(px)},
          {"base", io::to_json(c.base)},
          {"depth", c.depth},
          {"value", h.value},
          {"error_estimate", h.error_estimate},
          {"witness_at_x", io::to_json(h.witness_at_x)},
          {"witness_at_base", io::to_json(h.witness_at_base)}},
         out);
  });
}

lh_status lh_report_maxset(const lh_config* cfg, lh_point x, lh_point y, size_t limit, char** out) {
  return guarded([&] {
    const auto& c = config(cfg);
    const TracePoint px = point(x), py = point(y);
    const std::size_t cap = limit == 0 ? std::numeric_limits<std::size_t>::max() : limit;
    const auto set = torus::maxset(px, py, c.search(), c.tol, cap == SIZE_MAX ? cap : cap + 1);
    json slopes = json::array();
    for (std::size_t i = 0; i < set.size() && i < cap; ++i) slopes.push_back(io::to_json(set[i]));
    emit({{"x", io::to_json(px)},
          {"y", io::to_json(py)},
          {"depth", c.depth},
          {"tol", c.tol},
          {"slopes", slopes},
          {"truncated", set.size() > cap}},
         out);
  });
}

lh_status lh_report_converge(const lh_config* cfg, const lh_sequence* seq, const lh_point* probes,
                             size_t n_probes, char** out) {
  return guarded([&] {
    const auto& c = config(cfg);
    need(seq, "sequence");
    std::vector<TracePoint> pr;
    if (probes == nullptr) {
      pr = torus::default_probes();
    } else {
      for (size_t i = 0; i < n_probes; ++i) pr.push_back(point(probes[i]));
    }
    const auto report =
        torus::convergence_table(sequence_points(c, *seq), sequence_limit(*seq), pr, c.base, c.search());
    json probes_j = json::array(), rows = json::array();
    for (const auto& p : report.probes) probes_j.push_back(io::to_json(p));
    for (const auto& r : report.rows)
      rows.push_back({{"n", r.n},
                      {"d_b_xn", r.dist_b_xn},
                      {"residual", r.residual},
                      {"witness", io::to_json(r.witness)},
                      {"psi", r.psi}});
    emit({{"sequence", sequence_json(*seq)},
          {"mu", io::to_json(report.mu)},
          {"base", io::to_json(c.base)},
          {"depth", c.depth},
          {"probes", probes_j},
          {"limit", report.limit},
          {"rows", rows}},
         out);
  });
}

lh_status lh_report_mcg(const lh_config* cfg, lh_matrix g, lh_point x, lh_point y, char** out) {
  return guarded([&] {
    const auto& c = config(cfg);
    const auto m = matrix(g);
    const TracePoint px = point(x), py = point(y);
    const TracePoint gx = torus::mcg_apply(m, px), gy = torus::mcg_apply(m, py);
    const auto before = torus::lipschitz_distance(px, py, c.search());
    const auto after = torus::lipschitz_distance(gx, gy, c.search());
    emit({{"g", io::to_json(m)},
          {"x", io::to_json(px)},
          {"y", io::to_json(py)},
          {"gx", io::to_json(gx)},
          {"gy", io::to_json(gy)},
          {"depth", c.depth},
          {"L_xy", before.value},
          {"L_gxgy", after.value},
          {"residual", std::abs(after.value - before.value)}},
         out);
  });
}

lh_status lh_report_graph_demo(const lh_config* cfg, const lh_digraph* g, char** out) {
  return guarded([&] {
    config(cfg);
    need(g, "digraph");
    const auto& G = g->g;
    const auto space = G.as_space();
    const auto brute = horo::digraph_brute_oracle(G);
    const std::size_t n = G.vertex_count();
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;

    bool exact = true;
    json dist = json::array(), psi = json::array(), detour = json::array();
    for (std::size_t u = 0; u < n; ++u) {
      json row = json::array();
      for (std::size_t v = 0; v < n; ++v) {
        row.push_back(io::real(G.distance(u, v)));
        exact = exact && G.distance(u, v) == brute.distance[u][v];
      }
      dist.push_back(row);
    }
    for (std::size_t z = 0; z < n; ++z) {
      const auto table = horo::psi(space, z, all);
      for (std::size_t x = 0; x < n; ++x) exact = exact && table.values[x] == brute.psi[z][x];
      psi.push_back(io::to_json<std::size_t>(table, [](const std::size_t& v) { return json(v); }));
    }
    // H(psi_z, psi_w) along the constant sequence at z: d(b,z) + psi_w(z).
    const std::size_t b = G.base();
    for (std::size_t z = 0; z < n; ++z) {
      json row = json::array();
      for (std::size_t w = 0; w < n; ++w) {
        const std::vector<std::size_t> seq(3, z);
        const auto eta = [&](const std::size_t& x) { return G.distance(x, w) - G.distance(b, w); };
        const auto h = horo::detour_cost_along<std::size_t>(space, seq, eta);
        const double oracle = brute.distance[b][z] + brute.distance[z][w] - brute.distance[b][w];
        exact = exact && h.value == oracle;
        row.push_back(io::real(h.value));
      }
      detour.push_back(row);
    }
    emit({{"vertices", n},
          {"base", b},
          {"distance", dist},
          {"psi", psi},
          {"detour_constant", detour},
          {"distinct_psi", brute.distinct.size()},
          {"exact_match", exact}},
         out);
  });
}

lh_status lh_report_detour(const lh_config* cfg, const lh_formal* sigma, const lh_formal* beta,
                           const lh_model* model, size_t samples, char** out) {
  return guarded([&] {
    const auto& c = config(cfg);
    need(sigma, "sigma");
    need(beta, "beta");
    const auto& s = sigma->mu;
    const auto& b = beta->mu;
    const auto rel = lam::ll_relation(s, b);
    json f = json::array();
    for (const auto& v : rel.f) f.push_back(v ? rational_json(*v) : json(nullptr));
    const double delta = lam::detour_metric_closed(s, b);
    json report{{"sigma", io::to_json(s)},
                {"beta", io::to_json(b)},
                {"sigma_ll_beta", rel.holds},
                {"f", f},
                {"delta", io::real(delta)},
                {"delta_infinite", std::isinf(delta)},
                {"note", "closed forms; H values use the supplied test-curve model"}};
    if (model != nullptr) {
      const double h_bs = lam::detour_cost_closed(b, s, model->m);
      const double h_sb = lam::detour_cost_closed(s, b, model->m);
      report["H_beta_sigma"] = io::real(h_bs);
      report["H_sigma_beta"] = io::real(h_sb);
      report["infinite"] = std::isinf(h_bs);
      report["lfactor_sigma"] = rational_json(lam::lfactor_model(s, model->m));
      report["lfactor_beta"] = rational_json(lam::lfactor_model(b, model->m));
      if (samples > 0) {
        const auto r = lam::ratio_sup_bound(s, b, model->m, samples, c.seed);
        report["ratio_sup"] = {{"infinite", r.infinite},
                               {"closed_form", r.infinite ? json("inf") : rational_json(r.closed_form)},
                               {"sampled_max", rational_json(r.sampled_max)},
                               {"used", r.used},
                               {"skipped", r.skipped},
                               {"seed", c.seed}};
      }
    } else {
      report["infinite"] = std::isinf(delta);
    }
    emit(report, out);
  });
}

lh_status lh_report_detour_along(const lh_config* cfg, const lh_sequence* seq, const lh_lamination* eta,
                                 char** out) {
  return guarded([&] {
    const auto& c = config(cfg);
    need(seq, "sequence");
    const auto points = sequence_points(c, *seq);
    const torus::MeasuredLam mu =
        eta != nullptr ? lamination(*eta) : torus::MeasuredLam(sequence_limit(*seq), 1.0);
    const auto search = c.search();
    const auto space = torus::torus_space(c.base, search);
    const auto along = horo::detour_cost_along<TracePoint>(
        space, points, [&](const TracePoint& x) { return torus::horofunction(mu, x, c.base, search).value; });
    json trace = json::array(), inf = json::array();
    for (double v : along.trace) trace.push_back(io::real(v));
    for (double v : along.suffix_inf) inf.push_back(io::real(v));
    emit({{"sequence", sequence_json(*seq)},
          {"eta", io::to_json(mu)},
          {"limit_slope", io::to_json(sequence_limit(*seq))},
          {"depth", c.depth},
          {"value", io::real(along.value)},
          {"infinite", along.infinite},
          {"trace", trace},
          {"suffix_inf", inf},
          {"upper_bound", true},
          {"note", "value >= H(limit, Psi_eta); equality along almost-geodesics"}},
         out);
  });
}

}  // extern "C"
