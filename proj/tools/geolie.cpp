#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geolie/alg_io.hpp"
#include "geolie/capacity.hpp"
#include "geolie/classify.hpp"
#include "geolie/errors.hpp"
#include "geolie/graph.hpp"
#include "geolie/graph_io.hpp"
#include "geolie/net.hpp"
#include "geolie/qstraight.hpp"
#include "geolie/report.hpp"
#include "geolie/sobolev.hpp"
#include "geolie/version.hpp"

namespace {

using geolie::json;

json dim_json(geolie::DimOrInf d) {
  if (!d.has_value()) return "inf";
  return *d;
}

json classification_json(const geolie::ClassificationReport& rep, const std::string& name) {
  json out;
  out["name"] = name;
  out["Q"] = rep.hausdorff_dim_Q;
  out["N"] = dim_json(rep.growth_dim_N);
  out["parabolic_dim"] = dim_json(rep.parabolic_dim);
  out["isoperimetric_dim"] = dim_json(rep.isoperimetric_dim);
  out["conformal_type"] = geolie::conformal_type_name(rep.conformal_type);
  out["bracket_generating"] = rep.bracket_generating;
  out["carnot"] = rep.carnot;
  out["nilpotent"] = rep.nilpotent;
  out["unimodular"] = rep.unimodular;
  out["fundamental_group_infinite"] = rep.fundamental_group_infinite;
  return out;
}

std::pair<geolie::ClassificationReport, std::string> classify_file(const std::string& path) {
  auto parsed = geolie::load_algebra_file(path);
  if (parsed.declared.has_value())
    return {geolie::report_from_declared(*parsed.declared), parsed.declared->name};
  return {geolie::classify_conformal_type(*parsed.group), parsed.group->name};
}

std::vector<int> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string tok = text.substr(pos, next - pos);
    if (tok.empty()) throw geolie::Error(geolie::Err::BadInput, what + ": empty vertex index");
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw geolie::Error(geolie::Err::BadInput, what + ": '" + tok + "' is not a vertex index");
    }
    pos = next + 1;
    if (next == text.size()) break;
  }
  if (out.empty()) throw geolie::Error(geolie::Err::BadInput, what + ": empty vertex list");
  return out;
}

json graph_json(const geolie::MetricMeasureGraph& g) {
  json out;
  out["vertices"] = g.vertex_count;
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e.u, e.v, e.length, e.weight}));
  out["edges"] = edges;
  out["measure"] = g.measure;
  out["infinity_boundary"] = g.infinity_boundary;
  return out;
}

struct Options {
  std::string input;
  std::string input2;
  std::string out;
  double p = 2.0;
  double Q = 0.0;
  bool has_Q = false;
  std::string mode = "exact";
  std::uint64_t seed = 0;
  std::string E;
  std::string F;
  double tolerance = 1e-10;
  double epsilon = 0.0;
  int samples = 0;
};

void emit(const json& report, const std::string& out_path) {
  const std::string text = geolie::render_report(report);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw geolie::Error(geolie::Err::BadInput, "cannot write '" + out_path + "'");
  out << text;
}

bool exact_mode(const std::string& mode) {
  if (mode == "exact") return true;
  if (mode == "heuristic") return false;
  throw geolie::Error(geolie::Err::BadInput, "mode must be exact or heuristic");
}

json run_classify(const Options& opt) {
  auto [rep, name] = classify_file(opt.input);
  json doc;
  doc["command"] = "classify";
  doc["config"] = {{"input", opt.input}};
  doc["result"] = classification_json(rep, name);
  return doc;
}

json run_verdict(const Options& opt) {
  auto [left, lname] = classify_file(opt.input);
  auto [right, rname] = classify_file(opt.input2);
  const auto verdict = geolie::qc_implies_qi_verdict(left, right);
  json matched;
  for (const auto& [key, ok] : verdict.matched_invariants) matched[key] = ok;
  json doc;
  doc["command"] = "verdict";
  doc["config"] = {{"input_left", opt.input}, {"input_right", opt.input2}};
  doc["result"] = {{"verdict", geolie::verdict_case_name(verdict.verdict_case)},
                   {"explanation", verdict.explanation},
                   {"matched_invariants", matched},
                   {"left", classification_json(left, lname)},
                   {"right", classification_json(right, rname)}};
  return doc;
}

json run_capacity(const Options& opt) {
  if (opt.E.empty()) throw geolie::Error(geolie::Err::BadInput, "capacity needs --E");
  if (opt.F.empty()) throw geolie::Error(geolie::Err::BadInput, "capacity needs --F (vertex list or inf)");
  auto g = geolie::load_graph_file(opt.input);
  geolie::Capacitor cap;
  cap.E = parse_index_list(opt.E, "--E");
  if (opt.F != "inf") cap.F = parse_index_list(opt.F, "--F");
  const auto res = geolie::p_capacity(g, cap, opt.p, opt.tolerance);
  json doc;
  doc["command"] = "capacity";
  doc["config"] = {{"input", opt.input},
                   {"E", cap.E},
                   {"F", opt.F == "inf" ? json("inf") : json(*cap.F)},
                   {"p", opt.p},
                   {"tolerance", opt.tolerance}};
  doc["result"] = {{"value", res.value},
                   {"potential", res.potential},
                   {"p", res.p},
                   {"iterations", res.iterations},
                   {"residual", res.residual}};
  return doc;
}

json run_profile(const Options& opt) {
  auto g = geolie::load_graph_file(opt.input);
  const bool exact = exact_mode(opt.mode);
  json volumes = json::array();
  json values = json::array();
  for (int v = 1; v <= g.vertex_count; ++v) {
    volumes.push_back(v);
    values.push_back(geolie::isoperimetric_profile(g, static_cast<double>(v), exact));
  }
  json doc;
  doc["command"] = "profile";
  doc["config"] = {{"input", opt.input}, {"mode", opt.mode}};
  doc["result"] = {{"v", volumes}, {"J", values}};
  return doc;
}

json run_straighten(const Options& opt) {
  auto g = geolie::load_graph_file(opt.input);
  auto fn = geolie::load_function_file(opt.input2);
  if (static_cast<int>(fn.values.size()) != g.vertex_count)
    throw geolie::Error(geolie::Err::DimensionMismatch, "function values do not match the vertex count");
  const bool before = geolie::is_monotone(g, fn.values, fn.domain);
  const auto result = geolie::straighten(g, fn.values, fn.domain);
  json doc;
  doc["command"] = "straighten";
  doc["config"] = {{"input_graph", opt.input}, {"input_function", opt.input2}};
  doc["result"] = {{"values", result},
                   {"input_monotone", before},
                   {"output_monotone", geolie::is_monotone(g, result, fn.domain)},
                   {"tv_before", geolie::total_variation(g, fn.values)},
                   {"tv_after", geolie::total_variation(g, result)}};
  return doc;
}

json run_qstraight(const Options& opt) {
  const auto points = geolie::load_sequence_file(opt.input);
  const int count = static_cast<int>(points.size());
  auto metric = [&points](int a, int b) {
    double s = 0.0;
    for (std::size_t c = 0; c < points[static_cast<std::size_t>(a)].size(); ++c) {
      const double d = points[static_cast<std::size_t>(a)][c] - points[static_cast<std::size_t>(b)][c];
      s += d * d;
    }
    return std::sqrt(s);
  };
  const auto rep = geolie::quasi_straight_defect(count, metric);
  json doc;
  doc["command"] = "qstraight";
  doc["config"] = {{"input", opt.input}, {"window", count}};
  doc["result"] = {{"K_step", rep.K_step},
                   {"K_align", rep.K_align},
                   {"K", rep.K},
                   {"unbounded_both_sides", rep.unbounded_both_sides}};
  return doc;
}

json run_net(const Options& opt) {
  if (!(opt.epsilon > 0.0)) throw geolie::Error(geolie::Err::BadInput, "net needs a positive separation scale");
  auto cloud = geolie::load_cloud_file(opt.input);
  auto net = geolie::build_net(cloud, opt.epsilon);
  json doc;
  doc["command"] = "net";
  doc["config"] = {{"input", opt.input}, {"epsilon", opt.epsilon}};
  json result = graph_json(net.graph);
  result["net_indices"] = net.net_indices;
  doc["result"] = result;
  return doc;
}

json run_probe(const Options& opt) {
  if (!opt.has_Q) throw geolie::Error(geolie::Err::BadInput, "probe needs --Q (the dimension parameter)");
  if (opt.samples <= 0) throw geolie::Error(geolie::Err::BadInput, "probe needs a positive sample count");
  auto g = geolie::load_graph_file(opt.input);
  const auto res = geolie::sobolev_constant_probe(g, opt.Q, opt.p, opt.samples, opt.seed);
  json doc;
  doc["command"] = "probe";
  doc["config"] = {{"input", opt.input},
                   {"N", opt.Q},
                   {"q", opt.p},
                   {"samples", opt.samples},
                   {"seed", opt.seed}};
  doc["result"] = {{"C_q", res.C_q},
                   {"C_q_inf", res.C_q_inf},
                   {"s", res.s},
                   {"violations", res.violations}};
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic group classifier and metric-measure graph laboratory"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "write the report here instead of stdout");
  };

  auto* c_classify = app.add_subcommand("classify", "classify a group given by its algebra file");
  c_classify->add_option("input", opt.input, "algebra file")->required();
  add_common(c_classify);

  auto* c_verdict = app.add_subcommand("verdict", "rigidity verdict for a pair of groups");
  c_verdict->add_option("left", opt.input, "algebra file")->required();
  c_verdict->add_option("right", opt.input2, "algebra file")->required();
  add_common(c_verdict);

  auto* c_capacity = app.add_subcommand("capacity", "condenser capacity on a graph");
  c_capacity->add_option("input", opt.input, "graph file")->required();
  c_capacity->add_option("--E", opt.E, "plate E vertex list, comma separated");
  c_capacity->add_option("--F", opt.F, "plate F vertex list, or inf for the infinity boundary");
  c_capacity->add_option("--p", opt.p, "energy exponent");
  c_capacity->add_option("--tolerance", opt.tolerance, "solver residual target");
  add_common(c_capacity);

  auto* c_profile = app.add_subcommand("profile", "isoperimetric profile curve");
  c_profile->add_option("input", opt.input, "graph file")->required();
  c_profile->add_option("--mode", opt.mode, "exact or heuristic");
  add_common(c_profile);

  auto* c_straighten = app.add_subcommand("straighten", "monotone rearrangement of a vertex function");
  c_straighten->add_option("input", opt.input, "graph file")->required();
  c_straighten->add_option("function", opt.input2, "function file with values and domain")->required();
  add_common(c_straighten);

  auto* c_qstraight = app.add_subcommand("qstraight", "quasi-straightness defect of a point sequence");
  c_qstraight->add_option("input", opt.input, "sequence file")->required();
  add_common(c_qstraight);

  auto* c_net = app.add_subcommand("net", "build a separated net graph from a point cloud");
  c_net->add_option("input", opt.input, "cloud file")->required();
  c_net->add_option("epsilon", opt.epsilon, "separation scale")->required();
  add_common(c_net);

  auto* c_probe = app.add_subcommand("probe", "empirical embedding constants on a graph");
  c_probe->add_option("input", opt.input, "graph file")->required();
  c_probe->add_option("samples", opt.samples, "number of random functions")->required();
  c_probe->add_option("--Q", opt.Q, "dimension parameter");
  c_probe->add_option("--p", opt.p, "integrability exponent");
  c_probe->add_option("--seed", opt.seed, "random seed");
  add_common(c_probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err = {{"error", {{"code", "BadInput"}, {"message", std::string(e.what())}}}};
    std::cout << geolie::render_report(err);
    return 2;
  }
  opt.has_Q = c_probe->count("--Q") > 0;
  if (app.got_subcommand(c_probe) && c_probe->count("--p") == 0) opt.p = 1.0;

  try {
    json doc;
    if (app.got_subcommand(c_classify)) {
      doc = run_classify(opt);
    } else if (app.got_subcommand(c_verdict)) {
      doc = run_verdict(opt);
    } else if (app.got_subcommand(c_capacity)) {
      doc = run_capacity(opt);
    } else if (app.got_subcommand(c_profile)) {
      doc = run_profile(opt);
    } else if (app.got_subcommand(c_straighten)) {
      doc = run_straighten(opt);
    } else if (app.got_subcommand(c_qstraight)) {
      doc = run_qstraight(opt);
    } else if (app.got_subcommand(c_net)) {
      doc = run_net(opt);
    } else {
      doc = run_probe(opt);
    }
    doc["tool"] = {{"name", geolie::kToolName}, {"version", geolie::kToolVersion}};
    emit(doc, opt.out);
    return 0;
  } catch (const geolie::Error& e) {
    json err = {{"error", {{"code", geolie::err_name(e.code())}, {"message", e.message()}}}};
    std::cout << geolie::render_report(err);
    return e.code() == geolie::Err::SolverDiverged ? 3 : 2;
  } catch (const std::exception& e) {
    json err = {{"error", {{"code", "Internal"}, {"message", std::string(e.what())}}}};
    std::cout << geolie::render_report(err);
    return 2;
  }
}
