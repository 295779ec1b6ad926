#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ehrlat/euclid.hpp"
#include "ehrlat/json_io.hpp"
#include "ehrlat/models.hpp"
#include "ehrlat/oracle.hpp"

using namespace ehrlat;

namespace {

GfMethod parse_gf(const std::string& s) {
  return s == "fpp" ? GfMethod::Fpp : GfMethod::Barvinok;
}

Json value_json(const Rat& v) {
  if (is_integer(v)) return int_to_json(v.get_num());
  return rat_to_json(v);
}

Json qp_result(const QuasiPolynomial& qp) {
  Json j = to_json(qp);
  j["format"] = 1;
  return j;
}

void check_threads_env() {
  const char* t = std::getenv("EHRLAT_THREADS");
  if (!t) return;
  char* end = nullptr;
  long v = std::strtol(t, &end, 10);
  if (end == t || *end != '\0' || v < 1)
    throw DomainError("EHRLAT_THREADS must be a positive integer");
  // all computations run sequentially, so any positive cap is honored
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-point counting in rational polyhedra"};
  app.require_subcommand(1);

  std::string out_path, polytope_path, graph_path, problem_path;
  std::string method = "barvinok", plot_base;
  long dilate = 1, eval_k = 0, m = 1, a = 1, b = 1, depth = 3, bound = 10;
  bool interior = false, have_eval = false;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the JSON result to this file");
  };
  auto add_polytope = [&](CLI::App* sub) {
    sub->add_option("--polytope", polytope_path, "polyhedron JSON file")->required();
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method, "generating-function method")
        ->check(CLI::IsMember({"fpp", "barvinok"}));
  };
  auto add_eval = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--eval", eval_k, "evaluate at this dilation");
    if (required) opt->required();
    else opt->each([&](const std::string&) { have_eval = true; });
  };

  Json result;

  auto* count = app.add_subcommand("count", "count lattice points of a dilated polytope");
  add_polytope(count);
  add_method(count);
  count->add_option("--dilate", dilate, "dilation factor")->check(CLI::PositiveNumber);
  add_out(count);
  count->callback([&] {
    Polyhedron p = polyhedron_from_json(load_json(polytope_path));
    DilationCounter counter({{1, p}}, parse_gf(method));
    result = {{"format", 1}, {"count", int_to_json(counter.count(dilate))}};
  });

  auto* gf = app.add_subcommand("genfunc", "multivariate rational generating function");
  add_polytope(gf);
  add_method(gf);
  add_out(gf);
  gf->callback([&] {
    Polyhedron p = polyhedron_from_json(load_json(polytope_path));
    result = to_json(gen_func(p, parse_gf(method)));
    result["format"] = 1;
  });

  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart quasipolynomial by interpolation");
  add_polytope(ehr);
  add_method(ehr);
  add_out(ehr);
  ehr->callback([&] {
    Polyhedron p = polyhedron_from_json(load_json(polytope_path));
    result = qp_result(ehrhart_qp(p, QpMethod::Interpolation, parse_gf(method)));
  });

  auto* ser = app.add_subcommand("series", "Ehrhart series numerator data");
  add_polytope(ser);
  add_out(ser);
  ser->callback([&] {
    Polyhedron p = polyhedron_from_json(load_json(polytope_path));
    EhrhartSeries es = ehrhart_series(p);
    Json hs = Json::array();
    for (const auto& h : es.hstar) hs.push_back(int_to_json(h));
    result = {{"format", 1}, {"hstar", hs}, {"ell", int_to_json(es.ell)}, {"d", es.d}};
  });

  auto* hst = app.add_subcommand("hstar", "h*-vector of an integral polytope");
  add_polytope(hst);
  add_out(hst);
  hst->callback([&] {
    Polyhedron p = polyhedron_from_json(load_json(polytope_path));
    int d = affine_dimension(p);
    RatVec h = hstar_vector(ehrhart_qp(p, QpMethod::HStar), d);
    Json hs = Json::array();
    for (const auto& q : h) hs.push_back(value_json(q));
    result = {{"format", 1}, {"hstar", hs}};
  });

  auto* fst = app.add_subcommand("fstar", "f*-vector of an integral polytope");
  add_polytope(fst);
  add_out(fst);
  fst->callback([&] {
    Polyhedron p = polyhedron_from_json(load_json(polytope_path));
    int d = affine_dimension(p);
    RatVec f = fstar_vector(ehrhart_qp(p, QpMethod::HStar), d);
    Json fs = Json::array();
    for (const auto& q : f) fs.push_back(value_json(q));
    result = {{"format", 1}, {"fstar", fs}};
  });

  auto* rec = app.add_subcommand("reciprocity", "interior count via evaluation at -k");
  add_polytope(rec);
  add_eval(rec, true);
  add_out(rec);
  rec->callback([&] {
    Polyhedron p = polyhedron_from_json(load_json(polytope_path));
    QuasiPolynomial qp = ehrhart_qp(p, QpMethod::Interpolation);
    Int inner = reciprocity(qp, eval_k);
    if (affine_dimension(p) % 2 == 1) inner = -inner;
    result = {{"format", 1}, {"value", int_to_json(inner)}};
  });

  auto* chrom = app.add_subcommand("chromatic", "chromatic polynomial of a graph");
  chrom->add_option("--graph", graph_path, "graph JSON file")->required();
  add_eval(chrom, false);
  add_out(chrom);
  chrom->callback([&] {
    Graph g = graph_from_json(load_json(graph_path));
    QuasiPolynomial qp = chromatic_qp(g);
    result = have_eval ? Json{{"format", 1}, {"value", value_json(qp_evaluate(qp, eval_k))}}
                       : qp_result(qp);
  });

  auto* part = app.add_subcommand("partitions", "partitions of k into at most m parts");
  part->add_option("--m", m, "maximum number of parts")->required()->check(CLI::PositiveNumber);
  add_eval(part, false);
  add_out(part);
  part->callback([&] {
    QuasiPolynomial qp = restricted_partition_qp(int(m));
    result = have_eval ? Json{{"format", 1}, {"value", value_json(qp_evaluate(qp, eval_k))}}
                       : qp_result(qp);
  });

  auto* flow = app.add_subcommand("flow", "nowhere-zero modular flow counting function");
  flow->add_option("--graph", graph_path, "directed graph JSON file")->required();
  add_eval(flow, false);
  add_out(flow);
  flow->callback([&] {
    Graph g = graph_from_json(load_json(graph_path));
    QuasiPolynomial qp = modular_flow_qp(g);
    result = have_eval ? Json{{"format", 1}, {"value", value_json(qp_evaluate(qp, eval_k))}}
                       : qp_result(qp);
  });

  auto* sched = app.add_subcommand("schedule", "scheduling counting function");
  sched->add_option("--problem", problem_path, "scheduling problem JSON file")->required();
  add_eval(sched, false);
  add_out(sched);
  sched->callback([&] {
    SchedulingProblem s = scheduling_from_json(load_json(problem_path));
    QuasiPolynomial qp = scheduling_qp(s);
    result = have_eval ? Json{{"format", 1}, {"value", value_json(qp_evaluate(qp, eval_k))}}
                       : qp_result(qp);
  });

  auto* gcd_cmd = app.add_subcommand("gcd", "gcd certificate from lattice geometry");
  gcd_cmd->add_option("--a", a)->required()->check(CLI::PositiveNumber);
  gcd_cmd->add_option("--b", b)->required()->check(CLI::PositiveNumber);
  gcd_cmd->add_option("--plot", plot_base, "also emit <base>.svg/.csv of coprime rays");
  gcd_cmd->add_option("--bound", bound, "ray plot range")->check(CLI::PositiveNumber);
  add_out(gcd_cmd);
  gcd_cmd->callback([&] {
    GcdCertificate c = gcd_certificate(a, b);
    result = {{"format", 1},
              {"g", int_to_json(c.g)},
              {"segment_points", int_to_json(c.segment_points)},
              {"closest", {int_to_json(c.closest.first), int_to_json(c.closest.second)}},
              {"bezout", {int_to_json(c.bezout.first), int_to_json(c.bezout.second)}}};
    if (!plot_base.empty()) {
      PlotParams params;
      params.bound = int(bound);
      auto [svg, csv] = emit_plot(PlotKind::GcdRays, params, plot_base);
      result["files"] = {svg, csv};
    }
  });

  auto* sb = app.add_subcommand("sternbrocot", "planar Stern-Brocot tree");
  sb->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  sb->add_option("--plot", plot_base, "also emit <base>.svg/.csv");
  add_out(sb);
  sb->callback([&] {
    SternBrocotTree tree = stern_brocot_embedding(int(depth));
    Json nodes = Json::array();
    for (const auto& n : tree.nodes)
      nodes.push_back(
          {{"x", int_to_json(n.x)}, {"y", int_to_json(n.y)}, {"parent", n.parent}});
    result = {{"format", 1}, {"nodes", nodes}};
    if (!plot_base.empty()) {
      PlotParams params;
      params.depth = int(depth);
      auto [svg, csv] = emit_plot(PlotKind::SternBrocot, params, plot_base);
      result["files"] = {svg, csv};
    }
  });

  auto* stair = app.add_subcommand("staircase", "staircase decomposition of a lattice triangle");
  stair->add_option("--a", a)->required()->check(CLI::PositiveNumber);
  stair->add_option("--b", b)->required()->check(CLI::PositiveNumber);
  stair->add_option("--plot", plot_base, "also emit <base>.svg/.csv");
  add_out(stair);
  stair->callback([&] {
    StaircaseDecomposition dec = staircase_decomposition(a, b);
    Json pieces = Json::array();
    for (const auto& pc : dec.pieces) {
      const auto& t = pc.transform;
      pieces.push_back(
          {{"offset", {int_to_json(pc.offset[0]), int_to_json(pc.offset[1])}},
           {"size", int_to_json(pc.size)},
           {"transform",
            {{int_to_json(t.at(0, 0)), int_to_json(t.at(0, 1))},
             {int_to_json(t.at(1, 0)), int_to_json(t.at(1, 1))}}}});
    }
    result = {{"format", 1},
              {"a", int_to_json(dec.a)},
              {"b", int_to_json(dec.b)},
              {"pieces", pieces}};
    if (!plot_base.empty()) {
      PlotParams params;
      params.a = a;
      params.b = b;
      auto [svg, csv] = emit_plot(PlotKind::Staircase, params, plot_base);
      result["files"] = {svg, csv};
    }
  });

  auto* oc = app.add_subcommand("oracle-count", "brute-force count by direct enumeration");
  add_polytope(oc);
  oc->add_option("--dilate", dilate, "dilation factor")->check(CLI::PositiveNumber);
  oc->add_flag("--interior", interior, "count the relative interior instead");
  add_out(oc);
  oc->callback([&] {
    Polyhedron p = polyhedron_from_json(load_json(polytope_path));
    Int n = interior ? count_interior(p, dilate) : count_dilate(p, dilate);
    result = {{"format", 1}, {"count", int_to_json(n)}};
  });

  try {
    check_threads_env();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::string text = result.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
  }
  return 0;
}
