#include "mwbs/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mwbs/decomposition.hpp"
#include "mwbs/dp_solver.hpp"
#include "mwbs/eptas.hpp"
#include "mwbs/generate.hpp"
#include "mwbs/io.hpp"
#include "mwbs/kernel.hpp"
#include "mwbs/oracle.hpp"

namespace mwbs {

namespace {

// Raised for bad input files or infeasible requests; maps to exit code 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) { return decode_instance(read_file(path)); }

const char* kind_name(EmbeddingError::Kind k) {
  switch (k) {
    case EmbeddingError::Kind::kMalformed: return "malformed";
    case EmbeddingError::Kind::kDartMismatch: return "dart_mismatch";
    case EmbeddingError::Kind::kSelfLoop: return "self_loop";
    case EmbeddingError::Kind::kNonpositiveWeight: return "nonpositive_weight";
    case EmbeddingError::Kind::kEuler: return "euler";
  }
  return "unknown";
}

Weight parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_weight(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected a rational p/q, got '" + text + "'");
  }
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const Json& doc, const std::string& path) { emit_text(doc.dump(2) + "\n", path); }

  void emit_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Failure("cannot write " + path);
    f << text;
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

struct GenOptions {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::string bias = "1/2", weights = "1:4", density = "triangulation", p = "1/2";
};

GenParams to_params(const GenOptions& o) {
  GenParams p;
  p.n = o.n;
  p.seed = o.seed;
  p.orientation_bias = parse_rational_flag(o.bias, "--bias");
  auto colon = o.weights.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--weights", "expected lo:hi");
  p.weight_lo = parse_rational_flag(o.weights.substr(0, colon), "--weights");
  p.weight_hi = parse_rational_flag(o.weights.substr(colon + 1), "--weights");
  p.density = o.density == "sparse" ? Density::kSparse : Density::kTriangulation;
  p.sparse_p = parse_rational_flag(o.p, "--p");
  return p;
}

Solution solve_with(const Instance& inst, const std::string& method, const std::string& decomp_path) {
  if (method == "oracle") return brute_force_mwbs(inst);
  if (method == "subexp") return solve_subexponential(inst);
  if (method == "dp") {
    if (decomp_path.empty()) return solve_by_components(inst);
    auto d = decomposition_from_json(parse_json(read_file(decomp_path)));
    return solve_dp(inst, d);
  }
  // auto
  if (inst.edge_count() <= OracleBudget{}.max_edges) return brute_force_mwbs(inst);
  return solve_subexponential(inst);
}

std::size_t dp_width(const Instance& inst) {
  std::size_t width = 0;
  for (const Subgraph& comp : connected_components(inst)) {
    if (star_center(comp.instance.graph)) continue;
    auto d = build_sphere_cut(comp.instance.graph, BuildStrategy::kGreedySweep);
    width = std::max(width, validate_decomposition(comp.instance.graph, d).width);
  }
  return width;
}

int bench(Runner& r, const std::string& suite, std::uint64_t seed, bool check_oracle, const std::string& path) {
  std::vector<std::pair<std::string, Instance>> instances;
  const bool small = suite == "small";
  for (std::size_t k = 0; k < (small ? 24u : 12u); ++k) {
    GenParams p;
    p.seed = seed + k;
    if (small) {
      p.n = 3 + k % 5;
      p.density = k % 2 ? Density::kSparse : Density::kTriangulation;
    } else {
      p.n = 20 + 4 * k;
      p.density = Density::kSparse;
      p.sparse_p = Weight(1, 3);
    }
    instances.emplace_back(suite + "-" + std::to_string(k), gen_instance(p));
  }
  std::ostringstream csv;
  csv << "instance,method,value,deleted,width,b,millis\n";
  bool agree = true;
  for (const auto& [name, inst] : instances) {
    const std::size_t b = bad_vertices(inst.graph).size();
    auto row = [&](const std::string& method, auto&& solve, const std::string& width) {
      auto t0 = std::chrono::steady_clock::now();
      Solution s = solve();
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      csv << name << ',' << method << ',' << format_weight(s.kept_weight) << ',' << format_weight(s.deleted_weight)
          << ',' << width << ',' << b << ',' << ms << '\n';
      return s.kept_weight;
    };
    Weight dp = row("dp", [&] { return solve_by_components(inst); }, std::to_string(dp_width(inst)));
    Weight sub = row("subexp", [&] { return solve_subexponential(inst); }, "");
    if (check_oracle && inst.edge_count() <= OracleBudget{}.max_edges) {
      Weight oracle = row("oracle", [&] { return brute_force_mwbs(inst); }, "");
      if (dp != oracle || sub != oracle) {
        agree = false;
        r.err() << name << ": solver value differs from the oracle\n";
      }
    }
  }
  r.emit_text(csv.str(), path);
  return agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  CLI::App app{"Maximum weighted bimodal subgraph solver"};
  app.name("mwbs");
  app.require_subcommand(1);
  int status = 0;
  std::string output;

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  GenOptions gopt;
  gen->add_option("--n", gopt.n, "Vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gopt.seed, "Random seed");
  gen->add_option("--bias", gopt.bias, "Chance an edge points from lower to higher id (p/q)");
  gen->add_option("--weights", gopt.weights, "Weight range lo:hi");
  gen->add_option("--density", gopt.density, "triangulation or sparse")
      ->check(CLI::IsMember({"triangulation", "sparse"}));
  gen->add_option("--p", gopt.p, "Sparse: chance a non-tree edge survives (p/q)");
  gen->add_option("-o,--output", output, "Output file");
  gen->callback([&] { runner.emit_text(encode_instance(gen_instance(to_params(gopt))) + "\n", output); });

  auto* validate = app.add_subcommand("validate", "Check an instance and optionally a solution");
  std::string instance_path, solution_path;
  validate->add_option("instance", instance_path)->required();
  validate->add_option("--solution", solution_path, "Solution document to re-certify");
  validate->callback([&] {
    Json report;
    Instance inst;
    try {
      inst = load_instance(instance_path);
    } catch (const EmbeddingError& e) {
      runner.emit({{"valid", false}, {"error", kind_name(e.kind())}, {"message", e.what()}}, output);
      status = 1;
      return;
    }
    std::size_t comps = 0;
    component_labels(inst.graph, &comps);
    report = {{"valid", true},
              {"vertices", inst.graph.vertex_count()},
              {"edges", inst.edge_count()},
              {"faces", inst.graph.face_count()},
              {"components", comps}};
    if (!solution_path.empty()) {
      Json doc = parse_json(read_file(solution_path));
      Solution sol = solution_from_json(doc);
      bool in_range = true;
      for (EdgeId e : sol.kept_edges) in_range = in_range && e < inst.edge_count();
      if (!in_range) throw Failure("solution names an edge outside the instance");
      auto kept = sol.kept_mask(inst.edge_count());
      auto cert = certificate(inst.graph, kept);
      bool bimodal = is_bimodal_subgraph(inst.graph, kept);
      Weight kw = 0;
      for (EdgeId e : sol.kept_edges) kw += inst.weights[e];
      bool matches = !doc.contains("certificate") || doc["certificate"] == Json(cert);
      bool weight_ok = kw == sol.kept_weight && total_weight(inst) - kw == sol.deleted_weight;
      report["solution"] = {{"bimodal", bimodal},
                            {"certificate", cert},
                            {"certificate_matches", matches},
                            {"weights_match", weight_ok}};
      if (!bimodal || !matches || !weight_ok) {
        report["valid"] = false;
        status = 1;
      }
    }
    runner.emit(report, output);
  });

  auto* stats = app.add_subcommand("stats", "Bad vertices, wedges and good edge-sections");
  stats->add_option("instance", instance_path)->required();
  stats->callback([&] {
    Instance inst = load_instance(instance_path);
    const PlaneDigraph& g = inst.graph;
    auto bad = bad_mask(g);
    std::vector<std::size_t> wedge_counts;
    std::size_t sections = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      wedge_counts.push_back(wedges(g, v).size());
      if (bad[v]) sections += good_edge_sections(g, v, bad).size();
    }
    runner.emit({{"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"faces", g.face_count()},
                 {"b", bad_vertices(g).size()},
                 {"bad_vertices", bad_vertices(g)},
                 {"wedges", wedge_counts},
                 {"sections", sections}},
                output);
  });

  auto* decomp = app.add_subcommand("decomp", "Build or validate a decomposition");
  decomp->require_subcommand(1);
  auto* dbuild = decomp->add_subcommand("build", "Build a decomposition of a connected instance");
  std::string strategy = "greedy";
  dbuild->add_option("instance", instance_path)->required();
  dbuild->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "bisect"}));
  dbuild->add_option("-o,--output", output, "Output file");
  dbuild->callback([&] {
    Instance inst = load_instance(instance_path);
    auto d = build_sphere_cut(inst.graph, strategy == "bisect" ? BuildStrategy::kRecursiveBisection
                                                                 : BuildStrategy::kGreedySweep);
    d.declared_width = validate_decomposition(inst.graph, d).width;
    runner.emit(decomposition_to_json(d), output);
  });
  auto* dvalidate = decomp->add_subcommand("validate", "Validate a decomposition against an instance");
  std::string decomp_path;
  dvalidate->add_option("instance", instance_path)->required();
  dvalidate->add_option("decomposition", decomp_path)->required();
  dvalidate->callback([&] {
    Instance inst = load_instance(instance_path);
    auto d = decomposition_from_json(parse_json(read_file(decomp_path)));
    auto rep = validate_decomposition(inst.graph, d);
    Json violations = Json::array();
    for (const auto& v : rep.violations) violations.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
    runner.emit({{"ok", rep.ok()}, {"width", rep.width}, {"violations", violations}}, output);
    if (!rep.ok()) status = 1;
  });

  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  std::string method = "auto";
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"oracle", "dp", "subexp", "auto"}));
  solve->add_option("--decomp", decomp_path, "Decomposition for --method dp");
  solve->add_option("-o,--output", output, "Output file");
  solve->callback([&] {
    Instance inst = load_instance(instance_path);
    runner.emit(solution_to_json(inst, solve_with(inst, method, decomp_path)), output);
  });

  auto* kernelize = app.add_subcommand("kernelize", "Reduce to the simple normal form");
  kernelize->add_option("instance", instance_path)->required();
  kernelize->add_option("-o,--output", output, "Output file");
  kernelize->callback([&] { runner.emit(reduced_to_json(reduce_to_simple(load_instance(instance_path))), output); });

  auto* compress = app.add_subcommand("compress", "Build the class instance and shrink it");
  bool no_shrink = false;
  compress->add_option("instance", instance_path)->required();
  compress->add_flag("--no-shrink", no_shrink, "Emit the class instance before shrinking");
  compress->add_option("-o,--output", output, "Output file");
  compress->callback([&] {
    CutInstance c = to_cut_instance(load_instance(instance_path));
    runner.emit(cut_instance_to_json(no_shrink ? c : shrink_cut_instance(c)), output);
  });

  auto* eptas = app.add_subcommand("eptas", "Layered approximation schemes");
  eptas->require_subcommand(1);
  std::string epsilon = "1/2";
  for (const char* variant : {"max", "min"}) {
    auto* sub = eptas->add_subcommand(variant, std::string("Approximate the ") + variant + " objective");
    sub->add_option("instance", instance_path)->required();
    sub->add_option("--epsilon", epsilon, "Accuracy p/q in (0, 1]");
    sub->add_option("-o,--output", output, "Output file");
    bool maximize = std::string(variant) == "max";
    sub->callback([&, maximize] {
      Weight eps = parse_rational_flag(epsilon, "--epsilon");
      if (eps <= 0 || eps > 1) throw CLI::ValidationError("--epsilon", "must lie in (0, 1]");
      Instance inst = load_instance(instance_path);
      auto rep = maximize ? eptas_max(inst, eps) : eptas_min(inst, eps);
      runner.emit(eptas_report_to_json(inst, rep), output);
    });
  }

  auto* bench_cmd = app.add_subcommand("bench", "Run a generated suite and print CSV");
  std::string suite = "small";
  std::uint64_t bench_seed = 1;
  bool check_oracle = false;
  bench_cmd->add_option("--suite", suite)->check(CLI::IsMember({"small", "medium"}));
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_flag("--check-oracle", check_oracle, "Compare each solver row with the exhaustive oracle");
  bench_cmd->add_option("-o,--output", output, "Output file");
  bench_cmd->callback([&] { status = bench(runner, suite, bench_seed, check_oracle, output); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EmbeddingError& e) {
    err << "invalid instance (" << kind_name(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}

}  // namespace mwbs
