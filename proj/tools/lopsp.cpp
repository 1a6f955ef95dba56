// Command-line front end: apply operations, classify them, inspect maps,
// dump the catalog and run the theorem verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "lopsp/apply.hpp"
#include "lopsp/catalog.hpp"
#include "lopsp/classify.hpp"
#include "lopsp/io.hpp"
#include "lopsp/typed_map.hpp"
#include "lopsp/verify.hpp"

using nlohmann::json;
using namespace lopsp;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

void emit(const std::optional<std::string>& path, const std::string& content) {
  if (path) write_file(*path, content);
  else std::cout << content;
}

// An operation argument is a catalog name or a .lopsp file path.
LopspOperation resolve_op(const std::string& spec) {
  for (const auto& name : catalog_names())
    if (name == spec) return catalog_entry(spec).op;
  return parse_rotsys(read_file(spec)).as_operation();
}

EmbeddedMap resolve_graph(const std::string& path) { return parse_rotsys(read_file(path)).map; }

json record_json(const CheckRecord& r) {
  return {{"check", r.check},
          {"host", r.host},
          {"op", r.op},
          {"verdict", r.pass ? "pass" : "fail"},
          {"witness", r.witness}};
}

json cell_json(const Table1Cell& c) {
  return {{"check", "table1"},
          {"host", c.row},
          {"op", c.col},
          {"verdict", c.verdict_yes == c.expected_yes ? "pass" : "fail"},
          {"witness", c.expected_yes ? "checks=" + std::to_string(c.checks) : c.witness}};
}

int run(int argc, char** argv) {
  CLI::App app{"lopsp-operations on embedded graphs"};
  app.require_subcommand(1);

  std::string op_spec, graph_path, cut_path = "minimal", suite;
  std::optional<std::string> out_path, bary_path, json_path, dump_dir;
  bool json_flag = false, list_flag = false;
  int k = 3;
  std::size_t max_vertices = 8;
  std::uint64_t seed = 1;

  auto* apply_cmd = app.add_subcommand("apply", "apply an operation to a graph");
  apply_cmd->add_option("--op", op_spec, "catalog name or .lopsp file")->required();
  apply_cmd->add_option("--graph", graph_path, "rotsys file")->required();
  apply_cmd->add_option("--cut-path", cut_path)->check(CLI::IsMember({"minimal", "first"}));
  apply_cmd->add_option("--out", out_path, "result rotsys file (default stdout)");
  apply_cmd->add_option("--emit-bary", bary_path, "also write the typed subdivision");

  auto* classify_cmd = app.add_subcommand("classify", "classify an operation");
  classify_cmd->add_option("--op", op_spec)->required();
  classify_cmd->add_flag("--json", json_flag);

  auto* check_cmd = app.add_subcommand("check", "test k-connectivity");
  check_cmd->add_option("--graph", graph_path)->required();
  check_cmd->add_option("--k", k)->required();

  auto* genus_cmd = app.add_subcommand("genus", "print the genus");
  genus_cmd->add_option("--graph", graph_path)->required();

  auto* dual_cmd = app.add_subcommand("dual", "write the dual map");
  dual_cmd->add_option("--graph", graph_path)->required();
  dual_cmd->add_option("--out", out_path)->required();

  auto* bary_cmd = app.add_subcommand("bary", "write the barycentric subdivision");
  bary_cmd->add_option("--graph", graph_path)->required();
  bary_cmd->add_option("--out", out_path)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "list or dump the built-in operations");
  catalog_cmd->add_flag("--list", list_flag);
  catalog_cmd->add_option("--dump", dump_dir, "write one .lopsp file per operation");

  auto* demo_cmd = app.add_subcommand("demo", "demonstrations");
  auto* counter_cmd = demo_cmd->add_subcommand("counterexample",
                                               "apply an operation to the pinned torus host");
  counter_cmd->add_option("--op", op_spec)->required();
  counter_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem suites");
  verify_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"main1", "main2", "simple", "table1", "all"}));
  verify_cmd->add_option("--max-vertices", max_vertices);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--json", json_path, "write the report as JSON");

  CLI11_PARSE(app, argc, argv);

  if (apply_cmd->parsed()) {
    const LopspOperation op = resolve_op(op_spec);
    const EmbeddedMap g = resolve_graph(graph_path);
    std::optional<CutPath> p;
    if (cut_path == "first") p = find_cut_path(op, CutPathStrategy::first);
    const auto r = apply_lopsp(op, g, p);
    emit(out_path, print_rotsys(r.result));
    if (bary_path) emit(bary_path, print_rotsys(r.b_result));
    return 0;
  }

  if (classify_cmd->parsed()) {
    const LopspOperation op = resolve_op(op_spec);
    const OperationClass c = classify(op);
    json j = {{"op", op.name}, {"class", to_string(c.tag)}};
    if (c.witness_edge) j["witness_edge"] = *c.witness_edge;
    if (!c.edge_path.empty()) j["edge_path"] = c.edge_path;
    if (json_flag) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "op=" << op.name << " class=" << to_string(c.tag);
      if (c.witness_edge) std::cout << " witness_edge=" << *c.witness_edge;
      std::cout << "\n";
    }
    return 0;
  }

  if (check_cmd->parsed()) {
    const EmbeddedMap g = resolve_graph(graph_path);
    const bool ok = is_k_connected(g, k);
    std::cout << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }

  if (genus_cmd->parsed()) {
    std::cout << genus(resolve_graph(graph_path)) << "\n";
    return 0;
  }

  if (dual_cmd->parsed()) {
    emit(out_path, print_rotsys(dual(resolve_graph(graph_path))));
    return 0;
  }

  if (bary_cmd->parsed()) {
    emit(out_path, print_rotsys(barycentric_subdivision(resolve_graph(graph_path))));
    return 0;
  }

  if (catalog_cmd->parsed()) {
    for (const auto& e : catalog()) {
      if (list_flag || !dump_dir)
        std::cout << e.name << " class=" << e.expected_class << " cube=" << e.cube_counts[0]
                  << "," << e.cube_counts[1] << "," << e.cube_counts[2] << "\n";
      if (dump_dir) write_file(*dump_dir + "/" + e.name + ".lopsp", print_rotsys(e.op));
    }
    return 0;
  }

  if (counter_cmd->parsed()) {
    const LopspOperation op = resolve_op(op_spec);
    const EmbeddedMap host = counterexample_torus();
    const auto r = apply_lopsp(op, host);
    const bool conn = is_k_connected(r.result, 3);
    std::cout << "host=" << host.name() << " genus=" << genus(host) << " op=" << op.name
              << " result_vertices=" << r.result.vertex_count()
              << " result_3connected=" << (conn ? "yes" : "no") << "\n";
    if (out_path) write_file(*out_path, print_rotsys(r.result));
    return 0;
  }

  // verify
  CorpusSpec spec;
  spec.max_vertices = max_vertices;
  spec.genus_set = {0, 1};
  spec.seed = seed;
  auto hosts = corpus_generate(spec);
  for (auto& h : standard_hosts()) hosts.push_back(std::move(h));

  json report = json::array();
  int rc = 0;
  auto run_suite = [&](const std::string& s) {
    try {
      if (s == "main1")
        for (const auto& r : check_theorem_main1_simple_dual(hosts).records)
          report.push_back(record_json(r));
      else if (s == "main2")
        for (const auto& r : check_theorem_main2(hosts).records) report.push_back(record_json(r));
      else if (s == "simple")
        for (const auto& r : check_theorem_simple(hosts).records) report.push_back(record_json(r));
      else
        for (const auto& c : table1_report(hosts)) report.push_back(cell_json(c));
    } catch (const TheoremViolation& e) {
      for (const auto& r : e.report.records) report.push_back(record_json(r));
      std::cerr << e.what() << "\n";
      rc = 1;
    } catch (const CellMismatch& e) {
      std::cerr << e.what() << "\n";
      rc = 1;
    }
  };
  if (suite == "all")
    for (const std::string s : {"main1", "main2", "simple", "table1"}) run_suite(s);
  else
    run_suite(suite);

  if (json_path) write_file(*json_path, report.dump(2) + "\n");
  std::size_t passes = 0;
  for (const auto& r : report)
    if (r["verdict"] == "pass") ++passes;
  std::cout << "suite=" << suite << " checks=" << report.size() << " passed=" << passes
            << " hosts=" << hosts.size() << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BuildError& e) {
    std::cerr << "invalid map: " << e.what() << "\n";
    return 2;
  } catch (const InvalidOperation& e) {
    std::cerr << "invalid operation: " << e.what() << "\n";
    return 2;
  } catch (const UnknownOperation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
