// Command-line front end: generate family graphs, construct optimal
// labellings, solve small instances exactly, evaluate bounds, verify
// labellings, and export DOT. All machine output is deterministic JSON.
//
// Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 internal error.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dispersal/bounds.hpp"
#include "dispersal/distance.hpp"
#include "dispersal/families.hpp"
#include "dispersal/graph.hpp"
#include "dispersal/io.hpp"
#include "dispersal/labelling.hpp"
#include "dispersal/solver.hpp"

namespace {

using namespace dispersal;

int to_int(const std::string& s) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw input_error("not an integer: '" + s + "'");
  return value;
}

void need_params(const std::string& family,
                 const std::vector<std::string>& params, std::size_t count) {
  if (params.size() != count)
    throw input_error("family '" + family + "' takes " +
                      std::to_string(count) + " parameter(s), got " +
                      std::to_string(params.size()));
}

std::vector<std::string> split_colon(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t at = 0;
  while (true) {
    std::size_t next = spec.find(':', at);
    parts.push_back(spec.substr(at, next - at));
    if (next == std::string::npos) break;
    at = next + 1;
  }
  return parts;
}

Graph build_family(const std::string& family,
                   const std::vector<std::string>& params) {
  if (family == "cycle") {
    need_params(family, params, 1);
    return cycle(to_int(params[0]));
  }
  if (family == "path") {
    need_params(family, params, 1);
    return path(to_int(params[0]));
  }
  if (family == "grid") {
    need_params(family, params, 2);
    return grid(to_int(params[0]), to_int(params[1]));
  }
  if (family == "hypercube") {
    need_params(family, params, 1);
    return hypercube(to_int(params[0]));
  }
  if (family == "cbt") {
    need_params(family, params, 1);
    return complete_binary_tree(to_int(params[0]));
  }
  if (family == "clique2paths") {
    need_params(family, params, 1);
    return clique_with_two_paths(to_int(params[0]));
  }
  if (family == "product") {
    need_params(family, params, 2);
    auto left = split_colon(params[0]);
    auto right = split_colon(params[1]);
    Graph g = build_family(left[0], {left.begin() + 1, left.end()});
    Graph h = build_family(right[0], {right.begin() + 1, right.end()});
    return cartesian_product(g, h);
  }
  throw input_error("unknown family '" + family +
                    "' (expected cycle, path, grid, hypercube, cbt, "
                    "clique2paths or product)");
}

/// Factor of a product labelling: needs a construction with a known
/// circular guarantee, so only paths and cycles qualify.
std::pair<Graph, Labelling> build_circular_factor(const std::string& spec) {
  auto parts = split_colon(spec);
  if (parts[0] == "path" && parts.size() == 2) {
    int m = to_int(parts[1]);
    return {path(m), label_path_circular(m)};
  }
  if (parts[0] == "cycle" && parts.size() == 2) {
    int n = to_int(parts[1]);
    return {cycle(n), label_cycle(n)};
  }
  throw input_error("product factors must be path:M or cycle:N, got '" + spec +
                    "'");
}

std::pair<Graph, Labelling> build_labelling(
    const std::string& family, const std::vector<std::string>& params,
    bool circular) {
  if (circular && family != "path" && family != "product")
    throw input_error("--circular labellings exist for paths and products only");
  if (family == "cycle") {
    need_params(family, params, 1);
    int n = to_int(params[0]);
    return {cycle(n), label_cycle(n)};
  }
  if (family == "path") {
    need_params(family, params, 1);
    int m = to_int(params[0]);
    return {path(m), circular ? label_path_circular(m) : label_path(m)};
  }
  if (family == "grid") {
    need_params(family, params, 2);
    int m = to_int(params[0]);
    int n = to_int(params[1]);
    return {grid(m, n), label_grid(m, n)};
  }
  if (family == "hypercube") {
    need_params(family, params, 1);
    int n = to_int(params[0]);
    return {hypercube(n), label_hypercube(n)};
  }
  if (family == "cbt") {
    need_params(family, params, 1);
    int d = to_int(params[0]);
    return {complete_binary_tree(d), label_complete_binary_tree(d)};
  }
  if (family == "product") {
    need_params(family, params, 2);
    auto [g, glab] = build_circular_factor(params[0]);
    auto [h, hlab] = build_circular_factor(params[1]);
    return {cartesian_product(g, h), label_product(glab, hlab)};
  }
  throw input_error("no constructive labelling for family '" + family + "'");
}

void emit(const std::string& out_path, const std::string& data) {
  if (out_path.empty())
    std::cout << data;
  else
    write_file(out_path, data);
}

struct Cli {
  // gen/label
  std::string family;
  std::vector<std::string> params;
  bool circular = false;
  std::string out;
  std::string dot;
  // solve/bound/verify/export-dot
  std::string graph_file;
  std::string labelling_file;
  std::int64_t budget_ms = -1;
  bool no_prune = false;
};

void cmd_gen(const Cli& c) {
  emit(c.out, graph_to_string(build_family(c.family, c.params)));
}

void cmd_label(const Cli& c) {
  auto [g, lab] = build_labelling(c.family, c.params, c.circular);
  emit(c.out, labelling_to_string(lab));
  if (!c.dot.empty()) write_file(c.dot, dot_export(g, &lab));
  std::cerr << dispersion_to_json(dispersion(g, lab)).dump() << "\n";
}

SearchOptions search_options(const Cli& c) {
  SearchOptions opt;
  opt.prune = !c.no_prune;
  if (c.budget_ms >= 0) opt.budget = std::chrono::milliseconds(c.budget_ms);
  return opt;
}

void cmd_solve(const Cli& c) {
  Graph g = load_graph(c.graph_file);
  SolveResult r =
      c.circular ? exact_dlo(g, search_options(c)) : exact_dl(g, search_options(c));
  emit(c.out, solve_result_to_json(r).dump() + "\n");
}

void cmd_bound(const Cli& c) {
  BoundsReport rep = bounds_report(load_graph(c.graph_file));
  emit(c.out, bounds_report_to_json_string(rep) + "\n");
  std::cerr << bounds_report_to_table(rep);
}

void cmd_verify(const Cli& c) {
  Graph g = load_graph(c.graph_file);
  Labelling lab = load_labelling(c.labelling_file);
  DispersionResult d = dispersion(g, lab);
  emit(c.out, dispersion_to_json(d).dump() + "\n");
}

void cmd_export_dot(const Cli& c) {
  Graph g = load_graph(c.graph_file);
  if (c.labelling_file.empty()) {
    emit(c.out, dot_export(g));
  } else {
    Labelling lab = load_labelling(c.labelling_file);
    validate_labelling(lab, g.n);
    emit(c.out, dot_export(g, &lab));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dispersed labellings: constructions, exact solver, bounds"};
  app.require_subcommand(1);
  Cli c;

  auto* gen = app.add_subcommand("gen", "generate a family graph as JSON");
  gen->add_option("family", c.family, "cycle|path|grid|hypercube|cbt|clique2paths|product")
      ->required();
  gen->add_option("params", c.params, "family parameters");
  gen->add_option("--out", c.out, "output file (default stdout)");
  gen->callback([&] { cmd_gen(c); });

  auto* label = app.add_subcommand("label", "construct an optimal labelling");
  label->add_option("family", c.family, "cycle|path|grid|hypercube|cbt|product")
      ->required();
  label->add_option("params", c.params, "family parameters");
  label->add_flag("--circular", c.circular,
                  "circular construction (paths; products are circular)");
  label->add_option("--out", c.out, "output file (default stdout)");
  label->add_option("--dot", c.dot, "also write annotated DOT here");
  label->callback([&] { cmd_label(c); });

  auto* solve = app.add_subcommand("solve", "exact dispersion number");
  solve->add_option("graph", c.graph_file, "graph JSON file")->required();
  solve->add_flag("--circular", c.circular, "circular variant");
  solve->add_option("--budget-ms", c.budget_ms, "time budget in milliseconds");
  solve->add_flag("--no-prune", c.no_prune, "disable search pruning");
  solve->add_option("--out", c.out, "output file (default stdout)");
  solve->callback([&] { cmd_solve(c); });

  auto* bound = app.add_subcommand("bound", "cheap upper/lower bounds");
  bound->add_option("graph", c.graph_file, "graph JSON file")->required();
  bound->add_option("--out", c.out, "output file (default stdout)");
  bound->callback([&] { cmd_bound(c); });

  auto* verify = app.add_subcommand("verify", "measure a labelling's dispersion");
  verify->add_option("graph", c.graph_file, "graph JSON file")->required();
  verify->add_option("labelling", c.labelling_file, "labelling JSON file")
      ->required();
  verify->add_option("--out", c.out, "output file (default stdout)");
  verify->callback([&] { cmd_verify(c); });

  auto* exp = app.add_subcommand("export-dot", "write the graph as DOT");
  exp->add_option("graph", c.graph_file, "graph JSON file")->required();
  exp->add_option("labelling", c.labelling_file, "optional labelling JSON file");
  exp->add_option("--out", c.out, "output file (default stdout)");
  exp->callback([&] { cmd_export_dot(c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const dispersal::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dispersal::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
